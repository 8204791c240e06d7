#pragma once

#include <stdexcept>
#include <string>

namespace blockade {

// Bad truncation or space description (n_max < 1, n_atoms not in {1, 2}).
class InvalidTruncation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidParameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An operation was called outside the regime it is defined for
// (e.g. Dicke vectors on a one-atom space, an amplitude system with the wrong drive).
class PreconditionViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnknownLabel : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed configuration file, unknown preset or bad command-line value.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The trace-constrained Liouvillian system is singular for every candidate row:
// the model has more than one steady state (conserved or dark sectors).
class DegenerateSteadyState : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IntegratorFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// g2(0) requested for a state whose photon number is below the threshold.
class UndefinedStatistics : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Zero denominator in a closed form, or a singular amplitude system.
class SingularSystem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace blockade
