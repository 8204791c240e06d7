#pragma once

// Truncated cavity + atom Hilbert space and the elementary operators on it.
//
// Conventions used everywhere in the library:
//   * subsystem order is cavity (x) atom_1 [(x) atom_2], Kronecker-ordered, so the
//     composite index of |n, a1, a2> is n * 2^N + a1 * 2^(N-1) + a2 for N atoms;
//   * the atomic basis order is (|g>, |e>), i.e. |g> = 0 and |e> = 1.

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "blockade/errors.hpp"

namespace blockade {

using Index = Eigen::Index;

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using ComplexMatrix = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using ComplexVector = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, 1>;

// Operators are plain dense complex matrices; their dimension is rows().
template <typename Real = double>
using Operator = ComplexMatrix<Real>;

enum class Subsystem { Cavity, Atom1, Atom2 };

struct SpaceSpec {
    int n_atoms = 1;
    int n_max = 5;

    static SpaceSpec make(int n_atoms, int n_max) {
        SpaceSpec s{n_atoms, n_max};
        s.validate();
        return s;
    }

    void validate() const {
        if (n_atoms != 1 && n_atoms != 2) {
            throw InvalidTruncation("SpaceSpec: n_atoms must be 1 or 2, got " + std::to_string(n_atoms));
        }
        if (n_max < 1) {
            throw InvalidTruncation("SpaceSpec: n_max must be >= 1, got " + std::to_string(n_max));
        }
    }

    Index cavity_dim() const { return n_max + 1; }
    Index atomic_dim() const { return Index{1} << n_atoms; }
    Index dim() const { return cavity_dim() * atomic_dim(); }

    // Composite index of |n, atoms>; `atoms` packs the atomic states with atom_1 as
    // the most significant bit (so for two atoms "eg" -> 0b10).
    Index index(int n, unsigned atoms) const { return Index{n} * atomic_dim() + Index(atoms); }

    friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;
};

template <typename Real = double>
Operator<Real> fock_annihilation(int n_max) {
    if (n_max < 1) {
        throw InvalidTruncation("fock_annihilation: n_max must be >= 1, got " + std::to_string(n_max));
    }
    Operator<Real> a = Operator<Real>::Zero(n_max + 1, n_max + 1);
    for (int n = 1; n <= n_max; ++n) {
        a(n - 1, n) = std::sqrt(Real(n));
    }
    return a;
}

// sigma = |g><e| in the (|g>, |e>) basis.
template <typename Real = double>
Operator<Real> atom_lowering() {
    Operator<Real> s = Operator<Real>::Zero(2, 2);
    s(0, 1) = Real(1);
    return s;
}

// Lift a single-subsystem operator onto the composite space.
template <typename Real>
Operator<Real> embed(const Operator<Real>& op, Subsystem slot, const SpaceSpec& spec) {
    spec.validate();
    const int slot_index = static_cast<int>(slot);
    if (slot_index > spec.n_atoms) {
        throw std::invalid_argument("embed: slot out of range for a " + std::to_string(spec.n_atoms) +
                                    "-atom space");
    }
    std::vector<Index> dims{spec.cavity_dim()};
    for (int j = 0; j < spec.n_atoms; ++j) dims.push_back(2);

    if (op.rows() != op.cols() || op.rows() != dims[slot_index]) {
        throw DimensionMismatch("embed: operator dimension " + std::to_string(op.rows()) +
                                " does not match subsystem dimension " + std::to_string(dims[slot_index]));
    }

    Operator<Real> result = Operator<Real>::Identity(1, 1);
    for (std::size_t k = 0; k < dims.size(); ++k) {
        const Operator<Real> factor = (static_cast<int>(k) == slot_index)
                                          ? op
                                          : Operator<Real>(Operator<Real>::Identity(dims[k], dims[k]));
        Operator<Real> next = Eigen::kroneckerProduct(result, factor).eval();
        result = std::move(next);
    }
    return result;
}

// Cavity annihilation operator on the full space.
template <typename Real = double>
Operator<Real> cavity_annihilation(const SpaceSpec& spec) {
    return embed<Real>(fock_annihilation<Real>(spec.n_max), Subsystem::Cavity, spec);
}

// Lowering operator of atom j (0-based) on the full space.
template <typename Real = double>
Operator<Real> atom_lowering_on(const SpaceSpec& spec, int j) {
    if (j < 0 || j >= spec.n_atoms) {
        throw std::invalid_argument("atom_lowering_on: atom index out of range");
    }
    return embed<Real>(atom_lowering<Real>(), j == 0 ? Subsystem::Atom1 : Subsystem::Atom2, spec);
}

// Symmetric / antisymmetric Dicke states |+-> = (|eg> +- |ge>)/sqrt(2), tensored with |n>.
template <typename Real = double>
struct DickeVectors {
    std::vector<ComplexVector<Real>> plus;   // plus[n]  = |+, n>
    std::vector<ComplexVector<Real>> minus;  // minus[n] = |-, n>
};

template <typename Real = double>
DickeVectors<Real> dicke_vectors(const SpaceSpec& spec) {
    spec.validate();
    if (spec.n_atoms != 2) {
        throw PreconditionViolation("dicke_vectors: requires a two-atom space");
    }
    const Real r = Real(1) / std::sqrt(Real(2));
    DickeVectors<Real> out;
    for (int n = 0; n <= spec.n_max; ++n) {
        ComplexVector<Real> p = ComplexVector<Real>::Zero(spec.dim());
        ComplexVector<Real> m = ComplexVector<Real>::Zero(spec.dim());
        p(spec.index(n, 0b10)) = r;  // |eg>
        p(spec.index(n, 0b01)) = r;  // |ge>
        m(spec.index(n, 0b10)) = r;
        m(spec.index(n, 0b01)) = -r;
        out.plus.push_back(std::move(p));
        out.minus.push_back(std::move(m));
    }
    return out;
}

// State labels of the form "<atomic>,<n>": atomic part is one of g, e (one atom) or
// gg, ge, eg, ee, +, - (two atoms).
struct StateLabel {
    std::string atomic;
    int photons = 0;

    std::string str() const { return atomic + "," + std::to_string(photons); }
};

inline StateLabel parse_label(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos || comma == 0 || comma + 1 >= text.size()) {
        throw UnknownLabel("malformed state label '" + std::string(text) + "'");
    }
    StateLabel label;
    label.atomic = std::string(text.substr(0, comma));
    int n = 0;
    for (char c : text.substr(comma + 1)) {
        if (c < '0' || c > '9') throw UnknownLabel("malformed photon number in '" + std::string(text) + "'");
        n = n * 10 + (c - '0');
    }
    label.photons = n;
    return label;
}

template <typename Real = double>
ComplexVector<Real> basis_state(const SpaceSpec& spec, const StateLabel& label) {
    spec.validate();
    if (label.photons > spec.n_max) {
        throw UnknownLabel("label '" + label.str() + "' exceeds the truncation n_max=" + std::to_string(spec.n_max));
    }
    ComplexVector<Real> v = ComplexVector<Real>::Zero(spec.dim());
    const int n = label.photons;
    const std::string& a = label.atomic;
    if (spec.n_atoms == 1) {
        if (a == "g") { v(spec.index(n, 0)) = 1; return v; }
        if (a == "e") { v(spec.index(n, 1)) = 1; return v; }
    } else {
        if (a == "gg") { v(spec.index(n, 0b00)) = 1; return v; }
        if (a == "ge") { v(spec.index(n, 0b01)) = 1; return v; }
        if (a == "eg") { v(spec.index(n, 0b10)) = 1; return v; }
        if (a == "ee") { v(spec.index(n, 0b11)) = 1; return v; }
        if (a == "+" || a == "-") {
            const auto dicke = dicke_vectors<Real>(spec);
            return a == "+" ? dicke.plus[n] : dicke.minus[n];
        }
    }
    throw UnknownLabel("unknown atomic label '" + a + "' for a " + std::to_string(spec.n_atoms) + "-atom space");
}

template <typename Real = double>
ComplexVector<Real> basis_state(const SpaceSpec& spec, std::string_view label) {
    return basis_state<Real>(spec, parse_label(label));
}

// Labels of an orthonormal basis of the whole space: product states for one atom,
// the collective basis {gg, +, -, ee} for two atoms.
inline std::vector<std::string> complete_labels(const SpaceSpec& spec) {
    spec.validate();
    const std::vector<std::string> atomic =
        spec.n_atoms == 1 ? std::vector<std::string>{"g", "e"} : std::vector<std::string>{"gg", "+", "-", "ee"};
    std::vector<std::string> out;
    for (int n = 0; n <= spec.n_max; ++n) {
        for (const auto& a : atomic) out.push_back(a + "," + std::to_string(n));
    }
    return out;
}

}  // namespace blockade
