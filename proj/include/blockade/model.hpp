#pragma once

// Driven Jaynes-Cummings (one atom) and Tavis-Cummings (two atoms) models in the
// frame rotating at the drive frequency, hbar = 1.
//
//   H = -delta_c a^dag a + sum_j [ -delta_a s_j^dag s_j + g (s_j a^dag + s_j^dag a) ] + H_d
//   H_d = eta (e^{i phi} a^dag + e^{-i phi} a)                  cavity drive
//   H_d = eta sum_j (e^{i phi} s_j^dag + e^{-i phi} s_j)        atom drive
//
// Dissipators use D[c] rho = (rate/2)(2 c rho c^dag - c^dag c rho - rho c^dag c), so
// kappa and gamma are intensity (energy) decay rates and amplitudes decay at rate/2.

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "blockade/errors.hpp"
#include "blockade/hilbert.hpp"

namespace blockade {

enum class Drive { Cavity, Atom };

inline const char* to_string(Drive d) { return d == Drive::Cavity ? "cavity" : "atom"; }

struct SystemParams {
    int n_atoms = 1;
    double g = 0.0;
    double kappa = 1.0;
    double gamma = 1.0;
    double eta = 0.01;
    double delta_a = 0.0;  // omega_d - omega_a
    double delta_c = 0.0;  // omega_d - omega_c
    Drive drive = Drive::Cavity;
    int n_max = 5;
    double drive_phase = 0.0;

    SpaceSpec space() const { return SpaceSpec::make(n_atoms, n_max); }

    void validate() const {
        space();
        if (!(kappa > 0.0)) throw InvalidParameters("SystemParams: kappa must be > 0");
        if (!(gamma >= 0.0)) throw InvalidParameters("SystemParams: gamma must be >= 0");
        if (!(eta >= 0.0)) throw InvalidParameters("SystemParams: eta must be >= 0");
        if (!(g >= 0.0)) throw InvalidParameters("SystemParams: g must be >= 0");
        for (double v : {delta_a, delta_c, drive_phase}) {
            if (!std::isfinite(v)) throw InvalidParameters("SystemParams: detunings and phase must be finite");
        }
    }

    // Same physics with every frequency divided by kappa (kappa becomes 1).
    SystemParams in_kappa_units() const {
        SystemParams p = *this;
        p.g /= kappa;
        p.gamma /= kappa;
        p.eta /= kappa;
        p.delta_a /= kappa;
        p.delta_c /= kappa;
        p.kappa = 1.0;
        return p;
    }
};

// Truncation used when none is given: weak drive keeps few photons.
inline int default_n_max(double eta_over_kappa) { return eta_over_kappa <= 0.05 ? 5 : 10; }

template <typename Real = double>
Operator<Real> build_hamiltonian(const SystemParams& params) {
    params.validate();
    const SpaceSpec spec = params.space();
    const Operator<Real> a = cavity_annihilation<Real>(spec);
    const Operator<Real> ad = a.adjoint();
    const Complex<Real> phase = std::polar(Real(1), Real(params.drive_phase));

    Operator<Real> H = Real(-params.delta_c) * (ad * a);
    for (int j = 0; j < spec.n_atoms; ++j) {
        const Operator<Real> s = atom_lowering_on<Real>(spec, j);
        const Operator<Real> sd = s.adjoint();
        H += Real(-params.delta_a) * (sd * s);
        H += Real(params.g) * (s * ad + sd * a);
        if (params.drive == Drive::Atom) {
            H += Real(params.eta) * (phase * sd + std::conj(phase) * s);
        }
    }
    if (params.drive == Drive::Cavity) {
        H += Real(params.eta) * (phase * ad + std::conj(phase) * a);
    }
    // Exact Hermiticity: the sums above are Hermitian only up to the rounding of
    // each separate product, so copy the upper triangle onto the lower one.
    for (Index j = 0; j < H.cols(); ++j) {
        H(j, j) = Complex<Real>(H(j, j).real(), Real(0));
        for (Index i = j + 1; i < H.rows(); ++i) H(i, j) = std::conj(H(j, i));
    }
    return H;
}

template <typename Real = double>
struct CollapseChannel {
    Operator<Real> op;
    Real rate;
    std::string name;
};

// [(a, kappa), (s_1, gamma), (s_2, gamma)]; zero rates are kept as channels.
template <typename Real = double>
std::vector<CollapseChannel<Real>> collapse_operators(const SystemParams& params) {
    params.validate();
    const SpaceSpec spec = params.space();
    std::vector<CollapseChannel<Real>> channels;
    channels.push_back({cavity_annihilation<Real>(spec), Real(params.kappa), "cavity"});
    for (int j = 0; j < spec.n_atoms; ++j) {
        channels.push_back({atom_lowering_on<Real>(spec, j), Real(params.gamma), "atom" + std::to_string(j + 1)});
    }
    return channels;
}

// a^dag a + sum_j s_j^dag s_j
template <typename Real = double>
Operator<Real> excitation_number(const SpaceSpec& spec) {
    const Operator<Real> a = cavity_annihilation<Real>(spec);
    Operator<Real> N = a.adjoint() * a;
    for (int j = 0; j < spec.n_atoms; ++j) {
        const Operator<Real> s = atom_lowering_on<Real>(spec, j);
        N += s.adjoint() * s;
    }
    return N;
}

}  // namespace blockade
