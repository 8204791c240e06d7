#pragma once

// Weak-drive amplitude method: the wavefunction is truncated at two excitations,
// the amplitude equations i dC/dt = (H - i Gamma/2) C are solved in steady state with
// the ground amplitude pinned to 1, and photon statistics follow from
// g2(0) ~ 2 |C_2|^2 / |C_1|^4. Closed forms derived from the same systems are
// evaluated verbatim and serve as oracles for the master-equation numerics.

#include <complex>
#include <map>
#include <optional>
#include <string>

#include "blockade/model.hpp"

namespace blockade::analytics {

using cplx = std::complex<double>;

enum class AmplitudeBasis { OneAtomProduct, TwoAtomDicke };

// Full keeps every drive term of the truncated system (including the ones that feed
// higher-order amplitudes back into lower orders); Strict drops those feedback terms
// so each order is driven only by the one below it.
enum class Ordering { Full, Strict };

struct AmplitudeSet {
    AmplitudeBasis basis = AmplitudeBasis::OneAtomProduct;
    std::map<std::string, cplx> amplitudes;  // labels as in hilbert.hpp, e.g. "g,1", "+,1"

    cplx at(const std::string& label) const;
};

// Ground-state-normalized 2|C_2|^2/|C_1|^4 from the cavity amplitudes of the set
// ("g,1"/"g,2" or "gg,1"/"gg,2").
double perturbative_g2(const AmplitudeSet& amps);

// One atom, cavity drive, zero detunings. Returns g,0 (=1), g,1, g,2, e,0, e,1.
AmplitudeSet amplitude_steady_one_atom_cavity(const SystemParams& params, Ordering ordering = Ordering::Full);

// Closed-form C_{g,2} for one atom under cavity drive at zero detunings.
cplx c_g2_closed_form(const SystemParams& params);

// Coupling at which C_{g,2} vanishes: g = sqrt(gamma^2 + gamma kappa + 4 eta^2) / 2.
double optimal_g(double gamma, double kappa, double eta);

// Two atoms, cavity drive, zero detunings, restricted to the symmetric sector
// {gg,n; +,n; ee,0}. Returns gg,0 (=1), gg,1, gg,2, +,0, +,1, ee,0.
AmplitudeSet amplitude_steady_two_atom_cavity(const SystemParams& params, Ordering ordering = Ordering::Full);

// Leading-order closed-form C_{gg,2} for two atoms under cavity drive at zero detunings.
cplx c_gg2_two_atom_cavity(const SystemParams& params);

// Two atoms, atom drive, arbitrary detunings. Returns gg,0 (=1), gg,1, gg,2, +,0, +,1, ee,0.
AmplitudeSet amplitude_steady_two_atom_driven(const SystemParams& params, Ordering ordering = Ordering::Full);

struct DetunedAmplitudes {
    cplx c_gg2;
    cplx c_gg1;
    cplx c_plus1;
};

// Leading-order closed forms for the atom-driven, detuned two-atom system.
DetunedAmplitudes closed_form_two_atom_detuned(const SystemParams& params);

struct ApproxG2 {
    double value = 0.0;
    bool valid = true;     // false outside the large-detuning regime
    std::string warning;   // why `valid` is false
};

// Large-detuning g2(0) for the atom-driven two-atom system. `valid` is false (with a
// warning) when max(gamma, kappa) / min(|delta_a|, |delta_c|) > 0.2; the formula is
// still evaluated so its zeros can be inspected anywhere.
ApproxG2 g2_approx_detuned(const SystemParams& params);

inline constexpr double kDetunedValidityRatio = 0.2;

struct BlockadeConditions {
    double conventional_delta_a;   // delta_a delta_c = 2 g^2
    double interference_delta_a;   // delta_c = -2 delta_a
};

BlockadeConditions blockade_conditions(double g, double delta_c);

// Second-order golden-rule weight |1/(w_a + w_c - 2 w_p) + 1/(w_a - w_p)|^2 for
// populating |+,1> (overall constant dropped).
double golden_rule_weight(double omega_a, double omega_c, double omega_p);

// Drive strength (in units of kappa) up to which the amplitude method is trusted.
inline constexpr double kWeakDriveLimit = 0.01;

// Perturbative g2(0) for whichever amplitude system matches `params`, or nothing
// when none applies (one atom under atom drive, nonzero detunings with cavity drive,
// or a drive stronger than kWeakDriveLimit * kappa).
std::optional<double> analytic_g2(const SystemParams& params);

}  // namespace blockade::analytics
