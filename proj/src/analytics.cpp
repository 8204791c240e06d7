#include "blockade/analytics.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "blockade/errors.hpp"

namespace blockade::analytics {

namespace {

constexpr cplx I{0.0, 1.0};
const double kSqrt2 = std::sqrt(2.0);

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Steady state of i dC/dt = M C + source  =>  M C = -source.
Vec solve_amplitudes(const Mat& M, const Vec& source, const char* who) {
    Eigen::FullPivLU<Mat> lu(M);
    if (!lu.isInvertible()) {
        throw SingularSystem(std::string(who) + ": amplitude system is singular at these parameters");
    }
    return lu.solve(-source);
}

void require(bool cond, const std::string& message) {
    if (!cond) throw PreconditionViolation(message);
}

void require_phase_free(const SystemParams& p, const char* who) {
    require(p.drive_phase == 0.0, std::string(who) + ": amplitude formulas assume a real drive (drive_phase = 0)");
}

cplx checked_ratio(cplx num, cplx den, const char* who) {
    if (den == cplx(0.0)) throw SingularSystem(std::string(who) + ": zero denominator");
    return num / den;
}

}  // namespace

cplx AmplitudeSet::at(const std::string& label) const {
    const auto it = amplitudes.find(label);
    if (it == amplitudes.end()) throw UnknownLabel("AmplitudeSet: no amplitude for label '" + label + "'");
    return it->second;
}

double perturbative_g2(const AmplitudeSet& amps) {
    const bool one = amps.basis == AmplitudeBasis::OneAtomProduct;
    const cplx c1 = amps.at(one ? "g,1" : "gg,1");
    const cplx c2 = amps.at(one ? "g,2" : "gg,2");
    const double n1 = std::norm(c1);
    if (n1 == 0.0) throw UndefinedStatistics("perturbative_g2: single-photon amplitude vanishes");
    return 2.0 * std::norm(c2) / (n1 * n1);
}

AmplitudeSet amplitude_steady_one_atom_cavity(const SystemParams& p, Ordering ordering) {
    p.validate();
    require(p.n_atoms == 1 && p.drive == Drive::Cavity,
            "amplitude_steady_one_atom_cavity: needs one atom under cavity drive");
    require(p.delta_a == 0.0 && p.delta_c == 0.0, "amplitude_steady_one_atom_cavity: needs zero detunings");
    require_phase_free(p, "amplitude_steady_one_atom_cavity");

    const double g = p.g, k = p.kappa, gm = p.gamma, eta = p.eta;
    const double feedback = ordering == Ordering::Full ? 1.0 : 0.0;

    // unknowns: C_{g,1}, C_{g,2}, C_{e,0}, C_{e,1}
    Mat M(4, 4);
    M << -I * k / 2.0, feedback * kSqrt2 * eta, g, 0.0,
         kSqrt2 * eta, -I * k, 0.0, kSqrt2 * g,
         g, 0.0, -I * gm / 2.0, feedback * eta,
         0.0, kSqrt2 * g, eta, -I * (k + gm) / 2.0;
    Vec src = Vec::Zero(4);
    src(0) = eta;  // eta C_{g,0}

    const Vec c = solve_amplitudes(M, src, "amplitude_steady_one_atom_cavity");
    AmplitudeSet out;
    out.basis = AmplitudeBasis::OneAtomProduct;
    out.amplitudes = {{"g,0", 1.0}, {"g,1", c(0)}, {"g,2", c(1)}, {"e,0", c(2)}, {"e,1", c(3)}};
    return out;
}

cplx c_g2_closed_form(const SystemParams& p) {
    p.validate();
    require(p.n_atoms == 1 && p.drive == Drive::Cavity && p.delta_a == 0.0 && p.delta_c == 0.0,
            "c_g2_closed_form: needs one atom, cavity drive, zero detunings");
    const double g = p.g, k = p.kappa, gm = p.gamma, eta = p.eta;
    const double g2 = g * g, eta2 = eta * eta;
    const double X = 4 * eta2 - 8 * g2 + gm * gm + k * k + gm * k;
    const double num = 2 * kSqrt2 * eta2 * (-gm * gm - gm * k + 4 * g2 - 4 * eta2);
    const double den = (gm * k + 4 * g2) * (gm * k + 4 * g2 + k * k) + 4 * eta2 * X;
    return checked_ratio(num, den, "c_g2_closed_form");
}

double optimal_g(double gamma, double kappa, double eta) {
    if (gamma < 0.0 || kappa < 0.0 || eta < 0.0) throw InvalidParameters("optimal_g: rates must be >= 0");
    return 0.5 * std::sqrt(gamma * gamma + gamma * kappa + 4.0 * eta * eta);
}

AmplitudeSet amplitude_steady_two_atom_cavity(const SystemParams& p, Ordering ordering) {
    p.validate();
    require(p.n_atoms == 2 && p.drive == Drive::Cavity,
            "amplitude_steady_two_atom_cavity: needs two atoms under cavity drive");
    require(p.delta_a == 0.0 && p.delta_c == 0.0, "amplitude_steady_two_atom_cavity: needs zero detunings");
    require_phase_free(p, "amplitude_steady_two_atom_cavity");

    const double g = p.g, k = p.kappa, gm = p.gamma, eta = p.eta;
    const double feedback = ordering == Ordering::Full ? 1.0 : 0.0;

    // unknowns: C_{gg,1}, C_{gg,2}, C_{+,0}, C_{+,1}, C_{ee,0}
    Mat M(5, 5);
    M << -I * k / 2.0, feedback * kSqrt2 * eta, kSqrt2 * g, 0.0, 0.0,
         kSqrt2 * eta, -I * k, 0.0, 2.0 * g, 0.0,
         kSqrt2 * g, 0.0, -I * gm / 2.0, feedback * eta, 0.0,
         0.0, 2.0 * g, eta, -I * (k + gm) / 2.0, kSqrt2 * g,
         0.0, 0.0, 0.0, kSqrt2 * g, -I * gm;
    Vec src = Vec::Zero(5);
    src(0) = eta;

    const Vec c = solve_amplitudes(M, src, "amplitude_steady_two_atom_cavity");
    AmplitudeSet out;
    out.basis = AmplitudeBasis::TwoAtomDicke;
    out.amplitudes = {{"gg,0", 1.0}, {"gg,1", c(0)}, {"gg,2", c(1)}, {"+,0", c(2)}, {"+,1", c(3)}, {"ee,0", c(4)}};
    return out;
}

cplx c_gg2_two_atom_cavity(const SystemParams& p) {
    p.validate();
    require(p.n_atoms == 2 && p.drive == Drive::Cavity && p.delta_a == 0.0 && p.delta_c == 0.0,
            "c_gg2_two_atom_cavity: needs two atoms, cavity drive, zero detunings");
    const double g = p.g, k = p.kappa, gm = p.gamma, eta = p.eta;
    const double g2 = g * g, eta2 = eta * eta;
    const double num = 2 * kSqrt2 * gm * eta2 * (4 * g2 - gm * gm - gm * k - 4 * eta2);
    const double den = (gm * k + 8 * g2) * (gm * gm * k + gm * k * k + 8 * gm * g2 + 4 * g2 * k);
    return checked_ratio(num, den, "c_gg2_two_atom_cavity");
}

AmplitudeSet amplitude_steady_two_atom_driven(const SystemParams& p, Ordering ordering) {
    p.validate();
    require(p.n_atoms == 2 && p.drive == Drive::Atom,
            "amplitude_steady_two_atom_driven: needs two atoms under atom drive");
    require_phase_free(p, "amplitude_steady_two_atom_driven");

    const double g = p.g, k = p.kappa, gm = p.gamma, eta = p.eta, da = p.delta_a, dc = p.delta_c;
    const double feedback = ordering == Ordering::Full ? 1.0 : 0.0;

    // unknowns: C_{gg,1}, C_{gg,2}, C_{+,0}, C_{+,1}, C_{ee,0}
    Mat M(5, 5);
    M << -(I * k / 2.0 + dc), 0.0, kSqrt2 * g, feedback * kSqrt2 * eta, 0.0,
         0.0, -2.0 * dc - I * k, 0.0, 2.0 * g, 0.0,
         kSqrt2 * g, 0.0, -(da + I * gm / 2.0), 0.0, feedback * kSqrt2 * eta,
         kSqrt2 * eta, 2.0 * g, 0.0, -(da + dc + I * (gm + k) / 2.0), kSqrt2 * g,
         0.0, 0.0, kSqrt2 * eta, kSqrt2 * g, -(2.0 * da + I * gm);
    Vec src = Vec::Zero(5);
    src(2) = kSqrt2 * eta;  // sqrt(2) eta C_{gg,0}

    const Vec c = solve_amplitudes(M, src, "amplitude_steady_two_atom_driven");
    AmplitudeSet out;
    out.basis = AmplitudeBasis::TwoAtomDicke;
    out.amplitudes = {{"gg,0", 1.0}, {"gg,1", c(0)}, {"gg,2", c(1)}, {"+,0", c(2)}, {"+,1", c(3)}, {"ee,0", c(4)}};
    return out;
}

DetunedAmplitudes closed_form_two_atom_detuned(const SystemParams& p) {
    p.validate();
    require(p.n_atoms == 2 && p.drive == Drive::Atom, "closed_form_two_atom_detuned: needs two atoms under atom drive");
    const double g = p.g, k = p.kappa, gm = p.gamma, eta = p.eta, da = p.delta_a, dc = p.delta_c;
    const double g2 = g * g, eta2 = eta * eta;

    const cplx X = da * (-4.0 * dc - 2.0 * I * k) - 2.0 * I * gm * dc + gm * k + 8.0 * g2;
    const cplx Y = -4.0 * da * da * (k - 2.0 * I * dc) + gm * gm * k - 4.0 * gm * dc * dc -
                   2.0 * I * dc * (gm * gm + 2.0 * gm * k + 4.0 * g2) + gm * k * k + 8.0 * gm * g2 + 4.0 * g2 * k;
    const cplx Z = -4.0 * I * dc * (gm + k) - 4.0 * dc * dc + 2.0 * gm * k + 8.0 * g2 + k * k;
    const cplx common = X * (Y - 2.0 * I * da * Z);

    DetunedAmplitudes out;
    out.c_gg2 = checked_ratio(16.0 * kSqrt2 * g2 * eta2 * (-2.0 * I * (2.0 * da + dc) + 2.0 * gm + k), common,
                              "closed_form_two_atom_detuned");
    out.c_gg1 = checked_ratio(-8.0 * g * eta, 8.0 * g2 - da * (4.0 * dc + 2.0 * I * k) - 2.0 * I * gm * dc + gm * k,
                              "closed_form_two_atom_detuned");
    out.c_plus1 = checked_ratio(
        8.0 * kSqrt2 * g * eta2 * (k - 2.0 * I * dc) * (2.0 * (2.0 * da + dc) + I * (2.0 * gm + k)), common,
        "closed_form_two_atom_detuned");
    return out;
}

ApproxG2 g2_approx_detuned(const SystemParams& p) {
    p.validate();
    require(p.n_atoms == 2 && p.drive == Drive::Atom, "g2_approx_detuned: needs two atoms under atom drive");
    const double g = p.g, k = p.kappa, gm = p.gamma, da = p.delta_a, dc = p.delta_c;
    const double g2 = g * g;

    const double re = -8.0 * da * dc * (gm + k) - 4.0 * k * da * da + gm * gm * k - 4.0 * gm * dc * dc + gm * k * k +
                      8.0 * gm * g2 + 4.0 * g2 * k;
    const double im = 8.0 * da * da * dc - 2.0 * da * (-4.0 * dc * dc + 2.0 * gm * k + 8.0 * g2 + k * k) -
                      2.0 * dc * (gm * gm + 2.0 * gm * k + 4.0 * g2);
    const double D = re * re + im * im;
    if (D == 0.0) throw SingularSystem("g2_approx_detuned: zero denominator");

    const double s = 2.0 * da + dc;
    const double c = 8.0 * g2 - 4.0 * da * dc;
    ApproxG2 out;
    out.value = s * s * c * c / D;

    const double smallest_detuning = std::min(std::abs(da), std::abs(dc));
    const double ratio = smallest_detuning == 0.0 ? INFINITY : std::max(gm, k) / smallest_detuning;
    if (ratio > kDetunedValidityRatio) {
        out.valid = false;
        out.warning = "outside the large-detuning regime: max(gamma, kappa)/min(|delta_a|, |delta_c|) = " +
                      std::to_string(ratio) + " > " + std::to_string(kDetunedValidityRatio);
    }
    return out;
}

BlockadeConditions blockade_conditions(double g, double delta_c) {
    if (delta_c == 0.0) {
        throw PreconditionViolation("blockade_conditions: delta_c = 0 leaves the conventional condition undefined");
    }
    return {2.0 * g * g / delta_c, -delta_c / 2.0};
}

double golden_rule_weight(double omega_a, double omega_c, double omega_p) {
    const double two_photon = omega_a + omega_c - 2.0 * omega_p;
    const double one_photon = omega_a - omega_p;
    if (two_photon == 0.0 || one_photon == 0.0) {
        throw SingularSystem("golden_rule_weight: probe frequency sits on a pole");
    }
    const double amp = 1.0 / two_photon + 1.0 / one_photon;
    return amp * amp;
}

std::optional<double> analytic_g2(const SystemParams& p) {
    if (p.eta > kWeakDriveLimit * p.kappa || p.eta <= 0.0 || p.drive_phase != 0.0) return std::nullopt;
    const bool resonant = p.delta_a == 0.0 && p.delta_c == 0.0;
    try {
        if (p.n_atoms == 1 && p.drive == Drive::Cavity && resonant) {
            return perturbative_g2(amplitude_steady_one_atom_cavity(p));
        }
        if (p.n_atoms == 2 && p.drive == Drive::Cavity && resonant) {
            return perturbative_g2(amplitude_steady_two_atom_cavity(p));
        }
        if (p.n_atoms == 2 && p.drive == Drive::Atom) {
            return perturbative_g2(amplitude_steady_two_atom_driven(p));
        }
    } catch (const SingularSystem&) {
        return std::nullopt;
    } catch (const UndefinedStatistics&) {
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace blockade::analytics
