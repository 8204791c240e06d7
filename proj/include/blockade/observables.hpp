#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "blockade/errors.hpp"
#include "blockade/hilbert.hpp"
#include "blockade/model.hpp"
#include "blockade/steady.hpp"

namespace blockade {

template <typename Real>
Complex<Real> expectation(const Operator<Real>& op, const DensityMatrix<Real>& rho) {
    if (op.rows() != rho.dim() || op.cols() != rho.dim()) {
        throw DimensionMismatch("expectation: operator dimension " + std::to_string(op.rows()) +
                                " does not match density matrix dimension " + std::to_string(rho.dim()));
    }
    // Tr(op rho) without forming the product.
    return op.cwiseProduct(rho.matrix().transpose()).sum();
}

template <typename Real>
Real mean_photons(const DensityMatrix<Real>& rho, const SpaceSpec& spec) {
    if (rho.dim() != spec.dim()) throw DimensionMismatch("mean_photons: density matrix does not live on this space");
    const Operator<Real> a = cavity_annihilation<Real>(spec);
    return expectation<Real>(a.adjoint() * a, rho).real();
}

inline constexpr double kDefaultPhotonThreshold = 1e-12;

// <a^dag a^dag a a> / <a^dag a>^2
template <typename Real>
Real g2_zero(const DensityMatrix<Real>& rho, const SpaceSpec& spec, double threshold = kDefaultPhotonThreshold) {
    if (rho.dim() != spec.dim()) throw DimensionMismatch("g2_zero: density matrix does not live on this space");
    const Operator<Real> a = cavity_annihilation<Real>(spec);
    const Operator<Real> ad = a.adjoint();
    const Real n = expectation<Real>(ad * a, rho).real();
    if (!(n > Real(threshold))) {
        throw UndefinedStatistics("g2_zero: mean photon number " + std::to_string(double(n)) +
                                  " is below the threshold " + std::to_string(threshold));
    }
    const Real n2 = expectation<Real>(ad * ad * a * a, rho).real();
    // Clamp solver noise of order 1e-16 below zero; g2 is non-negative.
    return std::max(Real(0), n2 / (n * n));
}

// Output photon flux kappa <a^dag a>.
template <typename Real>
Real counting_rate(const DensityMatrix<Real>& rho, const SystemParams& params) {
    return Real(params.kappa) * mean_photons(rho, params.space());
}

template <typename Real>
Real dicke_population(const DensityMatrix<Real>& rho, const SpaceSpec& spec, std::string_view label) {
    if (rho.dim() != spec.dim()) throw DimensionMismatch("dicke_population: density matrix does not live on this space");
    const ComplexVector<Real> psi = basis_state<Real>(spec, label);
    return (psi.adjoint() * rho.matrix() * psi)(0, 0).real();
}

struct ObservableReport {
    std::optional<double> g2_zero;   // empty when the photon number is below threshold
    double mean_photons = 0.0;
    double counting_rate = 0.0;
    std::map<std::string, double> populations;
};

template <typename Real>
ObservableReport report(const DensityMatrix<Real>& rho, const SystemParams& params,
                        const std::vector<std::string>& population_labels = {}) {
    const SpaceSpec spec = params.space();
    ObservableReport r;
    r.mean_photons = double(mean_photons(rho, spec));
    r.counting_rate = double(params.kappa) * r.mean_photons;
    try {
        r.g2_zero = double(g2_zero(rho, spec));
    } catch (const UndefinedStatistics&) {
        r.g2_zero.reset();
    }
    for (const auto& label : population_labels) {
        r.populations[label] = double(dicke_population(rho, spec, label));
    }
    return r;
}

}  // namespace blockade
