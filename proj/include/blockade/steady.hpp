#pragma once

// Liouvillian superoperator, steady-state solve and fixed-step time propagation.
//
// Vectorization is column-major: vec(rho)[i + j*D] = rho(i, j), so that
// vec(A X B) = (B^T (x) A) vec(X). All superoperators in this file use it.

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "blockade/errors.hpp"
#include "blockade/hilbert.hpp"
#include "blockade/model.hpp"

namespace blockade {

template <typename Real>
using SparseComplexMatrix = Eigen::SparseMatrix<Complex<Real>, Eigen::ColMajor>;

template <typename Real = double>
struct Liouvillian {
    Index dim = 0;                      // Hilbert-space dimension D
    SparseComplexMatrix<Real> sparse;   // D^2 x D^2

    ComplexMatrix<Real> matrix() const { return ComplexMatrix<Real>(sparse); }
};

struct DensityCheck {
    double hermiticity_error = 0.0;  // max |rho - rho^dag|
    double trace_error = 0.0;        // |Tr rho - 1|
    double min_eigenvalue = 0.0;

    bool ok(double herm_tol = 1e-10, double trace_tol = 1e-10, double eig_floor = -1e-8) const {
        return hermiticity_error <= herm_tol && trace_error <= trace_tol && min_eigenvalue >= eig_floor;
    }
};

template <typename Real = double>
class DensityMatrix {
public:
    DensityMatrix() = default;

    explicit DensityMatrix(ComplexMatrix<Real> m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols()) throw DimensionMismatch("DensityMatrix: matrix must be square");
    }

    static DensityMatrix pure(const ComplexVector<Real>& psi) {
        return DensityMatrix(psi * psi.adjoint());
    }

    // |0><0| in the composite basis: vacuum with every atom in |g>.
    static DensityMatrix ground(Index dim) {
        ComplexMatrix<Real> m = ComplexMatrix<Real>::Zero(dim, dim);
        m(0, 0) = Real(1);
        return DensityMatrix(std::move(m));
    }

    const ComplexMatrix<Real>& matrix() const { return m_; }
    Index dim() const { return m_.rows(); }

    Complex<Real> trace() const { return m_.trace(); }

    Real hermiticity_error() const {
        return m_.rows() == 0 ? Real(0) : (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
    }

    Real min_eigenvalue() const {
        const ComplexMatrix<Real> h = (m_ + m_.adjoint()) / Real(2);
        Eigen::SelfAdjointEigenSolver<ComplexMatrix<Real>> es(h, Eigen::EigenvaluesOnly);
        return es.eigenvalues().minCoeff();
    }

    DensityCheck check() const {
        return {double(hermiticity_error()), double(std::abs(trace() - Complex<Real>(1))), double(min_eigenvalue())};
    }

private:
    ComplexMatrix<Real> m_;
};

template <typename Real>
ComplexVector<Real> vectorize(const ComplexMatrix<Real>& m) {
    return Eigen::Map<const ComplexVector<Real>>(m.data(), m.size());
}

template <typename Real>
ComplexMatrix<Real> unvectorize(const ComplexVector<Real>& v, Index dim) {
    if (v.size() != dim * dim) throw DimensionMismatch("unvectorize: size is not dim^2");
    return Eigen::Map<const ComplexMatrix<Real>>(v.data(), dim, dim);
}

// Row vector t with t . vec(X) = Tr X.
template <typename Real>
ComplexVector<Real> trace_functional(Index dim) {
    ComplexVector<Real> t = ComplexVector<Real>::Zero(dim * dim);
    for (Index i = 0; i < dim; ++i) t(i + i * dim) = Real(1);
    return t;
}

template <typename Real>
Liouvillian<Real> liouvillian(const Operator<Real>& H, const std::vector<CollapseChannel<Real>>& channels) {
    using Sparse = SparseComplexMatrix<Real>;
    const Index D = H.rows();
    if (H.cols() != D) throw DimensionMismatch("liouvillian: Hamiltonian must be square");
    for (const auto& c : channels) {
        if (c.op.rows() != D || c.op.cols() != D) {
            throw DimensionMismatch("liouvillian: collapse operator '" + c.name + "' has dimension " +
                                    std::to_string(c.op.rows()) + ", expected " + std::to_string(D));
        }
    }

    Sparse I(D, D);
    I.setIdentity();
    const Complex<Real> minus_i(Real(0), Real(-1));
    const Sparse Hs = H.sparseView();
    const Sparse HsT = Sparse(Hs.transpose());

    Sparse L = minus_i * (Sparse(Eigen::kroneckerProduct(I, Hs)) - Sparse(Eigen::kroneckerProduct(HsT, I)));
    for (const auto& c : channels) {
        if (c.rate == Real(0)) continue;
        const Sparse cs = c.op.sparseView();
        const Sparse cc = Sparse(cs.conjugate());
        const Sparse n = Sparse(cs.adjoint() * cs);
        const Sparse nT = Sparse(n.transpose());
        const Real half = c.rate / Real(2);
        L += half * (Real(2) * Sparse(Eigen::kroneckerProduct(cc, cs)) - Sparse(Eigen::kroneckerProduct(I, n)) -
                     Sparse(Eigen::kroneckerProduct(nT, I)));
    }
    L.prune(Complex<Real>(0));
    L.makeCompressed();

    Liouvillian<Real> out;
    out.dim = D;
    out.sparse = std::move(L);
    return out;
}

template <typename Real = double>
Liouvillian<Real> liouvillian(const SystemParams& params) {
    return liouvillian<Real>(build_hamiltonian<Real>(params), collapse_operators<Real>(params));
}

enum class SteadySolver { DenseLU, SparseLU };

struct SteadyOptions {
    SteadySolver solver = SteadySolver::DenseLU;
    // A trace-replaced system whose (1-norm) condition estimate exceeds this is rejected.
    double max_condition = 1e12;
};

namespace detail {

// Rows of L that may be traded for the trace constraint: the population equations
// d rho_kk / dt, whose sum vanishes identically. Row 0 (vacuum population) first;
// the highest-excitation row is badly conditioned at weak drive.
inline std::vector<Index> trace_row_candidates(Index dim) {
    std::vector<Index> rows{0};
    if (dim > 1) rows.push_back((dim - 1) * (dim + 1));
    for (Index k = 1; k + 1 < dim; ++k) rows.push_back(k * (dim + 1));
    return rows;
}

template <typename Real>
DensityMatrix<Real> solve_dense(const Liouvillian<Real>& L, const SteadyOptions& opt) {
    const Index D = L.dim;
    const ComplexVector<Real> t = trace_functional<Real>(D);
    const ComplexMatrix<Real> dense = L.matrix();
    for (Index row : trace_row_candidates(D)) {
        ComplexMatrix<Real> M = dense;
        M.row(row) = t.transpose();
        Eigen::PartialPivLU<ComplexMatrix<Real>> lu(M);
        // The rcond estimate is unreliable once a pivot is exactly zero (it can come
        // back finite or NaN), so tiny pivots are rejected separately.
        const auto pivots = lu.matrixLU().diagonal().cwiseAbs();
        if (!(pivots.minCoeff() > pivots.maxCoeff() * Real(D * D) * std::numeric_limits<Real>::epsilon())) continue;
        const Real rcond = lu.rcond();
        if (!(rcond > Real(0)) || Real(1) / rcond > Real(opt.max_condition)) continue;
        ComplexVector<Real> b = ComplexVector<Real>::Zero(D * D);
        b(row) = Real(1);
        const ComplexVector<Real> x = lu.solve(b);
        if (!x.allFinite()) continue;
        return DensityMatrix<Real>(unvectorize<Real>(x, D));
    }
    throw DegenerateSteadyState("steady_state: trace-constrained Liouvillian is singular for every candidate row "
                                "(the model has more than one steady state)");
}

template <typename Real>
DensityMatrix<Real> solve_sparse(const Liouvillian<Real>& L, const SteadyOptions&) {
    using Sparse = SparseComplexMatrix<Real>;
    const Index D = L.dim;
    const Index N = D * D;
    for (Index row : trace_row_candidates(D)) {
        std::vector<Eigen::Triplet<Complex<Real>>> triplets;
        triplets.reserve(static_cast<std::size_t>(L.sparse.nonZeros() + D));
        for (Index col = 0; col < L.sparse.outerSize(); ++col) {
            for (typename Sparse::InnerIterator it(L.sparse, col); it; ++it) {
                if (it.row() != row) triplets.emplace_back(it.row(), it.col(), it.value());
            }
        }
        for (Index i = 0; i < D; ++i) triplets.emplace_back(row, i + i * D, Complex<Real>(1));
        Sparse M(N, N);
        M.setFromTriplets(triplets.begin(), triplets.end());

        // Natural ordering eliminates in excitation order, as the dense solve does. A
        // fill-reducing (COLAMD) ordering loses the 1e-20-scale two-photon elements at
        // weak drive and turns g2 into noise.
        Eigen::SparseLU<Sparse, Eigen::NaturalOrdering<int>> lu;
        lu.compute(M);
        if (lu.info() != Eigen::Success) continue;
        ComplexVector<Real> b = ComplexVector<Real>::Zero(N);
        b(row) = Real(1);
        const ComplexVector<Real> x = lu.solve(b);
        if (lu.info() != Eigen::Success || !x.allFinite()) continue;
        DensityMatrix<Real> rho(unvectorize<Real>(x, D));
        // No cheap condition estimate here; an ill-conditioned row choice shows up
        // as lost Hermiticity of the solution.
        if (rho.hermiticity_error() > Real(1e-10)) continue;
        return rho;
    }
    throw DegenerateSteadyState("steady_state: sparse solve failed for every candidate trace row");
}

}  // namespace detail

// Unique rho with L vec(rho) = 0 and Tr rho = 1, from the linear system in which
// one population equation is replaced by the trace constraint.
template <typename Real>
DensityMatrix<Real> steady_state(const Liouvillian<Real>& L, const SteadyOptions& opt = {}) {
    if (L.dim <= 0 || L.sparse.rows() != L.dim * L.dim || L.sparse.cols() != L.dim * L.dim) {
        throw DimensionMismatch("steady_state: Liouvillian is not D^2 x D^2");
    }
    return opt.solver == SteadySolver::DenseLU ? detail::solve_dense(L, opt) : detail::solve_sparse(L, opt);
}

template <typename Real = double>
DensityMatrix<Real> solve_steady_state(const SystemParams& params, const SteadyOptions& opt = {}) {
    return steady_state(liouvillian<Real>(params), opt);
}

template <typename Real>
using EvolveObserver = std::function<void(double t, const DensityMatrix<Real>& rho)>;

// Fixed-step RK4 integration of vec(rho)' = L vec(rho) up to t_final. The step is
// shrunk slightly so that t_final is hit exactly. `observer` (if set) sees the
// state every `sample_every` steps and at t_final.
template <typename Real>
DensityMatrix<Real> evolve(const DensityMatrix<Real>& rho0, const Liouvillian<Real>& L, double t_final,
                           double dt = 1e-3, const EvolveObserver<Real>& observer = {}, long sample_every = 1000) {
    if (rho0.dim() != L.dim) throw DimensionMismatch("evolve: density matrix and Liouvillian dimensions differ");
    if (!(dt > 0.0) || !(t_final >= 0.0)) throw std::invalid_argument("evolve: need dt > 0 and t_final >= 0");

    const long steps = t_final == 0.0 ? 0 : std::max(1L, long(std::ceil(t_final / dt - 1e-9)));
    const Real h = steps == 0 ? Real(0) : Real(t_final / double(steps));
    const Index D = L.dim;
    const Complex<Real> trace0 = rho0.trace();
    const Real herm0 = rho0.hermiticity_error();

    ComplexVector<Real> x = vectorize<Real>(rho0.matrix());
    ComplexVector<Real> k1, k2, k3, k4;

    // A density matrix has Frobenius norm <= 1; RK4 instability blows the norm up
    // while leaving the trace intact, so all three are watched.
    auto checked_state = [&](long step) {
        DensityMatrix<Real> rho(unvectorize<Real>(x, D));
        const Real drift = std::abs(rho.trace() - trace0);
        const Real norm = x.norm();
        if (!x.allFinite() || drift > Real(1e-8) || rho.hermiticity_error() > herm0 + Real(1e-8) ||
            norm > std::abs(trace0) + Real(1e-6)) {
            throw IntegratorFailure("evolve: integration unstable at t = " + std::to_string(double(step) * double(h)) +
                                    " (trace drift " + std::to_string(double(drift)) + ", norm " +
                                    std::to_string(double(norm)) + "); reduce dt");
        }
        return rho;
    };

    const long check_every = std::clamp(sample_every, 1L, 1000L);
    for (long step = 1; step <= steps; ++step) {
        k1 = L.sparse * x;
        k2 = L.sparse * (x + (h / 2) * k1);
        k3 = L.sparse * (x + (h / 2) * k2);
        k4 = L.sparse * (x + h * k3);
        x += (h / 6) * (k1 + Real(2) * k2 + Real(2) * k3 + k4);
        const bool sample = observer && (step % sample_every == 0 || step == steps);
        if (sample || step % check_every == 0 || step == steps) {
            const DensityMatrix<Real> rho = checked_state(step);
            if (sample) observer(double(step) * double(h), rho);
        }
    }
    return DensityMatrix<Real>(unvectorize<Real>(x, D));
}

}  // namespace blockade
