#include "blockade/steady.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

#include "blockade/errors.hpp"
#include "blockade/observables.hpp"

using namespace blockade;

namespace {

ComplexMatrix<double> random_hermitian(std::mt19937_64& rng, Index D) {
    std::normal_distribution<double> n(0.0, 1.0);
    ComplexMatrix<double> X(D, D);
    for (Index i = 0; i < D; ++i) {
        for (Index j = 0; j < D; ++j) X(i, j) = {n(rng), n(rng)};
    }
    return (X + X.adjoint()) / 2.0;
}

// Right-hand side of the master equation evaluated directly on matrices.
ComplexMatrix<double> lindblad_rhs(const SystemParams& p, const ComplexMatrix<double>& rho) {
    const auto H = build_hamiltonian(p);
    const Complex<double> i(0.0, 1.0);
    ComplexMatrix<double> out = -i * (H * rho - rho * H);
    for (const auto& c : collapse_operators(p)) {
        const ComplexMatrix<double> cd = c.op.adjoint();
        out += c.rate / 2.0 * (2.0 * c.op * rho * cd - cd * c.op * rho - rho * cd * c.op);
    }
    return out;
}

SystemParams fig2a_point() {
    SystemParams p;
    p.gamma = 1.0;
    p.eta = 0.01;
    p.g = 0.7071;
    p.n_max = 5;
    return p;
}

}  // namespace

TEST_CASE("single-photon decay element") {
    Operator<double> H = Operator<double>::Zero(2, 2);
    std::vector<CollapseChannel<double>> ch{{fock_annihilation(1), 0.8, "cavity"}};
    const auto L = liouvillian(H, ch);
    const Index one = 1 + 1 * 2;  // vec index of |1><1|
    CHECK(L.matrix()(one, one).real() == doctest::Approx(-0.8));
    CHECK(std::abs(L.matrix()(one, one).imag()) < 1e-15);
}

TEST_CASE("Liouvillian matches the matrix-form master equation") {
    std::mt19937_64 rng(3);
    for (int n_atoms : {1, 2}) {
        for (Drive d : {Drive::Cavity, Drive::Atom}) {
            SystemParams p;
            p.n_atoms = n_atoms;
            p.drive = d;
            p.g = 0.9;
            p.gamma = 0.6;
            p.eta = 0.3;
            p.delta_a = -1.2;
            p.delta_c = 2.1;
            p.drive_phase = 0.4;
            p.n_max = 3;
            const auto L = liouvillian<double>(p);
            const auto X = random_hermitian(rng, p.space().dim());
            const ComplexVector<double> lhs = L.sparse * vectorize<double>(X);
            const ComplexMatrix<double> rhs = lindblad_rhs(p, X);
            CHECK((unvectorize<double>(lhs, p.space().dim()) - rhs).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("Liouvillian preserves the trace") {
    std::mt19937_64 rng(17);
    SystemParams p;
    p.n_atoms = 2;
    p.drive = Drive::Atom;
    p.g = 2.0;
    p.eta = 0.5;
    p.delta_c = 3.0;
    p.n_max = 3;
    const auto L = liouvillian<double>(p);
    const Index D = p.space().dim();
    const auto t = trace_functional<double>(D);
    for (int k = 0; k < 5; ++k) {
        const ComplexVector<double> y = L.sparse * vectorize<double>(random_hermitian(rng, D));
        CHECK(std::abs(t.dot(y)) < 1e-12);
    }
    // every basis matrix: the trace functional annihilates each column of L
    const ComplexVector<double> col_sums = (t.adjoint() * L.matrix()).transpose();
    CHECK(col_sums.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("liouvillian rejects mismatched operators") {
    Operator<double> H = Operator<double>::Zero(4, 4);
    std::vector<CollapseChannel<double>> ch{{fock_annihilation(2), 1.0, "cavity"}};
    CHECK_THROWS_AS(liouvillian(H, ch), DimensionMismatch);
    CHECK_THROWS_AS(liouvillian(Operator<double>(Operator<double>::Zero(3, 4)), {}), DimensionMismatch);
}

TEST_CASE("steady state is a null vector and a valid density matrix") {
    for (auto solver : {SteadySolver::DenseLU, SteadySolver::SparseLU}) {
        SteadyOptions opt;
        opt.solver = solver;
        const auto p = fig2a_point();
        const auto L = liouvillian<double>(p);
        const auto rho = steady_state(L, opt);
        CHECK((L.sparse * vectorize<double>(rho.matrix())).norm() < 1e-10);
        const auto chk = rho.check();
        CHECK(chk.hermiticity_error <= 1e-10);
        CHECK(chk.trace_error <= 1e-10);
        CHECK(chk.min_eigenvalue >= -1e-8);
    }
}

TEST_CASE("dense and sparse solvers agree") {
    SystemParams p;
    p.n_atoms = 2;
    p.drive = Drive::Atom;
    p.g = 0.5;
    p.delta_c = 20.0;
    p.delta_a = -9.5;
    p.eta = 0.01;
    p.n_max = 5;
    SteadyOptions dense, sparse;
    sparse.solver = SteadySolver::SparseLU;
    const auto L = liouvillian<double>(p);
    const auto a = steady_state(L, dense);
    const auto b = steady_state(L, sparse);
    CHECK((a.matrix() - b.matrix()).cwiseAbs().maxCoeff() < 1e-14);
    // weak-drive two-photon statistics survive both paths
    CHECK(g2_zero(a, p.space()) == doctest::Approx(g2_zero(b, p.space())).epsilon(1e-8));
}

TEST_CASE("driven empty cavity relaxes to a coherent state") {
    SystemParams p;
    p.g = 0.0;
    p.eta = 0.02;
    p.kappa = 1.0;
    p.n_max = 6;
    const auto spec = p.space();
    const auto L = liouvillian<double>(p);
    const auto rho = steady_state(L);
    const auto a = cavity_annihilation(spec);
    const auto alpha = expectation<double>(a, rho);
    // amplitude -2 i eta / kappa, photon number 4 eta^2 / kappa^2
    CHECK(std::abs(alpha - Complex<double>(0.0, -2.0 * p.eta / p.kappa)) < 1e-12);
    CHECK(mean_photons(rho, spec) == doctest::Approx(4.0 * p.eta * p.eta).epsilon(1e-9));

    // cross-check by propagation from the vacuum
    const auto vac = DensityMatrix<double>::pure(basis_state(spec, "g,0"));
    const auto rho_t = evolve(vac, L, 20.0);
    CHECK(mean_photons(rho_t, spec) == doctest::Approx(4.0 * p.eta * p.eta).epsilon(1e-3));
}

TEST_CASE("degenerate steady states are reported") {
    // two atoms, no drive, no atomic decay: every atomic state without photons is stationary
    SystemParams p;
    p.n_atoms = 2;
    p.g = 1.0;
    p.gamma = 0.0;
    p.eta = 0.0;
    p.n_max = 3;
    const auto L = liouvillian<double>(p);
    CHECK_THROWS_AS(steady_state(L), DegenerateSteadyState);
    SteadyOptions sparse;
    sparse.solver = SteadySolver::SparseLU;
    CHECK_THROWS_AS(steady_state(L, sparse), DegenerateSteadyState);

    // with decay everywhere the undriven system has the vacuum as its unique steady state
    SystemParams q;
    q.eta = 0.0;
    q.g = 1.0;
    q.n_max = 3;
    const auto rho = solve_steady_state(q);
    CHECK(std::abs(rho.matrix()(0, 0) - 1.0) < 1e-12);
}

TEST_CASE("condition guard rejects every row when the bound is impossible") {
    SteadyOptions opt;
    opt.max_condition = 1.0;
    CHECK_THROWS_AS(steady_state(liouvillian<double>(fig2a_point()), opt), DegenerateSteadyState);
}

TEST_CASE("evolve with a zero generator is the identity") {
    Liouvillian<double> L;
    L.dim = 4;
    L.sparse = SparseComplexMatrix<double>(16, 16);
    std::mt19937_64 rng(2);
    ComplexMatrix<double> X = random_hermitian(rng, 4);
    X = X * X.adjoint();
    X /= X.trace();
    const DensityMatrix<double> rho0(X);
    const auto rho = evolve(rho0, L, 3.0, 0.01);
    CHECK((rho.matrix() - rho0.matrix()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("evolve preserves the trace and converges to the steady state") {
    const auto p = fig2a_point();
    const auto L = liouvillian<double>(p);
    const auto vac = DensityMatrix<double>::pure(basis_state(p.space(), "g,0"));
    double worst_trace = 0.0;
    int samples = 0;
    const auto rho_t = evolve<double>(
        vac, L, 40.0, 1e-3,
        [&](double, const DensityMatrix<double>& r) {
            worst_trace = std::max(worst_trace, std::abs(r.trace() - 1.0));
            ++samples;
        },
        500L);
    CHECK(samples >= 80);
    CHECK(worst_trace < 1e-8);
    const auto rho_ss = steady_state(L);
    CHECK((rho_t.matrix() - rho_ss.matrix()).norm() < 1e-6);
}

TEST_CASE("unstable step sizes are detected") {
    SystemParams p = fig2a_point();
    p.g = 50.0;
    const auto L = liouvillian<double>(p);
    const auto vac = DensityMatrix<double>::pure(basis_state(p.space(), "g,0"));
    CHECK_THROWS_AS(evolve(vac, L, 50.0, 0.5), IntegratorFailure);
    CHECK_THROWS_AS(evolve(vac, L, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("extended precision steady state agrees with double") {
    SystemParams p = fig2a_point();
    p.n_max = 3;
    const auto rd = solve_steady_state<double>(p);
    const auto rl = solve_steady_state<long double>(p);
    const auto nd = mean_photons(rd, p.space());
    const long double nl = mean_photons(rl, p.space());
    CHECK(std::abs(double(nl) - nd) / nd < 1e-10);
    CHECK(double(rl.hermiticity_error()) < 1e-15);
}
