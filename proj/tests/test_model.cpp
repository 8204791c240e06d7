#include "blockade/model.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

#include "blockade/errors.hpp"

using namespace blockade;

namespace {

bool exactly_hermitian(const Operator<double>& H) {
    for (Index i = 0; i < H.rows(); ++i) {
        for (Index j = 0; j < H.cols(); ++j) {
            if (H(i, j) != std::conj(H(j, i))) return false;
        }
    }
    return true;
}

SystemParams random_params(std::mt19937_64& rng, int n_atoms, Drive drive) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    SystemParams p;
    p.n_atoms = n_atoms;
    p.drive = drive;
    p.g = 3.0 * u(rng);
    p.gamma = 2.0 * u(rng);
    p.eta = 0.5 * u(rng);
    p.delta_a = 20.0 * (u(rng) - 0.5);
    p.delta_c = 40.0 * (u(rng) - 0.5);
    p.drive_phase = 6.0 * u(rng);
    p.n_max = 4;
    return p;
}

}  // namespace

TEST_CASE("SystemParams validation") {
    SystemParams p;
    CHECK_NOTHROW(p.validate());
    p.kappa = 0.0;
    CHECK_THROWS_AS(p.validate(), InvalidParameters);
    p = {};
    p.gamma = -0.1;
    CHECK_THROWS_AS(p.validate(), InvalidParameters);
    p = {};
    p.eta = -1e-3;
    CHECK_THROWS_AS(p.validate(), InvalidParameters);
    p = {};
    p.g = -1.0;
    CHECK_THROWS_AS(p.validate(), InvalidParameters);
    p = {};
    p.delta_a = NAN;
    CHECK_THROWS_AS(p.validate(), InvalidParameters);
    p = {};
    p.n_atoms = 3;
    CHECK_THROWS_AS(p.validate(), InvalidTruncation);
}

TEST_CASE("kappa-unit conversion") {
    SystemParams p;
    p.kappa = 2.8;
    p.gamma = 3.0;
    p.eta = 1.4;
    p.g = 5.6;
    p.delta_a = -2.8;
    p.delta_c = 5.6;
    const auto q = p.in_kappa_units();
    CHECK(q.kappa == 1.0);
    CHECK(q.gamma == doctest::Approx(3.0 / 2.8));
    CHECK(q.eta == doctest::Approx(0.5));
    CHECK(q.g == doctest::Approx(2.0));
    CHECK(q.delta_a == doctest::Approx(-1.0));
    CHECK(q.delta_c == doctest::Approx(2.0));
}

TEST_CASE("default truncation") {
    CHECK(default_n_max(0.01) == 5);
    CHECK(default_n_max(0.3) == 10);
    CHECK(default_n_max(1.0) == 10);
}

TEST_CASE("Hamiltonian shape and exact Hermiticity") {
    SystemParams p;
    p.n_max = 3;
    p.g = 0.7;
    p.eta = 0.2;
    p.delta_a = 0.3;
    p.delta_c = -1.1;
    const auto H = build_hamiltonian(p);
    CHECK(H.rows() == 8);
    CHECK(H.cols() == 8);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto q = random_params(rng, 1 + trial % 2, trial % 4 < 2 ? Drive::Cavity : Drive::Atom);
        CHECK(exactly_hermitian(build_hamiltonian(q)));
    }
}

TEST_CASE("decoupled cavity drive acts on the cavity only") {
    SystemParams p;
    p.g = 0.0;
    p.eta = 0.3;
    p.n_max = 4;
    const auto spec = p.space();
    const auto a = cavity_annihilation(spec);
    const Operator<double> expected = 0.3 * (a + a.adjoint());
    CHECK((build_hamiltonian(p) - expected).norm() < 1e-15);
}

TEST_CASE("atom drive couples |gg,0> to |+,0> with sqrt(2) eta") {
    SystemParams p;
    p.n_atoms = 2;
    p.drive = Drive::Atom;
    p.eta = 0.37;
    p.g = 1.3;
    p.n_max = 3;
    const auto spec = p.space();
    const auto H = build_hamiltonian(p);
    const auto plus0 = basis_state(spec, "+,0");
    const auto gg0 = basis_state(spec, "gg,0");
    const auto amp = plus0.dot(H * gg0);  // <+,0|H|gg,0>
    CHECK(amp.real() == doctest::Approx(std::sqrt(2.0) * 0.37));
    CHECK(std::abs(amp.imag()) < 1e-15);
    CHECK(std::abs(basis_state(spec, "-,0").dot(H * gg0)) < 1e-15);
}

TEST_CASE("without drive the excitation number is conserved") {
    std::mt19937_64 rng(5);
    for (int n_atoms : {1, 2}) {
        for (Drive d : {Drive::Cavity, Drive::Atom}) {
            auto p = random_params(rng, n_atoms, d);
            p.eta = 0.0;
            const auto H = build_hamiltonian(p);
            const auto N = excitation_number(p.space());
            CHECK((H * N - N * H).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("antisymmetric Dicke states are eigenvectors of the undriven Hamiltonian") {
    SystemParams p;
    p.n_atoms = 2;
    p.g = 1.7;
    p.eta = 0.0;
    p.delta_a = 0.4;
    p.delta_c = -0.9;
    p.n_max = 5;
    const auto H = build_hamiltonian(p);
    const auto dv = dicke_vectors(p.space());
    for (const auto& m : dv.minus) {
        const auto Hm = (H * m).eval();
        const auto e = m.dot(Hm);
        CHECK((Hm - e * m).norm() < 1e-13);
    }
}

TEST_CASE("collapse channels") {
    SystemParams p;
    p.kappa = 1.0;
    p.gamma = 0.4;
    auto c1 = collapse_operators(p);
    REQUIRE(c1.size() == 2);
    CHECK(c1[0].rate == 1.0);
    CHECK(c1[1].rate == 0.4);
    CHECK((c1[0].op - cavity_annihilation(p.space())).norm() == 0.0);

    p.n_atoms = 2;
    p.gamma = 0.0;
    auto c2 = collapse_operators(p);
    REQUIRE(c2.size() == 3);
    CHECK(c2[1].rate == 0.0);
    CHECK(c2[2].rate == 0.0);
    CHECK((c2[2].op - atom_lowering_on(p.space(), 1)).norm() == 0.0);
}
