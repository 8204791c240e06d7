#include "blockade/observables.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "blockade/errors.hpp"

using namespace blockade;

TEST_CASE("expectation basics") {
    const auto spec = SpaceSpec::make(2, 3);
    const auto vac = DensityMatrix<double>::ground(spec.dim());
    const Operator<double> I = Operator<double>::Identity(spec.dim(), spec.dim());
    CHECK(expectation(I, vac) == Complex<double>(1.0));
    CHECK(mean_photons(vac, spec) == 0.0);

    SystemParams p;
    p.n_atoms = 2;
    p.drive = Drive::Atom;
    p.g = 1.1;
    p.eta = 0.2;
    p.delta_c = 0.7;
    p.n_max = 3;
    const auto rho = solve_steady_state(p);
    const auto e = expectation<double>(build_hamiltonian(p), rho);
    CHECK(std::abs(e.imag()) < 1e-12);

    CHECK_THROWS_AS(expectation<double>(Operator<double>::Identity(3, 3), vac), DimensionMismatch);
    CHECK_THROWS_AS(mean_photons(vac, SpaceSpec::make(1, 3)), DimensionMismatch);
    CHECK_THROWS_AS(g2_zero(vac, SpaceSpec::make(1, 3)), DimensionMismatch);
}

TEST_CASE("g2 of a coherent steady state is one") {
    SystemParams p;
    p.g = 0.0;
    p.eta = 0.05;
    p.n_max = 8;
    const auto rho = solve_steady_state(p);
    CHECK(g2_zero(rho, p.space()) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("g2 vanishes without two-photon weight") {
    const auto spec = SpaceSpec::make(1, 3);
    const auto psi0 = basis_state(spec, "g,0");
    const auto psi1 = basis_state(spec, "g,1");
    const ComplexVector<double> mix = (psi0 + psi1) / std::sqrt(2.0);
    const auto rho = DensityMatrix<double>::pure(mix);
    CHECK(g2_zero(rho, spec) == 0.0);
    CHECK(mean_photons(rho, spec) == doctest::Approx(0.5));

    // a Fock state |2> has g2 = 1/2
    const auto two = DensityMatrix<double>::pure(basis_state(spec, "g,2"));
    CHECK(g2_zero(two, spec) == doctest::Approx(0.5));
}

TEST_CASE("g2 is undefined below the photon threshold") {
    const auto spec = SpaceSpec::make(1, 2);
    const auto vac = DensityMatrix<double>::ground(spec.dim());
    CHECK_THROWS_AS(g2_zero(vac, spec), UndefinedStatistics);

    SystemParams p;
    p.eta = 0.0;
    p.n_max = 2;
    const auto r = report(solve_steady_state(p), p);
    CHECK_FALSE(r.g2_zero.has_value());
    CHECK(r.mean_photons == doctest::Approx(0.0));
}

TEST_CASE("counting rate is kappa times the photon number") {
    SystemParams p;
    p.g = 0.0;
    p.eta = 0.03;
    p.n_max = 6;
    const auto rho = solve_steady_state(p);
    CHECK(counting_rate(rho, p) == doctest::Approx(4.0 * p.eta * p.eta).epsilon(1e-9));

    SystemParams q = p;
    q.eta = 0.0;
    CHECK(counting_rate(solve_steady_state(q), q) == doctest::Approx(0.0));
}

TEST_CASE("Dicke populations are complete") {
    SystemParams p;
    p.n_atoms = 2;
    p.drive = Drive::Atom;
    p.g = 0.5;
    p.eta = 0.01;
    p.delta_c = 20.0;
    p.delta_a = -3.0;
    p.n_max = 4;
    const auto spec = p.space();
    const auto rho = solve_steady_state(p);
    double total = 0.0;
    for (const auto& label : {"gg", "+", "-", "ee"}) {
        for (int n = 0; n <= spec.n_max; ++n) {
            total += dicke_population(rho, spec, std::string(label) + "," + std::to_string(n));
        }
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(dicke_population(rho, spec, "gg,0") > 0.99);
    CHECK_THROWS_AS(dicke_population(rho, spec, "g,0"), UnknownLabel);

    const auto r = report(rho, p, {"+,1", "gg,0"});
    CHECK(r.populations.at("gg,0") == doctest::Approx(dicke_population(rho, spec, "gg,0")));
    REQUIRE(r.g2_zero.has_value());
}

TEST_CASE("observables do not depend on the drive phase") {
    for (Drive d : {Drive::Cavity, Drive::Atom}) {
        SystemParams p;
        p.n_atoms = 2;
        p.drive = d;
        p.g = 0.8;
        p.eta = 0.1;
        p.delta_a = 0.5;
        p.delta_c = -1.0;
        p.n_max = 5;
        SystemParams q = p;
        q.drive_phase = std::numbers::pi / 3.0;
        const auto rp = solve_steady_state(p);
        const auto rq = solve_steady_state(q);
        CHECK(std::abs(mean_photons(rp, p.space()) - mean_photons(rq, q.space())) < 1e-10);
        CHECK(std::abs(g2_zero(rp, p.space()) - g2_zero(rq, q.space())) < 1e-10);
    }
}

TEST_CASE("detuned two-atom blockade point") {
    SystemParams p;
    p.n_atoms = 2;
    p.drive = Drive::Atom;
    p.g = 0.5;
    p.eta = 0.01;
    p.delta_c = 20.0;
    p.delta_a = -10.0;
    p.n_max = 5;
    CHECK(g2_zero(solve_steady_state(p), p.space()) < 1e-2);
}
