#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "hexamer/eigen.hpp"
#include "hexamer/geometry.hpp"
#include "hexamer/model.hpp"
#include "test_support.hpp"

using namespace hexamer;
using hexamer::testing::triple_point;

TEST_CASE("site index maps dimer and sublattice labels onto storage", "[model]") {
    REQUIRE(site_index(1, 1) == 0);
    REQUIRE(site_index(1, 2) == 1);
    REQUIRE(site_index(2, 1) == 2);
    REQUIRE(site_index(2, 2) == 3);
    REQUIRE(site_index(3, 1) == 4);
    REQUIRE(site_index(3, 2) == 5);

    REQUIRE_THROWS_AS(site_index(0, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(site_index(4, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(site_index(1, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(site_index(1, 3), std::invalid_argument);
}

TEST_CASE("all-zero couplings give the zero matrix", "[model]") {
    const Matrix h = build_model_hamiltonian(CouplingSet{});
    REQUIRE(h.max_abs() == 0.0);
}

TEST_CASE("bond amplitudes land on the documented pairs", "[model]") {
    const CouplingSet c = triple_point();
    const Matrix h = build_model_hamiltonian(c);

    // Expected bond list: dimer rungs, hexagon edges, inner triangle.
    Matrix want(6);
    for (int m = 1; m <= 3; ++m) {
        const int a = site_index(m, 1);
        const int b = site_index(m, 2);
        want(a, b) = c.dd;
        want(b, a) = c.dd;
        const int next = site_index(m % 3 + 1, 1);
        want(b, next) = c.dh;
        want(next, b) = c.dh;
    }
    const int t1 = site_index(1, 2), t2 = site_index(2, 2), t3 = site_index(3, 2);
    for (const auto [a, b] : {std::pair{t1, t2}, {t1, t3}, {t2, t3}}) {
        want(a, b) = c.ds;
        want(b, a) = c.ds;
    }

    REQUIRE((h - want).max_abs() == 0.0);
}

TEST_CASE("the on-site energy shifts the diagonal only", "[model]") {
    CouplingSet c = triple_point();
    const Matrix base = build_model_hamiltonian(c);
    c.e0 = 0.7;
    const Matrix shifted = build_model_hamiltonian(c);
    const Matrix diff = shifted - base - 0.7 * Matrix::identity(6);
    REQUIRE(diff.max_abs() == 0.0);
}

TEST_CASE("the builder is exactly Hermitian, and exactly real at zero flux", "[model]") {
    Rng rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        CouplingSet c{rng.uniform(-1, 1), rng.uniform(0, 3), rng.uniform(0, 3),
                      rng.uniform(0, 3), 0.0};
        REQUIRE(build_model_hamiltonian(c).hermiticity_error() == 0.0);
        REQUIRE(build_model_hamiltonian(c).max_imag() == 0.0);

        c.phi = rng.uniform(-3.0, 3.0);
        const Matrix h = build_model_hamiltonian(c);
        REQUIRE(h.hermiticity_error() == 0.0);
        if (c.dh > 0.0 && c.phi != 0.0) REQUIRE(h.max_imag() > 0.0);
    }
}

TEST_CASE("the dimer shift is a cyclic permutation of order three", "[model]") {
    const Matrix s = dimer_shift_permutation();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            REQUIRE(s(i, j) == (i == (j + 2) % 6 ? Complex(1.0) : Complex(0.0)));
    REQUIRE((s * s * s - Matrix::identity(6)).max_abs() == 0.0);
    REQUIRE((s.adjoint() * s - Matrix::identity(6)).max_abs() == 0.0);
}

TEST_CASE("the model commutes exactly with the dimer shift, flux included", "[model]") {
    const Matrix s = dimer_shift_permutation();
    Rng rng(102);
    for (int trial = 0; trial < 10; ++trial) {
        const CouplingSet c{rng.uniform(-1, 1), rng.uniform(0, 3), rng.uniform(0, 3),
                            rng.uniform(0, 3), rng.uniform(-3.0, 3.0)};
        const Matrix h = build_model_hamiltonian(c);
        REQUIRE((s * h * s.adjoint() - h).max_abs() == 0.0);
    }
}

TEST_CASE("eigenvalues see only the loop flux, not its gauge", "[model]") {
    CouplingSet c = triple_point();
    c.phi = 0.6;
    const Matrix h = build_model_hamiltonian(c);

    Rng rng(103);
    Matrix d(6);
    for (int i = 0; i < 6; ++i) d(i, i) = std::polar(1.0, rng.uniform(0, 2 * std::numbers::pi));
    const Matrix gauged = d * h * d.adjoint();

    const Spectrum a = eigensolve(h);
    const Spectrum b = eigensolve(gauged);
    for (int k = 0; k < 6; ++k)
        REQUIRE(std::abs(a.eigenvalues[k] - b.eigenvalues[k]) < 1e-12);
}

TEST_CASE("decoupled dimers split into two three-fold levels", "[model]") {
    const Spectrum s = eigensolve(build_model_hamiltonian(CouplingSet{0.0, 1.0, 0.0, 0.0, 0.0}));
    for (int k = 0; k < 3; ++k) {
        REQUIRE(std::abs(s.eigenvalues[k] + 1.0) < 1e-14);
        REQUIRE(std::abs(s.eigenvalues[k + 3] - 1.0) < 1e-14);
    }
}

TEST_CASE("coupling validation rejects bad parameter sets", "[model]") {
    CouplingSet bad = triple_point();
    bad.dd = -0.1;
    REQUIRE_THROWS_AS(build_model_hamiltonian(bad), std::invalid_argument);

    bad = triple_point();
    bad.phi = 4.0;  // outside (-pi, pi]
    REQUIRE_THROWS_AS(build_model_hamiltonian(bad), std::invalid_argument);

    bad = triple_point();
    bad.phi = -std::numbers::pi;  // open end of the interval
    REQUIRE_THROWS_AS(build_model_hamiltonian(bad), std::invalid_argument);

    CouplingSet ok = triple_point();
    ok.phi = std::numbers::pi;  // closed end is allowed
    REQUIRE_NOTHROW(build_model_hamiltonian(ok));

    bad = triple_point();
    bad.ds = std::numeric_limits<double>::quiet_NaN();
    REQUIRE_THROWS_AS(build_model_hamiltonian(bad), std::invalid_argument);
}

TEST_CASE("star twist puts inner sites at R - L/2 on the center lines", "[geometry]") {
    const SiteLayout lay = build_layout(1.0, 1.0, std::numbers::pi / 2);
    for (int m = 1; m <= 3; ++m) {
        const auto& outer = lay.positions[site_index(m, 1)];
        const auto& inner = lay.positions[site_index(m, 2)];
        REQUIRE(std::abs(std::hypot(outer[0], outer[1]) - 1.5) < 1e-12);
        REQUIRE(std::abs(std::hypot(inner[0], inner[1]) - 0.5) < 1e-12);
        // both sites sit on the radial line through their dimer center
        REQUIRE(std::abs(outer[0] * inner[1] - outer[1] * inner[0]) < 1e-12);
    }
}

TEST_CASE("flat twist puts all six sites on one circle", "[geometry]") {
    const SiteLayout lay = build_layout(1.0, 1.0, 0.0);
    for (const auto& p : lay.positions)
        REQUIRE(std::abs(std::hypot(p[0], p[1]) - std::sqrt(1.25)) < 1e-12);
}

TEST_CASE("site distances inherit the threefold symmetry", "[geometry]") {
    const SiteLayout lay = build_layout(1.3, 0.9, 0.4);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            REQUIRE(std::abs(lay.distance(i, j) - lay.distance((i + 2) % 6, (j + 2) % 6)) <
                    1e-12);
}

TEST_CASE("layout validation rejects impossible placements", "[geometry]") {
    REQUIRE_THROWS_AS(build_layout(0.0, 1.0, 0.1), std::invalid_argument);
    REQUIRE_THROWS_AS(build_layout(1.0, -1.0, 0.1), std::invalid_argument);
    REQUIRE_THROWS_AS(build_layout(1.0, 1.0, -0.1), std::invalid_argument);
    REQUIRE_THROWS_AS(build_layout(1.0, 1.0, 2.0), std::invalid_argument);
    // at full twist the inner triangle would collapse through the center
    REQUIRE_THROWS_AS(build_layout(1.0, 0.5, std::numbers::pi / 2), std::invalid_argument);
    REQUIRE_NOTHROW(build_layout(1.0, 0.51, std::numbers::pi / 2));
}

TEST_CASE("the all-pairs Hamiltonian couples every site pair positively", "[geometry]") {
    const SiteLayout lay = build_layout(1.0, 1.0, 0.25);
    const Matrix h = build_full_hamiltonian(lay, DecayLaw{}, 0.3);
    REQUIRE(h.hermiticity_error() == 0.0);
    REQUIRE(h.max_imag() == 0.0);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            if (i == j)
                REQUIRE(h(i, i).real() == 0.3);
            else
                REQUIRE(h(i, j).real() > 0.0);
        }
}

TEST_CASE("the all-pairs Hamiltonian keeps the threefold symmetry", "[geometry]") {
    const SiteLayout lay = build_layout(1.0, 1.0, 0.7);
    const Matrix h = build_full_hamiltonian(lay, DecayLaw{}, 0.0);
    REQUIRE(commutator(h, dimer_shift_permutation()).max_abs() < 1e-12);
}

TEST_CASE("geometry-derived couplings follow the layout regime", "[geometry]") {
    const DecayLaw law{};
    const CouplingSet star =
        couplings_from_geometry(build_layout(1.0, 1.0, std::numbers::pi / 2), law, 0.0);
    const CouplingSet hex = couplings_from_geometry(build_layout(1.0, 1.0, 0.0), law, 0.0);

    // the dimer bond length is the twist-independent scale
    REQUIRE(std::abs(star.dd - std::exp(-1.0)) < 1e-14);
    REQUIRE(std::abs(hex.dd - std::exp(-1.0)) < 1e-14);

    // pointing the dimers at the center tightens the inner triangle,
    // lying them flat tightens the hexagon edges
    REQUIRE(star.ds > star.dh);
    REQUIRE(hex.dh > hex.ds);
    REQUIRE(star.phi == 0.0);

    // derived couplings reproduce the full matrix on the model bonds
    const SiteLayout lay = build_layout(1.0, 1.0, 0.0);
    const Matrix full = build_full_hamiltonian(lay, law, 0.0);
    REQUIRE(std::abs(full(site_index(1, 1), site_index(1, 2)).real() - hex.dd) < 1e-14);
    REQUIRE(std::abs(full(site_index(1, 2), site_index(2, 1)).real() - hex.dh) < 1e-14);
    REQUIRE(std::abs(full(site_index(1, 2), site_index(2, 2)).real() - hex.ds) < 1e-14);
}
