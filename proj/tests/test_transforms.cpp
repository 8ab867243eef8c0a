#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "hexamer/model.hpp"
#include "hexamer/transforms.hpp"
#include "test_support.hpp"

using namespace hexamer;

namespace {

double vec_dev(const Cvec& a, const Cvec& b) {
    REQUIRE(a.size() == b.size());
    double d = 0.0;
    for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

}  // namespace

TEST_CASE("the threefold transform sends uniform to the last lane", "[transforms]") {
    const double r = 1.0 / std::sqrt(3.0);
    const Cvec out = c3_transform(Cvec{r, r, r});
    REQUIRE(std::abs(out[0]) < 1e-15);
    REQUIRE(std::abs(out[1]) < 1e-15);
    REQUIRE(std::abs(out[2] - 1.0) < 1e-15);
}

TEST_CASE("a site delta spreads evenly over all threefold lanes", "[transforms]") {
    const Cvec out = c3_transform(Cvec{1.0, 0.0, 0.0});
    for (const Complex& v : out) REQUIRE(std::abs(std::abs(v) - 1.0 / std::sqrt(3.0)) < 1e-15);
}

TEST_CASE("threefold lanes carry definite shift eigenphases", "[transforms]") {
    // lane k hosts the cyclic-shift eigenvector with eigenvalue w^k
    Matrix shift3(3);
    shift3(1, 0) = 1.0;
    shift3(2, 1) = 1.0;
    shift3(0, 2) = 1.0;
    const Complex w = std::exp(Complex(0.0, 2.0 * std::numbers::pi / 3.0));

    for (int k = 1; k <= 3; ++k) {
        Cvec delta(3, Complex(0.0));
        delta[k - 1] = 1.0;
        const Cvec psi = c3_inverse(delta);
        const Cvec shifted = shift3.apply(psi);
        const Complex lambda = std::pow(w, k);
        for (int i = 0; i < 3; ++i)
            REQUIRE(std::abs(shifted[i] - lambda * psi[i]) < 1e-14);
    }
}

TEST_CASE("the parity transform separates dimer combinations", "[transforms]") {
    const double r = 1.0 / std::sqrt(2.0);
    const Cvec a = z2_transform(Cvec{1.0, 0.0});
    REQUIRE(std::abs(a[0] + r) < 1e-15);
    REQUIRE(std::abs(a[1] - r) < 1e-15);

    const Cvec b = z2_transform(Cvec{r, r});
    REQUIRE(std::abs(b[0]) < 1e-15);
    REQUIRE(std::abs(b[1] - 1.0) < 1e-15);
}

TEST_CASE("round trips and norms are exact to rounding", "[transforms]") {
    Rng rng(501);
    for (int trial = 0; trial < 1000; ++trial) {
        const Cvec p3 = rng.unit_vector(3);
        REQUIRE(vec_dev(c3_inverse(c3_transform(p3)), p3) < 1e-14);
        const Cvec t3 = c3_transform(p3);
        REQUIRE(std::abs(norm(t3) - 1.0) < 1e-13);

        const Cvec p2 = rng.unit_vector(2);
        REQUIRE(vec_dev(z2_inverse(z2_transform(p2)), p2) < 1e-14);
        REQUIRE(std::abs(norm(z2_transform(p2)) - 1.0) < 1e-13);

        const Cvec p6 = rng.unit_vector(6);
        REQUIRE(std::abs(norm(full_transform(p6)) - 1.0) < 1e-13);
    }
}

TEST_CASE("the full transform factorizes as parity within, threefold across", "[transforms]") {
    Rng rng(502);
    for (int trial = 0; trial < 50; ++trial) {
        const Cvec psi = rng.unit_vector(6);
        const Cvec full = full_transform(psi);
        for (int s = 1; s <= 2; ++s) {
            Cvec stage(3);
            for (int q = 1; q <= 3; ++q) {
                const Cvec dimer{psi[site_index(q, 1)], psi[site_index(q, 2)]};
                stage[q - 1] = z2_transform(dimer)[s - 1];
            }
            const Cvec lane = c3_transform(stage);
            for (int k = 1; k <= 3; ++k)
                REQUIRE(std::abs(lane[k - 1] - full[(s - 1) * 3 + (k - 1)]) < 1e-14);
        }
    }
}

TEST_CASE("the uniform state is a pure symmetric zero-phase state", "[transforms]") {
    const double r = 1.0 / std::sqrt(6.0);
    const Cvec out = full_transform(Cvec(6, Complex(r, 0.0)));
    for (int i = 0; i < 5; ++i) REQUIRE(std::abs(out[i]) < 1e-15);
    REQUIRE(std::abs(out[5] - 1.0) < 1e-15);
}

TEST_CASE("a site delta spreads evenly over all six index pairs", "[transforms]") {
    Cvec psi(6, Complex(0.0));
    psi[site_index(1, 1)] = 1.0;
    const Cvec out = full_transform(psi);
    for (const Complex& v : out)
        REQUIRE(std::abs(std::abs(v) - 1.0 / std::sqrt(6.0)) < 1e-15);
}

TEST_CASE("transform matrices agree with the vector routines", "[transforms]") {
    Rng rng(503);
    const Cvec p3 = rng.unit_vector(3);
    REQUIRE(vec_dev(c3_transform_matrix().apply(p3), c3_transform(p3)) < 1e-15);
    const Cvec p2 = rng.unit_vector(2);
    REQUIRE(vec_dev(z2_transform_matrix().apply(p2), z2_transform(p2)) < 1e-15);
    const Cvec p6 = rng.unit_vector(6);
    REQUIRE(vec_dev(full_transform_matrix().apply(p6), full_transform(p6)) < 1e-15);

    for (const Matrix& u :
         {c3_transform_matrix(), z2_transform_matrix(), full_transform_matrix()})
        REQUIRE((u.adjoint() * u - Matrix::identity(u.dim())).max_abs() < 1e-14);
}

TEST_CASE("transforms demand the right vector lengths", "[transforms]") {
    REQUIRE_THROWS_AS(c3_transform(Cvec(2)), std::invalid_argument);
    REQUIRE_THROWS_AS(c3_inverse(Cvec(6)), std::invalid_argument);
    REQUIRE_THROWS_AS(z2_transform(Cvec(3)), std::invalid_argument);
    REQUIRE_THROWS_AS(z2_inverse(Cvec(1)), std::invalid_argument);
    REQUIRE_THROWS_AS(full_transform(Cvec(3)), std::invalid_argument);
}
