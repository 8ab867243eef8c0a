#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "hexamer/eigen.hpp"
#include "hexamer/model.hpp"
#include "hexamer/pipeline.hpp"
#include "test_support.hpp"

using namespace hexamer;
using hexamer::testing::triple_point;

namespace {

// The regrouped parity-sector matrix, written out from the bond list: the
// symmetric sector carries +dd and the ring average (dh+ds)/2, the
// antisymmetric sector carries -dd and -(dh-ds)/2, and the sectors couple
// through a chiral ring with +(dh-ds)/2 forward and -(dh+ds)/2 backward.
Matrix expected_h2(const CouplingSet& c) {
    const double dp = (c.dh + c.ds) / 2.0;
    const double dm = (c.dh - c.ds) / 2.0;
    Matrix h(6);
    for (int i = 0; i < 6; ++i) h(i, i) = c.e0 + (i < 3 ? c.dd : -c.dd);
    for (int m = 0; m < 3; ++m) {
        const int next = (m + 1) % 3;
        h(m, next) += dp;
        h(next, m) += dp;
        h(3 + m, 3 + next) += -dm;
        h(3 + next, 3 + m) += -dm;
        h(m, 3 + next) += dm;
        h(3 + next, m) += dm;
        h(next, 3 + m) += -dp;
        h(3 + m, next) += -dp;
    }
    return h;
}

// The threefold eigenphase form: both sectors diagonal, coupled block-wise by
// a diagonal matrix whose entries pair complex-conjugate off the k = 0 lane.
Matrix expected_h3(const CouplingSet& c) {
    const double dp = (c.dh + c.ds) / 2.0;
    const double dm = (c.dh - c.ds) / 2.0;
    Matrix h(6);
    h(0, 0) = c.dd - dp;
    h(1, 1) = c.dd - dp;
    h(2, 2) = c.dd + 2.0 * dp;
    h(3, 3) = -(c.dd - dm);
    h(4, 4) = -(c.dd - dm);
    h(5, 5) = -(c.dd + 2.0 * dm);
    for (int i = 0; i < 6; ++i) h(i, i) += c.e0;
    const Complex y(c.ds / 2.0, std::sqrt(3.0) * c.dh / 2.0);
    h(0, 3) = y;
    h(3, 0) = std::conj(y);
    h(1, 4) = std::conj(y);
    h(4, 1) = y;
    h(2, 5) = -c.ds;
    h(5, 2) = -c.ds;
    return h;
}

}  // namespace

TEST_CASE("the dimer Hadamard diagonalizes decoupled dimers", "[pipeline]") {
    const Matrix h = build_model_hamiltonian(CouplingSet{0.2, 1.0, 0.0, 0.0, 0.0});
    const Matrix h1 = hadamard_step(h);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            const double want = i == j ? 0.2 + (i % 2 == 0 ? 1.0 : -1.0) : 0.0;
            REQUIRE(std::abs(h1(i, j) - want) < 1e-15);
        }
}

TEST_CASE("the dimer Hadamard is an involution", "[pipeline]") {
    const Matrix h = build_model_hamiltonian(triple_point());
    REQUIRE((hadamard_step(hadamard_step(h)) - h).max_abs() < 1e-15);
    REQUIRE((hadamard_step(Matrix::identity(6)) - Matrix::identity(6)).max_abs() < 1e-15);
}

TEST_CASE("regrouping is a similarity and matches the sector pattern", "[pipeline]") {
    Rng rng(301);
    for (int trial = 0; trial < 50; ++trial) {
        const CouplingSet c{rng.uniform(-1, 1), rng.uniform(0.1, 3), rng.uniform(0, 3),
                            rng.uniform(0, 3), 0.0};
        const Matrix h = build_model_hamiltonian(c);
        const PipelineTrace t = run_pipeline(h);

        REQUIRE((t.h2 - expected_h2(c)).max_abs() < 1e-14);

        const Spectrum sh = eigensolve(h);
        const Spectrum s2 = eigensolve(t.h2);
        for (int k = 0; k < 6; ++k)
            REQUIRE(std::abs(sh.eigenvalues[k] - s2.eigenvalues[k]) < 1e-13);
    }
}

TEST_CASE("the regrouped matrix carries the documented pilot entries", "[pipeline]") {
    const CouplingSet c = triple_point();
    const PipelineTrace t = run_pipeline(build_model_hamiltonian(c));

    REQUIRE(std::abs(t.h2(0, 0) - c.dd) < 1e-14);
    REQUIRE(std::abs(t.h2(0, 1) - (c.dh + c.ds) / 2.0) < 1e-14);
    REQUIRE(std::abs(t.h2(0, 4) - (c.dh - c.ds) / 2.0) < 1e-14);

    // five-digit cross-check against the reference values
    REQUIRE(std::abs(t.h2(0, 1).real() - 1.39246) < 5e-6);
    REQUIRE(std::abs(t.h2(0, 4).real() - 0.50754) < 5e-6);
}

TEST_CASE("the eigenphase basis reduces the model to diagonal blocks", "[pipeline]") {
    Rng rng(302);
    for (int trial = 0; trial < 50; ++trial) {
        const CouplingSet c{rng.uniform(-1, 1), rng.uniform(0.1, 3), rng.uniform(0, 3),
                            rng.uniform(0, 3), 0.0};
        const PipelineTrace t = run_pipeline(build_model_hamiltonian(c));
        REQUIRE((t.h3 - expected_h3(c)).max_abs() < 1e-13);

        // only (j, j) and (j, j +- 3) entries survive
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                if (i != j && j != (i + 3) % 6)
                    REQUIRE(std::abs(t.h3(i, j)) < 1e-13);
    }
}

TEST_CASE("the sector coupling magnitude matches its closed form", "[pipeline]") {
    const CouplingSet c = triple_point();
    const PipelineTrace t = run_pipeline(build_model_hamiltonian(c));
    const double want = (c.ds * c.ds + 3.0 * c.dh * c.dh) / 4.0;
    REQUIRE(std::abs(std::norm(t.h3(0, 3)) - want) < 1e-13);
    REQUIRE(std::abs(std::norm(t.h3(1, 4)) - want) < 1e-13);
    REQUIRE(std::abs(t.h3(2, 5).real() + c.ds) < 1e-13);
    REQUIRE(std::abs(t.h3(2, 5).imag()) < 1e-15);
}

TEST_CASE("with only dimer bonds the eigenphase basis is already diagonal", "[pipeline]") {
    const CouplingSet c{0.1, 0.8, 0.0, 0.0, 0.0};
    const PipelineTrace t = run_pipeline(build_model_hamiltonian(c));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            const double want = i == j ? c.e0 + (i < 3 ? c.dd : -c.dd) : 0.0;
            REQUIRE(std::abs(t.h3(i, j) - want) < 1e-14);
        }
}

TEST_CASE("the accumulated transform is unitary and exact", "[pipeline]") {
    const Matrix h = build_model_hamiltonian(triple_point());
    const PipelineTrace t = run_pipeline(h);
    REQUIRE((t.u_total.adjoint() * t.u_total - Matrix::identity(6)).max_abs() < 1e-13);
    REQUIRE((t.u_total.adjoint() * h * t.u_total - t.h3).max_abs() < 1e-13);
}

TEST_CASE("pipeline steps demand six-dimensional input", "[pipeline]") {
    const Matrix small = Matrix::identity(3);
    REQUIRE_THROWS_AS(hadamard_step(small), std::invalid_argument);
    REQUIRE_THROWS_AS(permute_step(small), std::invalid_argument);
    REQUIRE_THROWS_AS(c3_step(small), std::invalid_argument);
}

TEST_CASE("closed-form levels match the numerical spectrum", "[pipeline]") {
    Rng rng(303);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const CouplingSet c{0.0, 1.0, rng.uniform(0, 3), rng.uniform(0, 3), 0.0};
        const auto levels = closed_form_spectrum(c).levels();
        const Spectrum s = eigensolve(build_model_hamiltonian(c));
        for (int k = 0; k < 6; ++k)
            worst = std::max(worst, std::abs(levels[k] - s.eigenvalues[k]));
    }
    REQUIRE(worst < 1e-10);
}

TEST_CASE("closed-form spot values", "[pipeline]") {
    // unit hexagon
    const auto hexagon = closed_form_spectrum(CouplingSet{0.0, 1.0, 1.0, 0.0, 0.0}).levels();
    const double want[6] = {-2.0, -1.0, -1.0, 1.0, 1.0, 2.0};
    for (int k = 0; k < 6; ++k) REQUIRE(std::abs(hexagon[k] - want[k]) < 1e-12);

    // decoupled dimers
    const auto dimers = closed_form_spectrum(CouplingSet{0.0, 1.0, 0.0, 0.0, 0.0}).levels();
    for (int k = 0; k < 3; ++k) {
        REQUIRE(std::abs(dimers[k] + 1.0) < 1e-14);
        REQUIRE(std::abs(dimers[k + 3] - 1.0) < 1e-14);
    }

    // on the locus the lower doublet and lower singlet coincide
    const ClosedFormSpectrum cf = closed_form_spectrum(triple_point());
    REQUIRE(std::abs(cf.doublet_minus - cf.singlet_minus) < 1e-12);
    REQUIRE(std::abs(cf.doublet_minus + std::sqrt(4.61)) < 1e-12);

    // the on-site energy is a rigid shift
    CouplingSet shifted = triple_point();
    shifted.e0 = 0.3;
    const auto base = closed_form_spectrum(triple_point()).levels();
    const auto moved = closed_form_spectrum(shifted).levels();
    for (int k = 0; k < 6; ++k) REQUIRE(std::abs(moved[k] - base[k] - 0.3) < 1e-14);

    CouplingSet fluxed = triple_point();
    fluxed.phi = 0.1;
    REQUIRE_THROWS_AS(closed_form_spectrum(fluxed), std::invalid_argument);
}

TEST_CASE("block states are eigenstates with the right shift eigenphase", "[pipeline]") {
    const Complex w = std::exp(Complex(0.0, 2.0 * std::numbers::pi / 3.0));
    const Matrix shift = dimer_shift_permutation();
    Rng rng(304);

    for (int trial = 0; trial < 20; ++trial) {
        const CouplingSet c{rng.uniform(-1, 1), rng.uniform(0.1, 3), rng.uniform(0, 3),
                            rng.uniform(0, 3), rng.uniform(-3.0, 3.0)};
        const Matrix h = build_model_hamiltonian(c);
        const auto states = block_eigensystem(c);
        REQUIRE(states.size() == 6);

        double prev = -std::numeric_limits<double>::infinity();
        int lower_count = 0;
        for (const auto& st : states) {
            REQUIRE(st.energy >= prev);
            prev = st.energy;
            lower_count += st.lower ? 1 : 0;

            // eigenvector residual
            const Cvec hv = h.apply(st.vector);
            for (int i = 0; i < 6; ++i)
                REQUIRE(std::abs(hv[i] - st.energy * st.vector[i]) < 1e-12);

            // eigenphase under the dimer shift
            const Cvec sv = shift.apply(st.vector);
            const Complex lambda = std::pow(w, st.eigenphase);
            for (int i = 0; i < 6; ++i)
                REQUIRE(std::abs(sv[i] - lambda * st.vector[i]) < 1e-12);

            const int phase_of_block[3] = {2, 1, 3};
            REQUIRE(st.eigenphase == phase_of_block[st.c3_block]);
        }
        REQUIRE(lower_count == 3);
    }
}

TEST_CASE("the canonical low triplet is orthonormal and block-ordered", "[pipeline]") {
    const auto fam = canonical_low_triplet(triple_point());
    REQUIRE(fam.size() == 3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            const Complex want = i == j ? Complex(1.0) : Complex(0.0);
            REQUIRE(std::abs(inner(fam[i], fam[j]) - want) < 1e-12);
        }

    // at the triple point all three lower branches sit at the pinned energy
    const Matrix h = build_model_hamiltonian(triple_point());
    for (const auto& v : fam) {
        const Cvec hv = h.apply(v);
        for (int i = 0; i < 6; ++i)
            REQUIRE(std::abs(hv[i] + std::sqrt(4.61) * v[i]) < 1e-10);
    }

    // members arrive in block order, visible through their shift eigenphases
    const Matrix shift = dimer_shift_permutation();
    const Complex w = std::exp(Complex(0.0, 2.0 * std::numbers::pi / 3.0));
    const int phase_of_block[3] = {2, 1, 3};
    for (int b = 0; b < 3; ++b) {
        const Cvec sv = shift.apply(fam[b]);
        const Complex lambda = std::pow(w, phase_of_block[b]);
        for (int i = 0; i < 6; ++i) REQUIRE(std::abs(sv[i] - lambda * fam[b][i]) < 1e-12);
    }
}
