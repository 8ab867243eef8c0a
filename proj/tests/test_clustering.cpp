#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hexamer/clustering.hpp"
#include "hexamer/eigen.hpp"
#include "hexamer/model.hpp"
#include "test_support.hpp"

using namespace hexamer;
using hexamer::testing::triple_point;

TEST_CASE("gaps merge below the tolerance and split at it", "[clustering]") {
    const std::vector<double> levels{0.0, 1e-10, 1.0, 1.0 + 2e-10, 5.0};
    const DegeneracyClasses dc = cluster_degeneracies(levels, 1e-9);

    REQUIRE(dc.pattern() == "2|2|1");
    REQUIRE(dc.classes.size() == 3);
    REQUIRE(dc.classes[0].members == std::vector<int>{0, 1});
    REQUIRE(dc.classes[1].members == std::vector<int>{2, 3});
    REQUIRE(dc.classes[2].members == std::vector<int>{4});
    REQUIRE(std::abs(dc.classes[0].energy - 5e-11) < 1e-20);
    REQUIRE(std::abs(dc.classes[1].energy - (1.0 + 1e-10)) < 1e-15);

    // a gap exactly equal to the tolerance starts a new class
    REQUIRE(cluster_degeneracies(std::vector<double>{0.0, 0.25}, 0.25).pattern() == "1|1");
    REQUIRE(cluster_degeneracies(std::vector<double>{0.0, 0.2499999}, 0.25).pattern() == "2");
}

TEST_CASE("the unit hexagon clusters as 1|2|2|1", "[clustering]") {
    const Spectrum s = eigensolve(build_model_hamiltonian(CouplingSet{0.0, 1.0, 1.0, 0.0, 0.0}));
    REQUIRE(cluster_degeneracies(s, 1e-9).pattern() == "1|2|2|1");
}

TEST_CASE("the triple point clusters as 3|2|1", "[clustering]") {
    const Spectrum s = eigensolve(build_model_hamiltonian(triple_point()));
    const DegeneracyClasses dc = cluster_degeneracies(s, 1e-9);
    REQUIRE(dc.pattern() == "3|2|1");
    REQUIRE(dc.classes.front().multiplicity == 3);
    REQUIRE(std::abs(dc.classes.front().energy + std::sqrt(4.61)) < 1e-10);
}

TEST_CASE("all-zero couplings collapse to one class of six", "[clustering]") {
    const Spectrum s = eigensolve(build_model_hamiltonian(CouplingSet{}));
    const DegeneracyClasses dc = cluster_degeneracies(s, 1e-9);
    REQUIRE(dc.pattern() == "6");
    REQUIRE(dc.classes.front().multiplicity == 6);
}

TEST_CASE("class_of covers every eigenvalue index exactly once", "[clustering]") {
    const Spectrum s = eigensolve(build_model_hamiltonian(triple_point()));
    const DegeneracyClasses dc = cluster_degeneracies(s, 1e-9);
    for (int k = 0; k < 6; ++k) {
        const int cid = dc.class_of(k);
        const auto& members = dc.classes[cid].members;
        REQUIRE(std::find(members.begin(), members.end(), k) != members.end());
    }
    REQUIRE_THROWS_AS(dc.class_of(6), std::invalid_argument);
    REQUIRE_THROWS_AS(dc.class_of(-1), std::invalid_argument);
}

TEST_CASE("class_basis returns an orthonormal span of the class", "[clustering]") {
    const Spectrum s = eigensolve(build_model_hamiltonian(triple_point()));
    const DegeneracyClasses dc = cluster_degeneracies(s, 1e-9);
    const std::vector<Cvec> basis = class_basis(s, dc.classes.front());

    REQUIRE(basis.size() == 3);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) {
            const Complex want = i == j ? Complex(1.0) : Complex(0.0);
            REQUIRE(std::abs(inner(basis[i], basis[j]) - want) < 1e-12);
        }

    // the original class eigenvectors keep full norm inside the span
    for (const int k : dc.classes.front().members) {
        const Cvec v = s.eigenvector(k);
        double captured = 0.0;
        for (const auto& b : basis) captured += std::norm(inner(b, v));
        REQUIRE(std::abs(captured - 1.0) < 1e-10);
    }
}

TEST_CASE("both clustering overloads agree", "[clustering]") {
    const Spectrum s = eigensolve(build_model_hamiltonian(triple_point()));
    const DegeneracyClasses a = cluster_degeneracies(s, 1e-9);
    const DegeneracyClasses b = cluster_degeneracies(s.eigenvalues, 1e-9);
    REQUIRE(a.pattern() == b.pattern());
    REQUIRE(a.classes.size() == b.classes.size());
    for (size_t i = 0; i < a.classes.size(); ++i) {
        REQUIRE(a.classes[i].members == b.classes[i].members);
        REQUIRE(a.classes[i].energy == b.classes[i].energy);
    }
}

TEST_CASE("clustering validates its inputs", "[clustering]") {
    REQUIRE_THROWS_AS(cluster_degeneracies(std::vector<double>{}, 1e-9),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(cluster_degeneracies(std::vector<double>{0.0, 1.0}, 0.0),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(cluster_degeneracies(std::vector<double>{0.0, 1.0}, -1.0),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(cluster_degeneracies(std::vector<double>{1.0, 0.5}, 1e-9),
                      std::invalid_argument);
    const double inf = std::numeric_limits<double>::infinity();
    REQUIRE_THROWS_AS(cluster_degeneracies(std::vector<double>{0.0, 1.0}, inf),
                      std::invalid_argument);
}
