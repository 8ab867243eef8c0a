#pragma once

// Dynamical algebra of the complex: ladder generators, the vector-coupling
// decomposition of the model Hamiltonian, and the accidental-symmetry
// operator built on a degenerate triplet.
//
// Generator conventions (frozen):
//   J+ shifts the dimer label up, J+ e_m = e_{m+1}; J- = (J+)^T.  With unit
//   entries this makes T = J+ + J-^2 exactly the cyclic permutation
//   T e_m = e_{m+1}, at the price of [J+, J-] = -J3 for J3 = diag(1,0,-1);
//   the scale is recorded in the set rather than assumed.
//   sigma+/- carry sqrt(2) entries so that [sigma+, sigma-] = 2*sigma3 holds
//   with sigma3 = diag(1,-1); their squares vanish identically.

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hexamer/couplings.hpp"
#include "hexamer/matrix.hpp"
#include "hexamer/model.hpp"

namespace hexamer {

struct GeneratorSet {
    Matrix j_plus, j_minus, j3;
    Matrix sigma_plus, sigma_minus, sigma3;
    Matrix t;
    double ladder_commutator_scale = 0.0;  // c in [J+, J-] = c * J3
};

inline GeneratorSet build_generators() {
    GeneratorSet g;
    g.j_plus = Matrix(3);
    g.j_plus(1, 0) = 1.0;
    g.j_plus(2, 1) = 1.0;
    g.j_minus = g.j_plus.adjoint();
    g.j3 = Matrix(3);
    g.j3(0, 0) = 1.0;
    g.j3(2, 2) = -1.0;
    g.t = g.j_plus + g.j_minus * g.j_minus;
    g.ladder_commutator_scale = -1.0;

    const double r2 = std::sqrt(2.0);
    g.sigma_plus = Matrix(2);
    g.sigma_plus(0, 1) = r2;
    g.sigma_minus = g.sigma_plus.adjoint();
    g.sigma3 = Matrix(2);
    g.sigma3(0, 0) = 1.0;
    g.sigma3(1, 1) = -1.0;
    return g;
}

// The four 3x3 vector couplings of the flux-free model, as printed:
//   v0 = (ds/2)(T + T^dag) = -v3,
//   v1 = dd + dh (T + T^dag),
//   v2 = i dh (T^dag - T).
struct VectorCoupling {
    Matrix v0, v1, v2, v3;
    CouplingSet source;
};

inline VectorCoupling vector_decomposition(const CouplingSet& c) {
    c.validate();
    if (c.phi != 0.0)
        throw std::invalid_argument("vector_decomposition: defined for the flux-free model");
    const GeneratorSet g = build_generators();
    const Matrix ring = g.t + g.t.adjoint();  // J+ + J- + J+^2 + J-^2

    VectorCoupling v;
    v.source = c;
    v.v0 = (c.ds / 2.0) * ring;
    v.v1 = c.dd * Matrix::identity(3) + c.dh * ring;
    v.v2 = Complex(0.0, c.dh) * (g.t.adjoint() - g.t);
    v.v3 = Complex(-c.ds / 2.0, 0.0) * ring;
    return v;
}

struct ReassemblyReport {
    Matrix reassembled;
    double max_deviation = 0.0;        // max entry of |reassembled - model|
    double frobenius_deviation = 0.0;
    std::string convention;
};

namespace detail {

inline std::array<Matrix, 4> pauli_matrices() {
    Matrix s0 = Matrix::identity(2);
    Matrix s1(2), s2(2), s3(2);
    s1(0, 1) = 1.0;
    s1(1, 0) = 1.0;
    s2(0, 1) = Complex(0.0, -1.0);
    s2(1, 0) = Complex(0.0, 1.0);
    s3(0, 0) = 1.0;
    s3(1, 1) = -1.0;
    return {s0, s1, s2, s3};
}

inline Matrix assemble_variant(const VectorCoupling& v, bool dimer_major, double v2_sign,
                               double v3_sign) {
    const auto s = pauli_matrices();
    const std::array<Matrix, 4> vs = {v.v0, v.v1, v2_sign * v.v2, v3_sign * v.v3};
    Matrix h(6);
    for (int j = 0; j < 4; ++j)
        h = h + (dimer_major ? kron(vs[j], s[j]) : kron(s[j], vs[j]));
    return h;
}

}  // namespace detail

// Deviation of every sign/ordering variant from the model matrix (on-site
// term excluded: the decomposition describes the coupling structure only).
inline std::map<std::string, std::pair<double, double>> reassembly_variants(
    const VectorCoupling& v) {
    CouplingSet c0 = v.source;
    c0.e0 = 0.0;
    const Matrix model = build_model_hamiltonian(c0);

    std::map<std::string, std::pair<double, double>> table;
    for (int order = 0; order < 2; ++order)
        for (int s2 = 0; s2 < 2; ++s2)
            for (int s3 = 0; s3 < 2; ++s3) {
                const bool dimer_major = order == 0;
                const double v2_sign = s2 == 0 ? 1.0 : -1.0;
                const double v3_sign = s3 == 0 ? 1.0 : -1.0;
                const Matrix d = detail::assemble_variant(v, dimer_major, v2_sign, v3_sign) -
                                 model;
                std::string name = std::string(dimer_major ? "dimer-major" : "dimer-minor") +
                                   (v2_sign > 0 ? ",v2+" : ",v2-") +
                                   (v3_sign > 0 ? ",v3+" : ",v3-");
                table[name] = {d.max_abs(), d.frobenius()};
            }
    return table;
}

// Frozen convention: dimer-major Kronecker order, v2 negated, v3 as printed.
// Selected once as the (max-entry, Frobenius) lexicographic minimizer over
// the eight sign/ordering variants; under it the dimer and inner-triangle
// bonds are reproduced exactly and the hexagon edges come out doubled, so
// the deviation equals dh on those six entries for every coupling set.
inline constexpr const char* kFrozenReassembly = "dimer-major,v2-,v3+";

inline ReassemblyReport reassemble(const VectorCoupling& v) {
    CouplingSet c0 = v.source;
    c0.e0 = 0.0;
    const Matrix model = build_model_hamiltonian(c0);

    ReassemblyReport r;
    r.convention = kFrozenReassembly;
    r.reassembled = detail::assemble_variant(v, true, -1.0, 1.0);
    const Matrix d = r.reassembled - model;
    r.max_deviation = d.max_abs();
    r.frobenius_deviation = d.frobenius();
    return r;
}

struct SymmetryOperator {
    Complex alpha, beta, gamma;
    Matrix matrix;  // Hermitian 6x6
};

namespace detail {

inline Matrix outer(const Cvec& u, const Cvec& w) {
    Matrix m(static_cast<int>(u.size()));
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = 0; j < w.size(); ++j)
            m(static_cast<int>(i), static_cast<int>(j)) = u[i] * std::conj(w[j]);
    return m;
}

}  // namespace detail

// I = alpha |d-><s-| + beta |d-><d+| + gamma |d+><s-| + h.c., where the
// three supplied vectors are taken, in order, as the two doublet members
// and the singlet member of the (near-)degenerate class.
inline SymmetryOperator build_symmetry_operator(const std::vector<Cvec>& triplet,
                                                Complex alpha, Complex beta, Complex gamma) {
    if (triplet.size() != 3)
        throw std::invalid_argument("build_symmetry_operator: need exactly three vectors");
    for (const auto& v : triplet)
        if (v.size() != 6)
            throw std::invalid_argument("build_symmetry_operator: vectors must have dim 6");
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i; j < 3; ++j) {
            const Complex g = inner(triplet[i], triplet[j]);
            const Complex want = i == j ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            if (std::abs(g - want) > 1e-10)
                throw std::invalid_argument(
                    "build_symmetry_operator: triplet is not orthonormal");
        }

    const Cvec& dm = triplet[0];
    const Cvec& dp = triplet[1];
    const Cvec& sm = triplet[2];
    Matrix half = alpha * detail::outer(dm, sm) + beta * detail::outer(dm, dp) +
                  gamma * detail::outer(dp, sm);
    SymmetryOperator op;
    op.alpha = alpha;
    op.beta = beta;
    op.gamma = gamma;
    op.matrix = half + half.adjoint();
    return op;
}

inline double commutator_norm(const Matrix& h, const Matrix& i) {
    if (h.dim() != i.dim()) throw std::invalid_argument("commutator_norm: dimension mismatch");
    return commutator(h, i).frobenius();
}

}  // namespace hexamer
