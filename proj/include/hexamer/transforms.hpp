#pragma once

// Discrete symmetry transforms of state amplitudes.
//
// Conventions (frozen):
//   threefold : psi~_k = 3^{-1/2} sum_q e^{+2 pi i q k / 3} psi_q,
//               labels q, k in {1,2,3}; k = 3 is the trivial representation.
//   twofold   : psi~_s = 2^{-1/2} [ (-1)^s psi_1 + psi_2 ],
//               s = 1 antisymmetric, s = 2 symmetric.
//   combined  : psi~_{k,s} = 6^{-1/2} sum_{q,r} e^{2 pi i q k/3} (-1)^{r s} psi_{q,r},
//               acting on the six-site order (m,n) = (1,1),(1,2),...,(3,2);
//               output index (s-1)*3 + (k-1), i.e. k fast within each s.

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hexamer/matrix.hpp"
#include "hexamer/model.hpp"

namespace hexamer {

namespace detail {

// e^{2 pi i j / 3} reduced exactly: only three distinct values occur.
inline Complex third_root(int j) {
    const int r = ((j % 3) + 3) % 3;
    if (r == 0) return Complex(1.0, 0.0);
    const double s = std::sqrt(3.0) / 2.0;
    return r == 1 ? Complex(-0.5, s) : Complex(-0.5, -s);
}

}  // namespace detail

inline Cvec c3_transform(const Cvec& psi) {
    if (psi.size() != 3) throw std::invalid_argument("c3_transform: expected 3 amplitudes");
    const double r = 1.0 / std::sqrt(3.0);
    Cvec out(3);
    for (int k = 1; k <= 3; ++k) {
        Complex s{};
        for (int q = 1; q <= 3; ++q) s += detail::third_root(q * k) * psi[q - 1];
        out[k - 1] = r * s;
    }
    return out;
}

inline Cvec c3_inverse(const Cvec& tilde) {
    if (tilde.size() != 3) throw std::invalid_argument("c3_inverse: expected 3 amplitudes");
    const double r = 1.0 / std::sqrt(3.0);
    Cvec out(3);
    for (int q = 1; q <= 3; ++q) {
        Complex s{};
        for (int k = 1; k <= 3; ++k) s += detail::third_root(-q * k) * tilde[k - 1];
        out[q - 1] = r * s;
    }
    return out;
}

inline Cvec z2_transform(const Cvec& psi) {
    if (psi.size() != 2) throw std::invalid_argument("z2_transform: expected 2 amplitudes");
    const double r = 1.0 / std::sqrt(2.0);
    return {r * (psi[1] - psi[0]), r * (psi[1] + psi[0])};
}

inline Cvec z2_inverse(const Cvec& tilde) {
    if (tilde.size() != 2) throw std::invalid_argument("z2_inverse: expected 2 amplitudes");
    const double r = 1.0 / std::sqrt(2.0);
    return {r * (tilde[1] - tilde[0]), r * (tilde[1] + tilde[0])};
}

// Combined transform on the six sites; output ordered (k,s) = (1,1),(2,1),
// (3,1),(1,2),(2,2),(3,2) to match the phase-space grid rows.
inline Cvec full_transform(const Cvec& psi) {
    if (psi.size() != 6) throw std::invalid_argument("full_transform: expected 6 amplitudes");
    const double r = 1.0 / std::sqrt(6.0);
    Cvec out(6);
    for (int s = 1; s <= 2; ++s)
        for (int k = 1; k <= 3; ++k) {
            Complex acc{};
            for (int q = 1; q <= 3; ++q)
                for (int n = 1; n <= 2; ++n) {
                    const double sign = ((n * s) % 2 == 0) ? 1.0 : -1.0;  // (-1)^{n s}
                    acc += detail::third_root(q * k) * sign * psi[site_index(q, n)];
                }
            out[(s - 1) * 3 + (k - 1)] = r * acc;
        }
    return out;
}

// The same transforms as explicit unitaries (for composition checks).
inline Matrix c3_transform_matrix() {
    Matrix u(3);
    const double r = 1.0 / std::sqrt(3.0);
    for (int k = 1; k <= 3; ++k)
        for (int q = 1; q <= 3; ++q) u(k - 1, q - 1) = r * detail::third_root(q * k);
    return u;
}

inline Matrix z2_transform_matrix() {
    Matrix u(2);
    const double r = 1.0 / std::sqrt(2.0);
    u(0, 0) = -r;
    u(0, 1) = r;
    u(1, 0) = r;
    u(1, 1) = r;
    return u;
}

inline Matrix full_transform_matrix() {
    // kron(C3, Z2) acts on site order (m,n); rows come out ordered with the
    // twofold label fast, so regroup them to the frozen (k fast) order.
    const Matrix m = kron(c3_transform_matrix(), z2_transform_matrix());
    Matrix u(6);
    for (int k = 1; k <= 3; ++k)
        for (int s = 1; s <= 2; ++s) {
            const int from = 2 * (k - 1) + (s - 1);
            const int to = (s - 1) * 3 + (k - 1);
            for (int j = 0; j < 6; ++j) u(to, j) = m(from, j);
        }
    return u;
}

}  // namespace hexamer
