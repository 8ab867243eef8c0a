#pragma once

// Cyclic Jacobi eigensolver for complex Hermitian matrices.
//
// Chosen for dependency-free, close-to-machine accuracy at the tiny
// dimensions that occur here (2..6 for a single complex, 6N for chains).
// Each rotation annihilates one off-diagonal pair exactly; a sweep visits
// all pairs in a fixed row-major order, so the result is deterministic.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hexamer/matrix.hpp"

namespace hexamer {

struct JacobiOptions {
    double tol = 1e-14;             // stop when off(H) < tol * ||H||_F
    int max_sweeps = 100;
    double hermiticity_tol = 1e-12;
};

struct Spectrum {
    std::vector<double> eigenvalues;  // ascending
    Matrix eigenvectors;              // column k pairs with eigenvalues[k]
    int sweeps = 0;

    Cvec eigenvector(int k) const {
        Cvec v(eigenvectors.dim());
        for (int i = 0; i < eigenvectors.dim(); ++i) v[i] = eigenvectors(i, k);
        return v;
    }
};

namespace detail {

inline double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// Multiply the eigenvector so its largest-magnitude component (first such
// index on ties) is real and positive: a deterministic gauge.
inline void fix_phase(Cvec& v) {
    int imax = 0;
    double best = 0.0;
    for (size_t i = 0; i < v.size(); ++i) {
        const double a = std::abs(v[i]);
        if (a > best) {
            best = a;
            imax = static_cast<int>(i);
        }
    }
    if (best == 0.0) return;
    scale(v, std::conj(v[imax]) / best);
}

}  // namespace detail

inline Spectrum eigensolve(const Matrix& h, const JacobiOptions& opt = {}) {
    const int n = h.dim();
    if (n == 0) throw std::invalid_argument("eigensolve: empty matrix");
    if (h.hermiticity_error() > opt.hermiticity_tol)
        throw std::invalid_argument("eigensolve: input is not Hermitian");

    Matrix a = h;
    Matrix v = Matrix::identity(n);
    const double target = opt.tol * std::max(h.frobenius(), 1e-300);

    int sweep = 0;
    while (detail::off_diagonal_norm(a) >= target) {
        if (sweep >= opt.max_sweeps)
            throw std::runtime_error("eigensolve: no convergence after " +
                                     std::to_string(sweep) + " sweeps");
        ++sweep;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;

                // Unitary 2x2 rotation annihilating the (p,q) entry of the
                // Hermitian block [[app, apq], [apq*, aqq]].
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const Complex s = (t * c) * (apq / mag);

                for (int i = 0; i < n; ++i) {  // columns: A <- A U
                    const Complex aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - std::conj(s) * aiq;
                    a(i, q) = s * aip + c * aiq;
                }
                for (int j = 0; j < n; ++j) {  // rows: A <- U^dagger A
                    const Complex apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj - s * aqj;
                    a(q, j) = std::conj(s) * apj + c * aqj;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {  // accumulate V <- V U
                    const Complex vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - std::conj(s) * viq;
                    v(i, q) = s * vip + c * viq;
                }
            }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = a(i, i).real();
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return diag[x] < diag[y]; });

    Spectrum out;
    out.sweeps = sweep;
    out.eigenvalues.resize(n);
    out.eigenvectors = Matrix(n);
    for (int k = 0; k < n; ++k) {
        out.eigenvalues[k] = diag[order[k]];
        Cvec col(n);
        for (int i = 0; i < n; ++i) col[i] = v(i, order[k]);
        detail::fix_phase(col);
        for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = col[i];
    }
    return out;
}

// max_i ||H v_i - E_i v_i||_inf, the worst eigenpair residual.
inline double max_residual(const Matrix& h, const Spectrum& s) {
    double worst = 0.0;
    for (size_t k = 0; k < s.eigenvalues.size(); ++k) {
        Cvec v = s.eigenvector(static_cast<int>(k));
        Cvec hv = h.apply(v);
        for (size_t i = 0; i < v.size(); ++i)
            worst = std::max(worst, std::abs(hv[i] - s.eigenvalues[k] * v[i]));
    }
    return worst;
}

inline double spectral_range(const Spectrum& s) {
    if (s.eigenvalues.empty()) return 0.0;
    return s.eigenvalues.back() - s.eigenvalues.front();
}

}  // namespace hexamer
