#pragma once

// Discrete Wigner functions on the C3 x Z2 phase space.
//
// Grids are real quasi-probabilities over (eigenphase row, site column):
//   2x2 : rows are twofold eigenphases beta, columns the kernel index l;
//   3x3 : rows are threefold eigenphases k, columns the site-like index q';
//   6x6 : rows (k,q) and columns (m,n) in the frozen top-to-bottom order
//         (1,1),(2,1),(3,1),(1,2),(2,2),(3,2).
//
// Twofold kernel: the special coefficient table
//   C^{l,b}_{11} = (1+(-1)^l)/4,  C^{l,b}_{22} = (1-(-1)^l)/4,
//   C^{l,b}_{12} = C^{l,b}_{21} = (-1)^b / 4
// is the one that extends to the six-site function, and is used whenever the
// kernel parameters are the special (1/2, 0, 1/4).  Any other (a,b,c) is
// evaluated through the general four-line form, whose "real part" is the
// doubled convention Re{c} = c + c*.  Under the special table the marginals
// come out as:
//   row sums    -> eigenphase probabilities at the same row label;
//   column sums -> site probabilities at a flipped column label
//                  (m = -l2 mod 3, n = 3 - l1), verified state-independent.
// The six-site function carries an extra 1/3 so every grid sums to one.

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hexamer/matrix.hpp"
#include "hexamer/model.hpp"
#include "hexamer/random.hpp"
#include "hexamer/transforms.hpp"

namespace hexamer {

struct WignerGrid {
    int rows = 0;
    int cols = 0;
    std::vector<double> values;  // row-major
    std::vector<std::string> row_labels, col_labels;
    double imag_residue = 0.0;  // largest imaginary part met while evaluating

    WignerGrid() = default;
    WignerGrid(int r, int c) : rows(r), cols(c), values(static_cast<size_t>(r) * c) {}

    double& at(int r, int c) { return values[static_cast<size_t>(r) * cols + c]; }
    double at(int r, int c) const { return values[static_cast<size_t>(r) * cols + c]; }

    double sum() const {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }

    std::vector<double> row_sums() const {
        std::vector<double> s(rows, 0.0);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) s[r] += at(r, c);
        return s;
    }

    std::vector<double> col_sums() const {
        std::vector<double> s(cols, 0.0);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) s[c] += at(r, c);
        return s;
    }
};

struct WignerKernelZ2 {
    double a = 0.5;
    double b = 0.0;
    double c = 0.25;

    bool is_special_table() const { return a == 0.5 && b == 0.0 && c == 0.25; }
};

namespace detail {

inline void check_normalized(const Cvec& psi, const char* who) {
    if (std::abs(norm(psi) - 1.0) > 1e-12)
        throw std::invalid_argument(std::string(who) + ": state must be normalized");
}

// map an integer onto the label set {1,2,3}
inline int wrap3(int x) { return ((x - 1) % 3 + 3) % 3 + 1; }

// special-table coefficient C^{l,beta}_{a,b}, labels all in {1,2}
inline double kernel_coefficient(int l, int beta, int a, int b) {
    const double sl = (l % 2 == 0) ? 1.0 : -1.0;      // (-1)^l
    const double sb = (beta % 2 == 0) ? 1.0 : -1.0;   // (-1)^beta
    if (a == 1 && b == 1) return (1.0 + sl) / 4.0;
    if (a == 2 && b == 2) return (1.0 - sl) / 4.0;
    return sb / 4.0;
}

}  // namespace detail

inline WignerGrid wigner_z2(const Cvec& psi, const WignerKernelZ2& kernel = {}) {
    if (psi.size() != 2) throw std::invalid_argument("wigner_z2: expected 2 amplitudes");
    detail::check_normalized(psi, "wigner_z2");

    WignerGrid g(2, 2);
    g.row_labels = {"b=1", "b=2"};
    g.col_labels = {"l=1", "l=2"};

    if (kernel.is_special_table()) {
        for (int l = 1; l <= 2; ++l)
            for (int beta = 1; beta <= 2; ++beta) {
                Complex w{};
                for (int a = 1; a <= 2; ++a)
                    for (int b = 1; b <= 2; ++b)
                        w += detail::kernel_coefficient(l, beta, a, b) * psi[a - 1] *
                             std::conj(psi[b - 1]);
                g.imag_residue = std::max(g.imag_residue, std::abs(w.imag()));
                g.at(beta - 1, l - 1) = w.real();
            }
        return g;
    }

    // General four-line form; its "real part" doubles: Re{c} = c + c*.
    const double p1 = std::norm(psi[0]);
    const double p2 = std::norm(psi[1]);
    const double rp = 2.0 * (psi[0] * std::conj(psi[1])).real();
    const double a = kernel.a, b = kernel.b, c = kernel.c;
    g.at(0, 0) = a * p1 + b * p2 + c * rp;                                      // W(1,1)
    g.at(0, 1) = (1.0 - a) * p1 - b * p2 - c * rp;                              // W(2,1)
    g.at(1, 0) = (0.5 - a) * p1 + (0.5 - b) * p2 + (0.5 - c) * rp;              // W(1,2)
    g.at(1, 1) = (a - 0.5) * p1 + (b + 0.5) * p2 + (c - 0.5) * rp;              // W(2,2)
    return g;
}

inline WignerGrid wigner_c3(const Cvec& psi) {
    if (psi.size() != 3) throw std::invalid_argument("wigner_c3: expected 3 amplitudes");
    detail::check_normalized(psi, "wigner_c3");

    WignerGrid g(3, 3);
    g.row_labels = {"k=1", "k=2", "k=3"};
    g.col_labels = {"q'=1", "q'=2", "q'=3"};

    for (int k = 1; k <= 3; ++k)
        for (int qp = 1; qp <= 3; ++qp) {
            Complex w{};
            for (int q = 1; q <= 3; ++q) {
                const int qc = detail::wrap3(qp - q);
                w += psi[q - 1] * std::conj(psi[qc - 1]) *
                     detail::third_root(k * (2 * q - qp));
            }
            w /= 3.0;
            g.imag_residue = std::max(g.imag_residue, std::abs(w.imag()));
            g.at(k - 1, qp - 1) = w.real();
        }
    return g;
}

namespace detail {

inline const std::vector<std::string>& sixfold_labels() {
    static const std::vector<std::string> labels = {"(1,1)", "(2,1)", "(3,1)",
                                                    "(1,2)", "(2,2)", "(3,2)"};
    return labels;
}

}  // namespace detail

inline WignerGrid wigner_full(const Cvec& psi) {
    if (psi.size() != 6) throw std::invalid_argument("wigner_full: expected 6 amplitudes");
    detail::check_normalized(psi, "wigner_full");

    WignerGrid g(6, 6);
    g.row_labels = detail::sixfold_labels();  // (k,q) pairs
    g.col_labels = detail::sixfold_labels();  // (m,n) pairs

    for (int b1 = 1; b1 <= 2; ++b1)
        for (int b2 = 1; b2 <= 3; ++b2)
            for (int l1 = 1; l1 <= 2; ++l1)
                for (int l2 = 1; l2 <= 3; ++l2) {
                    Complex w{};
                    for (int a = 1; a <= 2; ++a)
                        for (int b = 1; b <= 2; ++b) {
                            const double coef = detail::kernel_coefficient(l1, b1, a, b);
                            if (coef == 0.0) continue;
                            for (int q = 1; q <= 3; ++q) {
                                const int qc = detail::wrap3(l2 - q);
                                w += coef * psi[site_index(q, a)] *
                                     std::conj(psi[site_index(qc, b)]) *
                                     detail::third_root(b2 * (2 * q - l2));
                            }
                        }
                    w /= 3.0;  // normalizes the grid total to 1
                    g.imag_residue = std::max(g.imag_residue, std::abs(w.imag()));
                    g.at(3 * (b1 - 1) + (b2 - 1), 3 * (l1 - 1) + (l2 - 1)) = w.real();
                }
    return g;
}

struct GridSupport {
    std::vector<std::pair<int, int>> cells;  // 0-based (row, col)
    std::set<int> rows;                      // 0-based rows with >= 1 occupied cell
};

inline GridSupport support(const WignerGrid& g, double eps_rel = 1e-8) {
    if (!(eps_rel > 0.0) || !(eps_rel < 1.0))
        throw std::invalid_argument("support: eps_rel must lie in (0, 1)");
    const double m = g.max_abs();
    if (m == 0.0) throw std::invalid_argument("support: degenerate grid (max |W| = 0)");
    GridSupport s;
    const double cut = eps_rel * m;
    for (int r = 0; r < g.rows; ++r)
        for (int c = 0; c < g.cols; ++c)
            if (std::abs(g.at(r, c)) > cut) {
                s.cells.emplace_back(r, c);
                s.rows.insert(r);
            }
    return s;
}

namespace detail {

inline void check_orthonormal(const std::vector<Cvec>& family, const char* who) {
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = i; j < family.size(); ++j) {
            const Complex g = inner(family[i], family[j]);
            const Complex want = (i == j) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            if (std::abs(g - want) > 1e-10)
                throw std::invalid_argument(std::string(who) +
                                            ": input family is not orthonormal");
        }
}

}  // namespace detail

// Rows occupied by EVERY sampled random unit combination of the family:
// the intersection of the occupied-row sets over n_samples seeded draws.
inline std::set<int> invariant_rows(const std::vector<Cvec>& family, int n_samples,
                                    std::uint64_t seed, double eps_rel = 1e-8) {
    if (family.empty()) throw std::invalid_argument("invariant_rows: empty family");
    for (const auto& v : family)
        if (v.size() != 6)
            throw std::invalid_argument("invariant_rows: states must have 6 amplitudes");
    if (n_samples < 1) throw std::invalid_argument("invariant_rows: need n_samples >= 1");
    detail::check_orthonormal(family, "invariant_rows");

    Rng rng(seed);
    std::set<int> common;
    bool first = true;
    for (int s = 0; s < n_samples; ++s) {
        const Cvec coef = rng.unit_vector(static_cast<int>(family.size()));
        Cvec psi(6);
        for (size_t k = 0; k < family.size(); ++k)
            for (int i = 0; i < 6; ++i) psi[i] += coef[k] * family[k][i];
        psi = normalized(std::move(psi));
        const GridSupport sup = support(wigner_full(psi), eps_rel);
        if (first) {
            common = sup.rows;
            first = false;
        } else {
            std::set<int> keep;
            for (int r : common)
                if (sup.rows.count(r)) keep.insert(r);
            common = std::move(keep);
        }
        if (common.empty()) break;
    }
    return common;
}

}  // namespace hexamer
