#pragma once

// The six-site model Hamiltonian of the dimeric hexagonal complex.
//
// Sites are labelled (m, n) with dimer index m in {1,2,3} and intra-dimer
// index n in {1,2}; the frozen storage order is (1,1),(1,2),(2,1),(2,2),
// (3,1),(3,2).  Bonds:
//   dd : (m,1)-(m,2)            intra-dimer
//   dh : (m,2)-(m+1,1)          hexagon edges, m cyclic
//   ds : (m,2)-(m',2)           inner triangle over the n=2 sites
//
// A nonzero flux phase is carried uniformly by the three hexagon edges with
// a consistent ring orientation, <(m,2)|H|(m+1,1)> = dh * e^{i phi}, so the
// threefold shift m -> m+1 remains an exact symmetry and the hexagon loop
// encloses total phase 3*phi.

#include <complex>
#include <stdexcept>

#include "hexamer/couplings.hpp"
#include "hexamer/matrix.hpp"

namespace hexamer {

// 1-based labels (m, n) to the frozen 0-based storage index.
inline int site_index(int m, int n) {
    if (m < 1 || m > 3 || n < 1 || n > 2)
        throw std::invalid_argument("site_index: m in 1..3, n in 1..2");
    return 2 * (m - 1) + (n - 1);
}

inline Matrix build_model_hamiltonian(const CouplingSet& c) {
    c.validate();
    Matrix h(6);
    for (int i = 0; i < 6; ++i) h(i, i) = c.e0;

    for (int m = 1; m <= 3; ++m) {
        const int a = site_index(m, 1), b = site_index(m, 2);
        h(a, b) = c.dd;
        h(b, a) = c.dd;
    }

    for (int m = 1; m <= 3; ++m) {
        const int mm = m % 3 + 1;  // m+1, cyclic
        const int a = site_index(m, 2), b = site_index(mm, 1);
        if (c.phi == 0.0) {
            h(a, b) = c.dh;
            h(b, a) = c.dh;
        } else {
            const Complex hop = c.dh * std::exp(Complex(0.0, c.phi));
            h(a, b) = hop;
            h(b, a) = std::conj(hop);
        }
    }

    for (int m = 1; m <= 3; ++m)
        for (int mp = m + 1; mp <= 3; ++mp) {
            const int a = site_index(m, 2), b = site_index(mp, 2);
            h(a, b) = c.ds;
            h(b, a) = c.ds;
        }

    return h;
}

// Permutation matrix of the threefold shift m -> m+1 (sites 1..6 -> 3,4,5,6,1,2);
// S H S^dagger = H for every flux value.
inline Matrix dimer_shift_permutation() {
    Matrix s(6);
    for (int i = 0; i < 6; ++i) s((i + 2) % 6, i) = 1.0;
    return s;
}

}  // namespace hexamer
