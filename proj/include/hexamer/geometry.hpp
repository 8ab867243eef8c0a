#pragma once

// Planar geometry of the complex: three rigid dimers of length L whose
// centres sit on a ring of radius R at polar angles 90, 210 and 330 degrees.
// Every dimer is twisted by the same angle theta measured from the ring
// tangent, so the threefold rotation symmetry is kept for all theta.
//
//   theta = 0    : dimers lie along the tangent and the six sites form a
//                  (generally irregular) hexagon;
//   theta = pi/2 : dimers point along the radius and the n=2 sites form a
//                  small inner triangle, the n=1 sites a large outer one.
//
// Site (m,1) sits at C_m + (L/2) a_m, site (m,2) at C_m - (L/2) a_m with
// axis a_m(theta) = -cos(theta) t_m + sin(theta) r_m (t_m tangent, r_m
// radial).  The orientation is chosen so the theta = 0 nearest-neighbour
// ring runs (m,2)-(m+1,1), matching the model's hexagon bonds.

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hexamer/couplings.hpp"
#include "hexamer/matrix.hpp"
#include "hexamer/model.hpp"

namespace hexamer {

struct SiteLayout {
    std::array<std::array<double, 2>, 6> positions{};  // frozen site order
    double dimer_length = 0.0;
    double ring_radius = 0.0;
    double twist = 0.0;

    double distance(int i, int j) const {
        const double dx = positions[i][0] - positions[j][0];
        const double dy = positions[i][1] - positions[j][1];
        return std::hypot(dx, dy);
    }
};

inline SiteLayout build_layout(double dimer_length, double ring_radius, double twist) {
    if (!std::isfinite(dimer_length) || dimer_length <= 0.0)
        throw std::invalid_argument("build_layout: dimer length must be positive");
    if (!std::isfinite(ring_radius) || ring_radius <= 0.0)
        throw std::invalid_argument("build_layout: ring radius must be positive");
    if (!std::isfinite(twist) || twist < 0.0 || twist > std::numbers::pi / 2.0)
        throw std::invalid_argument("build_layout: twist must lie in [0, pi/2]");
    if (twist == std::numbers::pi / 2.0 && 2.0 * ring_radius <= dimer_length)
        throw std::invalid_argument(
            "build_layout: radial dimers need 2R > L to keep sites distinct");

    SiteLayout lay;
    lay.dimer_length = dimer_length;
    lay.ring_radius = ring_radius;
    lay.twist = twist;

    for (int m = 1; m <= 3; ++m) {
        const double phi_m = std::numbers::pi / 2.0 + (m - 1) * 2.0 * std::numbers::pi / 3.0;
        const double cx = ring_radius * std::cos(phi_m);
        const double cy = ring_radius * std::sin(phi_m);
        const double tx = -std::sin(phi_m), ty = std::cos(phi_m);  // tangent
        const double rx = std::cos(phi_m), ry = std::sin(phi_m);   // radial
        const double ax = -std::cos(twist) * tx + std::sin(twist) * rx;
        const double ay = -std::cos(twist) * ty + std::sin(twist) * ry;
        const double half = dimer_length / 2.0;
        lay.positions[site_index(m, 1)] = {cx + half * ax, cy + half * ay};
        lay.positions[site_index(m, 2)] = {cx - half * ax, cy - half * ay};
    }
    return lay;
}

// Hopping between every pair of sites from the distance decay law; the full
// Hamiltonian of the geometry, with no bond pattern imposed.
inline Matrix build_full_hamiltonian(const SiteLayout& lay, const DecayLaw& law, double e0) {
    law.validate();
    if (!std::isfinite(e0)) throw std::invalid_argument("build_full_hamiltonian: non-finite e0");
    Matrix h(6);
    for (int i = 0; i < 6; ++i) h(i, i) = e0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            const double t = law.coupling(lay.distance(i, j));
            h(i, j) = t;
            h(j, i) = t;
        }
    return h;
}

// Reduce a layout to the three model couplings: the intra-dimer bond, the
// hexagon edge (m,2)-(m+1,1) and the inner-triangle bond (m,2)-(m',2).  The
// threefold symmetry makes the choice of m irrelevant.
inline CouplingSet couplings_from_geometry(const SiteLayout& lay, const DecayLaw& law,
                                           double e0) {
    law.validate();
    if (!std::isfinite(e0)) throw std::invalid_argument("couplings_from_geometry: non-finite e0");
    CouplingSet c;
    c.e0 = e0;
    c.dd = law.coupling(lay.distance(site_index(1, 1), site_index(1, 2)));
    c.dh = law.coupling(lay.distance(site_index(1, 2), site_index(2, 1)));
    c.ds = law.coupling(lay.distance(site_index(1, 2), site_index(2, 2)));
    c.phi = 0.0;
    return c;
}

}  // namespace hexamer
