#pragma once

// The triple-degeneracy locus and parameter sweeps.
//
// With x = dh/dd, the lowest doublet and the lowest singlet meet exactly
// when ds/dd = F(x) = x / sqrt(1 + x^2); the shared level then sits at
// E/dd = -sqrt(1 + x^2) (plus e0).  find_critical_angle locates the same
// crossing for a geometric configuration by bisecting the signed
// singlet-doublet gap over the twist angle.

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hexamer/clustering.hpp"
#include "hexamer/couplings.hpp"
#include "hexamer/eigen.hpp"
#include "hexamer/geometry.hpp"
#include "hexamer/model.hpp"
#include "hexamer/pipeline.hpp"

namespace hexamer {

inline double locus_F(double x) {
    if (!std::isfinite(x) || x < 0.0)
        throw std::invalid_argument("locus_F: ratio must be non-negative");
    return x / std::sqrt(1.0 + x * x);
}

// Energy of the threefold-degenerate level on the locus, in units of dd.
inline double locus_energy(double x) {
    if (!std::isfinite(x) || x < 0.0)
        throw std::invalid_argument("locus_energy: ratio must be non-negative");
    return -std::sqrt(1.0 + x * x);
}

// A coupling set sitting exactly on the locus for the given ratio.
inline CouplingSet locus_couplings(double dd, double x, double e0 = 0.0) {
    if (!std::isfinite(dd) || dd <= 0.0)
        throw std::invalid_argument("locus_couplings: dd must be positive");
    CouplingSet c;
    c.e0 = e0;
    c.dd = dd;
    c.dh = x * dd;
    c.ds = dd * locus_F(x);
    return c;
}

struct GeometryContext {
    double dimer_length = 1.0;
    double ring_radius = 1.0;
    double twist = 0.0;  // used by sweeps that hold the angle fixed
    DecayLaw law;
    double e0 = 0.0;
};

struct CriticalAngleOptions {
    int scan_points = 33;       // coarse scan for a sign change
    double bracket_tol = 1e-12;
    double gap_tol = 1e-11;
    int max_iterations = 200;
    double class_tol = 1e-12;   // resolves singlet vs doublet while tracking
};

struct CriticalAngleResult {
    bool found = false;
    double theta_c = 0.0;
    double gap = 0.0;  // |singlet - doublet| at theta_c
    std::string note;
};

namespace detail {

// Signed singlet-doublet gap of the lowest two classes of the full
// geometric Hamiltonian; empty when they cannot be told apart (already
// merged at class_tol, as happens for very dilute rings).
inline std::optional<double> singlet_doublet_gap(const GeometryContext& g, double theta,
                                                 double class_tol) {
    const SiteLayout lay = build_layout(g.dimer_length, g.ring_radius, theta);
    const Matrix h = build_full_hamiltonian(lay, g.law, g.e0);
    const Spectrum s = eigensolve(h);
    const DegeneracyClasses dc = cluster_degeneracies(s, class_tol);
    if (dc.classes.size() < 2) return std::nullopt;
    const auto& lo = dc.classes[0];
    const auto& hi = dc.classes[1];
    double singlet, doublet;
    if (lo.multiplicity == 1 && hi.multiplicity == 2) {
        singlet = lo.energy;
        doublet = hi.energy;
    } else if (lo.multiplicity == 2 && hi.multiplicity == 1) {
        doublet = lo.energy;
        singlet = hi.energy;
    } else {
        return std::nullopt;  // not a tracked singlet/doublet pattern
    }
    return singlet - doublet;
}

}  // namespace detail

inline CriticalAngleResult find_critical_angle(const GeometryContext& g,
                                               const CriticalAngleOptions& opt = {}) {
    g.law.validate();
    if (opt.scan_points < 2)
        throw std::invalid_argument("find_critical_angle: need at least two scan points");

    const double theta_max = std::numbers::pi / 2.0;
    // keep the endpoint clear of the 2R <= L guard when dimers are long
    const double hi_limit = (2.0 * g.ring_radius > g.dimer_length)
                                ? theta_max
                                : theta_max * (1.0 - 1e-9);

    std::vector<double> thetas(opt.scan_points);
    std::vector<std::optional<double>> gaps(opt.scan_points);
    int usable = 0;
    for (int i = 0; i < opt.scan_points; ++i) {
        thetas[i] = hi_limit * i / (opt.scan_points - 1);
        gaps[i] = detail::singlet_doublet_gap(g, thetas[i], opt.class_tol);
        if (gaps[i]) ++usable;
    }
    if (usable == 0) {
        CriticalAngleResult r;
        r.note = "no crossing: singlet and doublet are unresolvable over the scan";
        return r;
    }

    // bracket between consecutive usable points of opposite sign
    int ia = -1, ib = -1;
    std::optional<double> prev;
    int prev_idx = -1;
    for (int i = 0; i < opt.scan_points; ++i) {
        if (!gaps[i]) continue;
        if (prev && ((*prev < 0.0) != (*gaps[i] < 0.0))) {
            ia = prev_idx;
            ib = i;
            break;
        }
        prev = gaps[i];
        prev_idx = i;
    }
    if (ia < 0) {
        CriticalAngleResult r;
        r.note = "no crossing: singlet-doublet gap keeps one sign over the scan";
        return r;
    }

    double a = thetas[ia], b = thetas[ib];
    double ga = *gaps[ia];
    double best_theta = a, best_gap = std::abs(ga);
    for (int it = 0; it < opt.max_iterations && (b - a) > opt.bracket_tol; ++it) {
        const double mid = (a + b) / 2.0;
        const auto gm = detail::singlet_doublet_gap(g, mid, opt.class_tol);
        if (!gm) {
            // merged at class_tol: the crossing is inside the window
            best_theta = mid;
            best_gap = 0.0;
            break;
        }
        if (std::abs(*gm) < best_gap) {
            best_gap = std::abs(*gm);
            best_theta = mid;
        }
        if ((*gm < 0.0) == (ga < 0.0)) {
            a = mid;
            ga = *gm;
        } else {
            b = mid;
        }
    }

    if (best_gap > opt.gap_tol)
        throw std::runtime_error("find_critical_angle: bisection stalled at gap " +
                                 std::to_string(best_gap));
    CriticalAngleResult r;
    r.found = true;
    r.theta_c = best_theta;
    r.gap = best_gap;
    return r;
}

// ---------------------------------------------------------------------------
// Parameter sweeps

enum class SweepParameter {
    twist_angle,                // theta over a geometry (or inert with plain couplings)
    hexagon_coupling,           // dh at fixed ds
    hexagon_coupling_on_locus,  // dh with ds following the locus
    ring_radius                 // R at fixed twist
};

inline std::string to_string(SweepParameter p) {
    switch (p) {
        case SweepParameter::twist_angle: return "theta";
        case SweepParameter::hexagon_coupling: return "dh";
        case SweepParameter::hexagon_coupling_on_locus: return "dh_locus";
        case SweepParameter::ring_radius: return "R";
    }
    throw std::invalid_argument("to_string: unknown sweep parameter");
}

struct SweepRequest {
    SweepParameter parameter = SweepParameter::twist_angle;
    double lo = 0.0;
    double hi = 1.0;
    int points = 2;
    double cluster_tol = 1e-9;
    std::optional<CouplingSet> couplings;     // base for coupling sweeps
    std::optional<GeometryContext> geometry;  // context for geometric sweeps
    bool full_hamiltonian = true;             // geometric sweeps: all pairs vs model bonds
};

struct SweepRow {
    double param = 0.0;
    std::array<double, 6> energies{};
    std::string pattern;
};

struct SweepTable {
    std::string parameter;
    std::vector<SweepRow> rows;
};

namespace detail {

inline SweepRow sweep_row(double param, const Matrix& h, double cluster_tol) {
    const Spectrum s = eigensolve(h);
    const DegeneracyClasses dc = cluster_degeneracies(s, cluster_tol);
    SweepRow row;
    row.param = param;
    for (int i = 0; i < 6; ++i) row.energies[i] = s.eigenvalues[i];
    row.pattern = dc.pattern();
    return row;
}

}  // namespace detail

inline SweepTable sweep(const SweepRequest& req) {
    if (req.points < 2) throw std::invalid_argument("sweep: need at least two grid points");
    if (!(req.lo < req.hi)) throw std::invalid_argument("sweep: grid must be increasing");

    const bool needs_geometry = req.parameter == SweepParameter::ring_radius ||
                                (req.parameter == SweepParameter::twist_angle &&
                                 (req.full_hamiltonian || !req.couplings));
    if (needs_geometry && !req.geometry)
        throw std::invalid_argument("sweep: this parameter needs a geometry context");
    if (!needs_geometry && req.parameter != SweepParameter::twist_angle && !req.couplings)
        throw std::invalid_argument("sweep: coupling sweeps need a base coupling set");

    SweepTable table;
    table.parameter = to_string(req.parameter);
    for (int i = 0; i < req.points; ++i) {
        const double x = req.lo + (req.hi - req.lo) * i / (req.points - 1);
        Matrix h(6);
        switch (req.parameter) {
            case SweepParameter::twist_angle: {
                if (req.couplings && !req.full_hamiltonian && !req.geometry) {
                    h = build_model_hamiltonian(*req.couplings);  // angle-inert couplings
                    break;
                }
                const auto& g = *req.geometry;
                const SiteLayout lay = build_layout(g.dimer_length, g.ring_radius, x);
                h = req.full_hamiltonian
                        ? build_full_hamiltonian(lay, g.law, g.e0)
                        : build_model_hamiltonian(couplings_from_geometry(lay, g.law, g.e0));
                break;
            }
            case SweepParameter::hexagon_coupling: {
                CouplingSet c = *req.couplings;
                c.dh = x;
                h = build_model_hamiltonian(c);
                break;
            }
            case SweepParameter::hexagon_coupling_on_locus: {
                CouplingSet c = *req.couplings;
                if (c.dd <= 0.0)
                    throw std::invalid_argument("sweep: locus walk needs dd > 0");
                c.dh = x;
                c.ds = c.dd * locus_F(x / c.dd);
                h = build_model_hamiltonian(c);
                break;
            }
            case SweepParameter::ring_radius: {
                const auto& g = *req.geometry;
                const SiteLayout lay = build_layout(g.dimer_length, x, g.twist);
                h = req.full_hamiltonian
                        ? build_full_hamiltonian(lay, g.law, g.e0)
                        : build_model_hamiltonian(couplings_from_geometry(lay, g.law, g.e0));
                break;
            }
        }
        table.rows.push_back(detail::sweep_row(x, h, req.cluster_tol));
    }
    return table;
}

// Twist sweeps of the same geometry with all pairwise hops versus the three
// model bonds only, on a shared grid.
inline std::pair<SweepTable, SweepTable> sweep_model_vs_full(const GeometryContext& g,
                                                             double lo, double hi, int points,
                                                             double cluster_tol = 1e-9) {
    SweepRequest req;
    req.parameter = SweepParameter::twist_angle;
    req.lo = lo;
    req.hi = hi;
    req.points = points;
    req.cluster_tol = cluster_tol;
    req.geometry = g;
    req.full_hamiltonian = true;
    SweepTable full = sweep(req);
    req.full_hamiltonian = false;
    SweepTable model = sweep(req);
    full.parameter = "theta_full";
    model.parameter = "theta_model";
    return {full, model};
}

}  // namespace hexamer
