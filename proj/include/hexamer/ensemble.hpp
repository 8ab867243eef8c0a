#pragma once

// Chains of hexamer blocks with a single inter-polymer hopping bond, the
// degeneracy-scaling counters (g, N, g/N, 3g) read off their spectra, and
// discrete Wilson-loop phases along closed parameter loops.

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "hexamer/clustering.hpp"
#include "hexamer/couplings.hpp"
#include "hexamer/eigen.hpp"
#include "hexamer/geometry.hpp"
#include "hexamer/locus.hpp"
#include "hexamer/matrix.hpp"
#include "hexamer/model.hpp"

namespace hexamer {

// An open chain of hexamer blocks.  Blocks are listed in chain order; the
// hop couples site `hop_site` of each block to the same site of the next
// block with real amplitude `inter_hop`.  By convention the blocks tuned to
// the degeneracy locus come first (make_chain follows this).
struct ChainSpec {
    int n_polymers = 0;
    std::vector<CouplingSet> block_couplings;
    double inter_hop = 0.0;
    int n_critical = 0;
    int hop_site = 0;  // 0..5, storage index within a block; default site (1,1)

    void validate() const {
        if (n_polymers < 1) throw std::invalid_argument("ChainSpec: need at least one polymer");
        if (static_cast<int>(block_couplings.size()) != n_polymers)
            throw std::invalid_argument("ChainSpec: one coupling set per polymer required");
        if (n_critical < 0 || n_critical > n_polymers)
            throw std::invalid_argument("ChainSpec: n_critical must lie in [0, n_polymers]");
        if (!(inter_hop >= 0.0) || !std::isfinite(inter_hop))
            throw std::invalid_argument("ChainSpec: inter_hop must be finite and >= 0");
        if (hop_site < 0 || hop_site >= 6)
            throw std::invalid_argument("ChainSpec: hop_site must be in [0, 6)");
        for (const auto& c : block_couplings) c.validate();
    }
};

// Standard chain: k blocks at the canonical triple point (dd = 1, dh = 1.9,
// ds = F(1.9)), the remaining blocks detuned by ds -> ds + detune.
inline ChainSpec make_chain(int n_polymers, int n_critical, double inter_hop,
                            double detune = 0.1, int hop_site = 0) {
    CouplingSet critical{0.0, 1.0, 1.9, locus_F(1.9), 0.0};
    CouplingSet detuned = critical;
    detuned.ds += detune;

    ChainSpec spec;
    spec.n_polymers = n_polymers;
    spec.inter_hop = inter_hop;
    spec.n_critical = n_critical;
    spec.hop_site = hop_site;
    for (int b = 0; b < n_polymers; ++b)
        spec.block_couplings.push_back(b < n_critical ? critical : detuned);
    spec.validate();
    return spec;
}

inline Matrix build_chain(const ChainSpec& spec) {
    spec.validate();
    const int n = spec.n_polymers;
    Matrix h(6 * n);
    for (int b = 0; b < n; ++b) {
        const Matrix block = build_model_hamiltonian(spec.block_couplings[b]);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) h(6 * b + i, 6 * b + j) = block(i, j);
    }
    for (int b = 0; b + 1 < n; ++b) {
        const int p = 6 * b + spec.hop_site;
        const int q = 6 * (b + 1) + spec.hop_site;
        h(p, q) = spec.inter_hop;
        h(q, p) = spec.inter_hop;
    }
    return h;
}

// Energy of the triple-degenerate class a block would have if its ds were
// tuned to the locus: e0 - sqrt(dd^2 + dh^2).
inline double triple_point_energy(const CouplingSet& c) {
    return c.e0 - std::hypot(c.dd, c.dh);
}

struct ScalingReport {
    int g = 0;           // multiplicity of the reference class
    int n = 0;           // number of polymers
    double l_ratio = 0;  // g / n
    double action = 0;   // 3 g  (hbar = 1)
    double reference_energy = 0.0;
    double class_energy = 0.0;
};

// Eigensolve the chain, cluster at `tol`, and report the class nearest the
// single-block triple energy.  `window`: largest accepted |class - reference|.
inline ScalingReport scaling_report(const ChainSpec& spec, double tol, double window = 0.1) {
    spec.validate();
    if (!(tol > 0.0)) throw std::invalid_argument("scaling_report: tol must be positive");

    // Critical blocks lead the list by convention, so block 0 sets the reference.
    const double e_ref = triple_point_energy(spec.block_couplings.front());

    const Spectrum s = eigensolve(build_chain(spec));
    const DegeneracyClasses classes = cluster_degeneracies(s.eigenvalues, tol);

    int best = -1;
    double best_dist = window;
    for (size_t k = 0; k < classes.classes.size(); ++k) {
        const double d = std::abs(classes.classes[k].energy - e_ref);
        if (d <= best_dist) {
            best_dist = d;
            best = static_cast<int>(k);
        }
    }
    if (best < 0)
        throw std::runtime_error("scaling_report: no degeneracy class within " +
                                 std::to_string(window) + " of the reference energy");

    ScalingReport r;
    r.g = classes.classes[best].multiplicity;
    r.n = spec.n_polymers;
    r.l_ratio = static_cast<double>(r.g) / r.n;
    r.action = 3.0 * r.g;
    r.reference_energy = e_ref;
    r.class_energy = classes.classes[best].energy;
    return r;
}

// A closed loop in coupling space.  The endpoint is stored explicitly:
// points.front() == points.back() exactly.  Constant loops are legal.
struct ParameterLoop {
    std::vector<CouplingSet> points;

    void validate() const {
        if (points.size() < 4)
            throw std::invalid_argument(
                "ParameterLoop: need at least 4 entries (3 segments plus explicit closure)");
        if (!(points.front() == points.back()))
            throw std::invalid_argument("ParameterLoop: loop must close exactly");
        for (const auto& c : points) c.validate();
    }
};

struct BerryOptions {
    double gap_tol = 1e-9;      // refuse when a neighbor gap is <= 10 * gap_tol
    double min_overlap = 1e-6;  // refuse when successive overlaps nearly vanish
};

// Gauge-invariant Wilson phase of a cyclic state list (no duplicated
// endpoint): phi = -arg prod_i <psi_i | psi_{i+1 mod n}>, in (-pi, pi].
inline double wilson_loop_phase(const std::vector<Cvec>& states,
                                double min_overlap = 1e-6) {
    if (states.size() < 2)
        throw std::invalid_argument("wilson_loop_phase: need at least two states");
    Complex product(1.0, 0.0);
    for (size_t i = 0; i < states.size(); ++i) {
        const Complex ov = inner(states[i], states[(i + 1) % states.size()]);
        if (std::abs(ov) < min_overlap)
            throw std::runtime_error(
                "wilson_loop_phase: near-vanishing overlap between points " +
                std::to_string(i) + " and " + std::to_string((i + 1) % states.size()) +
                " - loop too coarse");
        product *= ov;
    }
    double phi = -std::arg(product);
    if (phi <= -std::numbers::pi) phi += 2.0 * std::numbers::pi;
    return phi == 0.0 ? 0.0 : phi;
}

// Wilson loop for the `level_index`-th eigenvector of a closed Hamiltonian
// loop (hs.front() and hs.back() describe the same point).
inline double berry_phase_matrices(const std::vector<Matrix>& hs, int level_index,
                                   const BerryOptions& opt = {}) {
    if (hs.size() < 4)
        throw std::invalid_argument("berry_phase: need at least 4 loop entries");
    if ((hs.front() - hs.back()).max_abs() != 0.0)
        throw std::invalid_argument("berry_phase: loop must close exactly");

    std::vector<Cvec> states;
    for (size_t i = 0; i + 1 < hs.size(); ++i) {  // drop the duplicated endpoint
        const Spectrum s = eigensolve(hs[i]);
        const int dim = static_cast<int>(s.eigenvalues.size());
        if (level_index < 0 || level_index >= dim)
            throw std::invalid_argument("berry_phase: level index out of range");
        double gap = std::numeric_limits<double>::infinity();
        if (level_index > 0)
            gap = std::min(gap, s.eigenvalues[level_index] - s.eigenvalues[level_index - 1]);
        if (level_index + 1 < dim)
            gap = std::min(gap, s.eigenvalues[level_index + 1] - s.eigenvalues[level_index]);
        if (!(gap > 10.0 * opt.gap_tol))
            throw std::runtime_error("berry_phase: tracked level is degenerate at loop point " +
                                     std::to_string(i) + " (gap " + std::to_string(gap) + ")");
        states.push_back(s.eigenvector(level_index));
    }
    return wilson_loop_phase(states, opt.min_overlap);
}

inline double berry_phase(const ParameterLoop& loop, int level_index,
                          const BerryOptions& opt = {}) {
    loop.validate();
    std::vector<Matrix> hs;
    for (const auto& c : loop.points) hs.push_back(build_model_hamiltonian(c));
    return berry_phase_matrices(hs, level_index, opt);
}

// Hamiltonians of a twist-angle loop at fixed geometry; thetas must close
// (first == last) for use with berry_phase_matrices.
inline std::vector<Matrix> twist_loop_hamiltonians(const GeometryContext& ctx,
                                                   const std::vector<double>& thetas) {
    std::vector<Matrix> hs;
    for (const double theta : thetas) {
        const SiteLayout layout =
            build_layout(ctx.dimer_length, ctx.ring_radius, theta);
        hs.push_back(build_full_hamiltonian(layout, ctx.law, ctx.e0));
    }
    return hs;
}

}  // namespace hexamer
