#pragma once

// Named experiment presets and the artifact bundles behind the `regime` and
// `algebra-verify` front-end commands.  A regime bundle is a map of file
// names to file contents: a re-runnable manifest, the spectrum table, the
// phase-space portraits of the low-lying states, and a JSON report.

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hexamer/algebra.hpp"
#include "hexamer/clustering.hpp"
#include "hexamer/couplings.hpp"
#include "hexamer/eigen.hpp"
#include "hexamer/ensemble.hpp"
#include "hexamer/io.hpp"
#include "hexamer/locus.hpp"
#include "hexamer/model.hpp"
#include "hexamer/pipeline.hpp"
#include "hexamer/random.hpp"
#include "hexamer/wigner.hpp"

namespace hexamer {

enum class PresetKind { couplings, sweep, compare_model_full };

struct Preset {
    std::string name;
    PresetKind kind = PresetKind::couplings;
    std::string description;

    CouplingSet couplings{};    // kind == couplings
    double cluster_tol = 1e-9;  // default clustering tolerance for this preset

    SweepRequest sweep{};  // kind == sweep

    GeometryContext compare_geometry{};  // kind == compare_model_full
    double compare_lo = 0.0;
    double compare_hi = std::numbers::pi / 2.0;
    int compare_points = 33;
};

inline std::vector<std::string> preset_names() {
    return {"regime-i", "regime-ii", "regime-iii", "fig2a", "fig2c", "fig1.1",
            "hexagon", "star"};
}

inline Preset resolve_preset(const std::string& name) {
    Preset p;
    p.name = name;

    const CouplingSet triple{0.0, 1.0, 1.9, locus_F(1.9), 0.0};

    if (name == "regime-i") {
        p.couplings = triple;
        p.description = "triple point: dd=1, dh=1.9, ds on the degeneracy locus";
    } else if (name == "regime-ii") {
        p.couplings = triple;
        p.couplings.ds += 0.1;
        p.description = "polygonal detuning: ds raised 0.1 above the locus";
    } else if (name == "regime-iii") {
        p.couplings = triple;
        p.couplings.phi = 1e-9 * std::numbers::pi / 2.0;
        p.cluster_tol = 1e-12;
        p.description = "flux detuning: loop phase 1e-9*pi/2 at the triple point";
    } else if (name == "hexagon") {
        p.couplings = CouplingSet{0.0, 1.0, 1.0, 0.0, 0.0};
        p.description = "uniform hexagon limit: dd=dh=1, ds=0";
    } else if (name == "star") {
        p.couplings = CouplingSet{0.0, 1.0, 0.0, 1.0, 0.0};
        p.description = "star limit: dd=ds=1, dh=0";
    } else if (name == "fig2a") {
        p.kind = PresetKind::sweep;
        p.sweep.parameter = SweepParameter::twist_angle;
        p.sweep.lo = 0.0;
        p.sweep.hi = std::numbers::pi / 2.0;
        p.sweep.points = 33;
        p.sweep.geometry = GeometryContext{};
        p.sweep.full_hamiltonian = true;
        p.description = "energy levels against the twist angle, all-pairs couplings";
    } else if (name == "fig2c") {
        p.kind = PresetKind::sweep;
        p.sweep.parameter = SweepParameter::hexagon_coupling_on_locus;
        p.sweep.lo = 0.0;
        p.sweep.hi = 3.0;
        p.sweep.points = 50;
        p.sweep.couplings = triple;
        p.description = "walk along the degeneracy locus: dh swept, ds tracking";
    } else if (name == "fig1.1") {
        p.kind = PresetKind::compare_model_full;
        p.compare_geometry = GeometryContext{};
        p.description = "model-bond versus all-pairs spectra over the twist angle";
    } else {
        throw std::invalid_argument("unknown preset '" + name + "'");
    }
    return p;
}

struct RegimeOptions {
    unsigned long long seed = 1;
    double eps_rel = 1e-8;  // relative support threshold for the portraits
    int n_samples = 100;    // random combinations for the invariant-row probe
    std::optional<double> cluster_tol;  // overrides the preset tolerance
};

struct RegimeBundle {
    std::map<std::string, std::string> files;  // file name -> content
    nlohmann::json report;
};

// Run the full portrait bundle for one coupling set.  The file set adapts
// to what the spectrum does: the invariant-row probe runs over the lowest
// degeneracy class, and the support/splitting report always covers the
// three low symmetry-adapted states.
inline RegimeBundle run_regime(const CouplingSet& c, double cluster_tol,
                               const RegimeOptions& opt = {}) {
    c.validate();
    if (!(cluster_tol > 0.0))
        throw std::invalid_argument("run_regime: cluster tolerance must be positive");
    if (opt.n_samples < 1)
        throw std::invalid_argument("run_regime: need at least one sample");
    if (!(opt.eps_rel > 0.0) || !(opt.eps_rel < 1.0))
        throw std::invalid_argument("run_regime: eps_rel must lie in (0, 1)");

    const Matrix h = build_model_hamiltonian(c);
    const Spectrum spec = eigensolve(h);
    const DegeneracyClasses classes = cluster_degeneracies(spec.eigenvalues, cluster_tol);

    const auto states = block_eigensystem(c);
    std::vector<const SymmetryAdaptedState*> low;
    for (const auto& s : states)
        if (s.lower) low.push_back(&s);  // energy-sorted already
    std::array<const SymmetryAdaptedState*, 3> by_block{};
    for (const auto* s : low) by_block[s->c3_block] = s;
    const double splitting = std::abs(by_block[0]->energy - by_block[1]->energy);

    RegimeBundle bundle;
    nlohmann::json& rep = bundle.report;

    rep["couplings"] = {{"e0", c.e0}, {"dd", c.dd}, {"dh", c.dh}, {"ds", c.ds},
                        {"phi", c.phi}};
    rep["cluster_tol"] = cluster_tol;
    rep["seed"] = opt.seed;
    rep["eps_rel"] = opt.eps_rel;
    rep["n_samples"] = opt.n_samples;
    rep["triple_reference_energy"] = triple_point_energy(c);
    rep["eigenvalues"] = spec.eigenvalues;
    rep["pattern"] = classes.pattern();
    {
        nlohmann::json cls = nlohmann::json::array();
        for (const auto& k : classes.classes)
            cls.push_back({{"energy", k.energy}, {"multiplicity", k.multiplicity}});
        rep["classes"] = cls;
    }
    rep["doublet_splitting"] = splitting;

    // Portraits of the three low states, grids + graymaps + support data.
    std::vector<GridSupport> supports;
    nlohmann::json jstates = nlohmann::json::array();
    for (size_t i = 0; i < low.size(); ++i) {
        const WignerGrid grid = wigner_full(low[i]->vector);
        const GridSupport sup = support(grid, opt.eps_rel);
        supports.push_back(sup);
        const std::string stem = "state_" + std::to_string(i + 1);
        bundle.files[stem + ".csv"] = grid_csv(grid);
        bundle.files[stem + ".pgm"] = grid_pgm(grid);
        jstates.push_back({{"energy", low[i]->energy},
                           {"eigenphase", low[i]->eigenphase},
                           {"c3_block", low[i]->c3_block},
                           {"occupied_rows", sup.rows.size()},
                           {"occupied_cells", sup.cells.size()}});
    }
    rep["states"] = jstates;

    {
        nlohmann::json inter;
        for (size_t i = 0; i < supports.size(); ++i)
            for (size_t j = i + 1; j < supports.size(); ++j) {
                std::set<std::pair<int, int>> a(supports[i].cells.begin(),
                                                supports[i].cells.end());
                int count = 0;
                for (const auto& cell : supports[j].cells) count += a.count(cell);
                inter[std::to_string(i + 1) + "&" + std::to_string(j + 1)] = count;
            }
        rep["support_intersections"] = inter;
    }

    // Invariant rows over the lowest degeneracy class (clamped to the three
    // low states this bundle portrays).
    const int family_size =
        std::min<int>(3, classes.classes.front().multiplicity);
    std::vector<Cvec> family;
    for (int i = 0; i < family_size; ++i) family.push_back(low[i]->vector);
    const std::set<int> rows = invariant_rows(family, opt.n_samples, opt.seed, opt.eps_rel);
    rep["invariant_rows"] = std::vector<int>(rows.begin(), rows.end());
    rep["invariant_rows_family_size"] = family_size;

    bundle.files["spectrum.csv"] = spectrum_csv(spec, classes);
    bundle.files["report.json"] = rep.dump(2) + "\n";

    {
        std::vector<std::string> notes;
        notes.push_back("pattern: " + classes.pattern());
        notes.push_back("triple reference energy: " +
                        format_g17(triple_point_energy(c)));
        notes.push_back("lowest class: multiplicity " +
                        std::to_string(classes.classes.front().multiplicity) +
                        " at energy " + format_g17(classes.classes.front().energy));
        notes.push_back("doublet splitting: " + format_g17(splitting));
        for (size_t i = 0; i < low.size(); ++i)
            notes.push_back("state " + std::to_string(i + 1) + ": energy " +
                            format_g17(low[i]->energy) + ", occupied rows " +
                            std::to_string(supports[i].rows.size()));
        std::string row_list;
        for (int r : rows) row_list += (row_list.empty() ? "" : " ") + std::to_string(r);
        notes.push_back("invariant rows (family size " + std::to_string(family_size) +
                        ", " + std::to_string(opt.n_samples) + " samples): " + row_list);
        bundle.files["manifest.txt"] = build_manifest(
            "portrait bundle (re-run: hexamer regime --config <this file> --out <dir>)",
            {{"e0", c.e0},
             {"dd", c.dd},
             {"dh", c.dh},
             {"ds", c.ds},
             {"phi", c.phi},
             {"tol", cluster_tol},
             {"seed", static_cast<double>(opt.seed)},
             {"eps_rel", opt.eps_rel},
             {"n_samples", static_cast<double>(opt.n_samples)}},
            notes);
    }
    return bundle;
}

// Machine-checkable summary of the algebra layer at one coupling set:
// generator identities, the decomposition round trip, every reassembly
// variant, and commutator statistics for the symmetry operator.
inline nlohmann::json algebra_report(const CouplingSet& c, unsigned long long seed = 1,
                                     int n_draws = 20) {
    c.validate();
    if (c.phi != 0.0)
        throw std::invalid_argument("algebra_report: defined for the flux-free model");
    if (n_draws < 1) throw std::invalid_argument("algebra_report: need at least one draw");

    nlohmann::json rep;
    rep["couplings"] = {{"e0", c.e0}, {"dd", c.dd}, {"dh", c.dh}, {"ds", c.ds},
                        {"phi", c.phi}};

    const GeneratorSet g = build_generators();
    {
        nlohmann::json jg;
        jg["ladder_commutator_scale"] = g.ladder_commutator_scale;
        jg["ladder_commutator_residual"] =
            (commutator(g.j_plus, g.j_minus) - g.ladder_commutator_scale * g.j3).max_abs();
        jg["j_plus_cubed"] = (g.j_plus * g.j_plus * g.j_plus).max_abs();
        jg["j_minus_cubed"] = (g.j_minus * g.j_minus * g.j_minus).max_abs();
        jg["t_cubed_deviation"] = (g.t * g.t * g.t - Matrix::identity(3)).max_abs();
        jg["sigma_commutator_residual"] =
            (commutator(g.sigma_plus, g.sigma_minus) - 2.0 * g.sigma3).max_abs();
        jg["sigma_plus_squared"] = (g.sigma_plus * g.sigma_plus).max_abs();
        rep["generators"] = jg;
    }

    const VectorCoupling v = vector_decomposition(c);
    {
        const ReassemblyReport r = reassemble(v);
        nlohmann::json jr;
        jr["convention"] = r.convention;
        jr["max_deviation"] = r.max_deviation;
        jr["frobenius_deviation"] = r.frobenius_deviation;
        nlohmann::json variants;
        for (const auto& [name, dev] : reassembly_variants(v))
            variants[name] = {{"max", dev.first}, {"frobenius", dev.second}};
        jr["variants"] = variants;
        rep["reassembly"] = jr;
    }

    {
        const Matrix h = build_model_hamiltonian(c);
        const auto triplet = canonical_low_triplet(c);
        Rng rng(seed);
        double worst = 0.0;
        for (int d = 0; d < n_draws; ++d) {
            const Cvec w = rng.unit_vector(3);
            const SymmetryOperator op =
                build_symmetry_operator(triplet, w[0], w[1], w[2]);
            const double rel = commutator_norm(h, op.matrix) / op.matrix.frobenius();
            worst = std::max(worst, rel);
        }
        rep["symmetry_operator"] = {{"n_draws", n_draws},
                                    {"seed", seed},
                                    {"max_relative_commutator", worst}};
    }
    return rep;
}

}  // namespace hexamer
