// Command-line front end for the hexamer library.
//
// Subcommands: spectrum, pipeline, locus, critical-angle, sweep, wigner,
// regime, algebra-verify, ensemble, berry.  Global flags --out, --seed,
// --tol, --format {csv,json}, --config (flat key=value file; explicit
// command-line flags always win over config values).
//
// Exit codes: 0 success, 2 invalid arguments or parameters, 3 numerical
// failure (iteration budget, missing crossing, degenerate Berry level, ...).

#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hexamer/algebra.hpp"
#include "hexamer/clustering.hpp"
#include "hexamer/couplings.hpp"
#include "hexamer/eigen.hpp"
#include "hexamer/ensemble.hpp"
#include "hexamer/experiments.hpp"
#include "hexamer/geometry.hpp"
#include "hexamer/io.hpp"
#include "hexamer/locus.hpp"
#include "hexamer/matrix.hpp"
#include "hexamer/model.hpp"
#include "hexamer/pipeline.hpp"
#include "hexamer/wigner.hpp"

namespace {

using namespace hexamer;

struct GlobalArgs {
    std::string out;
    std::string format = "csv";
    std::string config_path;
    unsigned long long seed = 1;
    double tol = 0.0;

    CLI::Option* o_seed = nullptr;
    CLI::Option* o_tol = nullptr;

    Config config() const {
        return config_path.empty() ? Config{} : read_config(config_path);
    }

    unsigned long long resolve_seed(const Config& cfg) const {
        if (o_seed->count()) return seed;
        if (cfg.has("seed")) return static_cast<unsigned long long>(cfg.get("seed"));
        return 1;
    }

    std::optional<double> resolve_tol(const Config& cfg) const {
        if (o_tol->count()) return tol;
        if (cfg.has("tol")) return cfg.get("tol");
        return std::nullopt;
    }
};

// Writes to --out when given, stdout otherwise.
void emit(const GlobalArgs& g, const std::string& content) {
    if (g.out.empty())
        std::cout << content;
    else
        write_text(g.out, content);
}

// Coupling parameters shared by several subcommands.  Base values come from
// --preset (default regime-i), then config keys, then explicit flags.
struct CouplingArgs {
    std::string preset = "regime-i";
    double e0 = 0, dd = 0, dh = 0, ds = 0, phi = 0;
    CLI::Option *o_e0 = nullptr, *o_dd = nullptr, *o_dh = nullptr, *o_ds = nullptr,
                *o_phi = nullptr;

    void add_to(CLI::App* cmd, bool with_preset = true) {
        if (with_preset)
            cmd->add_option("--preset", preset,
                            "parameter preset (regime-i, regime-ii, regime-iii, hexagon, star)")
                ->default_str("regime-i");
        o_e0 = cmd->add_option("--e0", e0, "on-site energy");
        o_dd = cmd->add_option("--dd", dd, "intra-dimer hopping");
        o_dh = cmd->add_option("--dh", dh, "hexagon-edge hopping");
        o_ds = cmd->add_option("--ds", ds, "inner-triangle hopping");
        o_phi = cmd->add_option("--phi", phi, "hexagon-edge flux phase (radians)");
    }

    // Returns couplings; fills cluster_tol with the preset default.
    CouplingSet resolve(const Config& cfg, double* preset_tol = nullptr) const {
        const Preset p = resolve_preset(preset);
        if (p.kind != PresetKind::couplings)
            throw std::invalid_argument("preset '" + preset +
                                        "' is a sweep preset, not a coupling set");
        CouplingSet c = p.couplings;
        if (preset_tol) *preset_tol = p.cluster_tol;

        auto pick = [&](const CLI::Option* o, double flag, const char* key, double base) {
            if (o->count()) return flag;
            if (cfg.has(key)) return cfg.get(key);
            return base;
        };
        c.e0 = pick(o_e0, e0, "e0", c.e0);
        c.dd = pick(o_dd, dd, "dd", c.dd);
        c.dh = pick(o_dh, dh, "dh", c.dh);
        c.ds = pick(o_ds, ds, "ds", c.ds);
        c.phi = pick(o_phi, phi, "phi", c.phi);
        c.validate();
        return c;
    }
};

// Geometry parameters for the all-pairs configuration.
struct GeometryArgs {
    double L = 1.0, R = 1.0, theta = 0.0, delta0 = 1.0, lambda = 1.0, e0 = 0.0;
    CLI::Option *o_L = nullptr, *o_R = nullptr, *o_theta = nullptr, *o_delta0 = nullptr,
                *o_lambda = nullptr, *o_e0 = nullptr;

    void add_to(CLI::App* cmd) {
        o_L = cmd->add_option("--L", L, "dimer length");
        o_R = cmd->add_option("--R", R, "ring radius of the dimer centers");
        o_theta = cmd->add_option("--theta", theta, "dimer twist angle (radians)");
        o_delta0 = cmd->add_option("--delta0", delta0, "decay-law prefactor");
        o_lambda = cmd->add_option("--lambda", lambda, "decay length");
        o_e0 = cmd->add_option("--ge0", e0, "on-site energy of the geometric model");
    }

    GeometryContext resolve(const Config& cfg) const {
        auto pick = [&](const CLI::Option* o, double flag, const char* key, double base) {
            if (o->count()) return flag;
            if (cfg.has(key)) return cfg.get(key);
            return base;
        };
        GeometryContext g;
        g.dimer_length = pick(o_L, L, "L", 1.0);
        g.ring_radius = pick(o_R, R, "R", 1.0);
        g.twist = pick(o_theta, theta, "theta", 0.0);
        g.law.delta0 = pick(o_delta0, delta0, "delta0", 1.0);
        g.law.lambda = pick(o_lambda, lambda, "lambda", 1.0);
        g.e0 = pick(o_e0, e0, "ge0", 0.0);
        g.law.validate();
        return g;
    }
};

nlohmann::json json_couplings(const CouplingSet& c) {
    return {{"e0", c.e0}, {"dd", c.dd}, {"dh", c.dh}, {"ds", c.ds}, {"phi", c.phi}};
}

nlohmann::json json_matrix(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.dim(); ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(row);
    }
    return rows;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- spectrum

void run_spectrum(const GlobalArgs& g, const CouplingArgs& ca) {
    const Config cfg = g.config();
    double preset_tol = 1e-9;
    const CouplingSet c = ca.resolve(cfg, &preset_tol);
    const double tol = g.resolve_tol(cfg).value_or(preset_tol);

    const Spectrum s = eigensolve(build_model_hamiltonian(c));
    const DegeneracyClasses classes = cluster_degeneracies(s, tol);

    if (g.format == "json") {
        nlohmann::json rep;
        rep["couplings"] = json_couplings(c);
        rep["cluster_tol"] = tol;
        rep["eigenvalues"] = s.eigenvalues;
        rep["pattern"] = classes.pattern();
        nlohmann::json cls = nlohmann::json::array();
        for (const auto& k : classes.classes)
            cls.push_back({{"energy", k.energy}, {"multiplicity", k.multiplicity}});
        rep["classes"] = cls;
        if (c.phi == 0.0) rep["closed_form"] = closed_form_spectrum(c).levels();
        emit(g, dump(rep));
    } else {
        emit(g, spectrum_csv(s, classes));
    }
}

// ---------------------------------------------------------------- pipeline

void run_pipeline_cmd(const GlobalArgs& g, const CouplingArgs& ca) {
    const Config cfg = g.config();
    const CouplingSet c = ca.resolve(cfg);
    const Matrix h = build_model_hamiltonian(c);
    const PipelineTrace t = run_pipeline(h);

    const Matrix gram = t.u_total.adjoint() * t.u_total;
    const double unitarity = (gram - Matrix::identity(6)).max_abs();

    if (g.format == "json") {
        nlohmann::json rep;
        rep["couplings"] = json_couplings(c);
        rep["h"] = json_matrix(h);
        rep["h1"] = json_matrix(t.h1);
        rep["h2"] = json_matrix(t.h2);
        rep["h3"] = json_matrix(t.h3);
        rep["u_total"] = json_matrix(t.u_total);
        rep["unitarity_residual"] = unitarity;
        emit(g, dump(rep));
    } else {
        std::string out;
        out += "# h\n" + matrix_csv(h);
        out += "# h1 (dimer parity basis)\n" + matrix_csv(t.h1);
        out += "# h2 (parity-sector regrouping)\n" + matrix_csv(t.h2);
        out += "# h3 (threefold eigenphase basis)\n" + matrix_csv(t.h3);
        out += "# u_total\n" + matrix_csv(t.u_total);
        out += "# unitarity_residual=" + format_g17(unitarity) + "\n";
        emit(g, out);
    }
}

// ------------------------------------------------------------------- locus

void run_locus(const GlobalArgs& g, double x, double dd, double e0, const CLI::Option* o_x,
               const CLI::Option* o_dd, const CLI::Option* o_e0) {
    const Config cfg = g.config();
    if (!o_x->count()) {
        if (!cfg.has("x")) throw std::invalid_argument("locus: --x is required");
        x = cfg.get("x");
    }
    if (!o_dd->count() && cfg.has("dd")) dd = cfg.get("dd");
    if (!o_e0->count() && cfg.has("e0")) e0 = cfg.get("e0");

    const CouplingSet c = locus_couplings(dd, x, e0);
    const double energy = e0 + dd * locus_energy(x);

    if (g.format == "json") {
        emit(g, dump({{"x", x},
                      {"dd", dd},
                      {"e0", e0},
                      {"f", locus_F(x)},
                      {"ds", c.ds},
                      {"energy", energy}}));
    } else {
        std::string out;
        out += "f=" + format_g17(locus_F(x)) + "\n";
        out += "ds=" + format_g17(c.ds) + "\n";
        out += "energy=" + format_g17(energy) + "\n";
        emit(g, out);
    }
}

// ---------------------------------------------------------- critical-angle

void run_critical_angle(const GlobalArgs& g, const GeometryArgs& ga,
                        const CriticalAngleOptions& opt) {
    const Config cfg = g.config();
    const GeometryContext ctx = ga.resolve(cfg);
    const CriticalAngleResult r = find_critical_angle(ctx, opt);

    if (g.format == "json") {
        emit(g, dump({{"found", r.found},
                      {"theta_c", r.theta_c},
                      {"gap", r.gap},
                      {"note", r.note}}));
    } else {
        std::string out;
        out += "found=" + std::string(r.found ? "1" : "0") + "\n";
        out += "theta_c=" + format_g17(r.theta_c) + "\n";
        out += "gap=" + format_g17(r.gap) + "\n";
        out += "note=" + r.note + "\n";
        emit(g, out);
    }
}

// ------------------------------------------------------------------- sweep

std::string sweep_json(const SweepTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"param", r.param},
                        {"energies", r.energies},
                        {"pattern", r.pattern}});
    return dump({{"parameter", t.parameter}, {"rows", rows}});
}

void run_sweep(const GlobalArgs& g, const CouplingArgs& ca, const GeometryArgs& ga,
               const std::string& preset, const std::string& parameter, double lo, double hi,
               int points, bool model_bonds, const CLI::Option* o_lo, const CLI::Option* o_hi,
               const CLI::Option* o_points) {
    const Config cfg = g.config();
    const double tol = g.resolve_tol(cfg).value_or(1e-9);

    auto apply_overrides = [&](SweepRequest& req) {
        if (o_lo->count()) req.lo = lo;
        else if (cfg.has("lo")) req.lo = cfg.get("lo");
        if (o_hi->count()) req.hi = hi;
        else if (cfg.has("hi")) req.hi = cfg.get("hi");
        if (o_points->count()) req.points = points;
        else if (cfg.has("points")) req.points = static_cast<int>(cfg.get("points"));
        req.cluster_tol = tol;
    };

    if (preset == "fig1.1") {
        const Preset p = resolve_preset(preset);
        SweepRequest bounds;  // carries lo/hi/points only
        bounds.lo = p.compare_lo;
        bounds.hi = p.compare_hi;
        bounds.points = p.compare_points;
        apply_overrides(bounds);
        const GeometryContext ctx = ga.resolve(cfg);
        const auto [full, model] =
            sweep_model_vs_full(ctx, bounds.lo, bounds.hi, bounds.points, tol);
        if (g.format == "json") {
            emit(g, dump({{"theta_full", nlohmann::json::parse(sweep_json(full))},
                          {"theta_model", nlohmann::json::parse(sweep_json(model))}}));
        } else if (!g.out.empty()) {
            std::filesystem::create_directories(g.out);
            write_text(g.out + "/theta_full.csv", sweep_csv(full));
            write_text(g.out + "/theta_model.csv", sweep_csv(model));
            std::cout << "wrote " << g.out << "/theta_full.csv\n";
            std::cout << "wrote " << g.out << "/theta_model.csv\n";
        } else {
            std::cout << "# theta_full\n" << sweep_csv(full);
            std::cout << "# theta_model\n" << sweep_csv(model);
        }
        return;
    }

    SweepRequest req;
    if (!preset.empty()) {
        const Preset p = resolve_preset(preset);
        if (p.kind != PresetKind::sweep)
            throw std::invalid_argument("preset '" + preset + "' is not a sweep preset");
        req = p.sweep;
        if (req.parameter == SweepParameter::twist_angle ||
            req.parameter == SweepParameter::ring_radius)
            req.geometry = ga.resolve(cfg);
        if (req.couplings) req.couplings = ca.resolve(cfg);
    } else {
        if (parameter == "theta") req.parameter = SweepParameter::twist_angle;
        else if (parameter == "dh") req.parameter = SweepParameter::hexagon_coupling;
        else if (parameter == "dh_locus")
            req.parameter = SweepParameter::hexagon_coupling_on_locus;
        else if (parameter == "R") req.parameter = SweepParameter::ring_radius;
        else
            throw std::invalid_argument(
                "sweep: --parameter must be one of theta, dh, dh_locus, R");
        if (!o_lo->count() && !cfg.has("lo"))
            throw std::invalid_argument("sweep: --lo is required without a preset");
        if (!o_hi->count() && !cfg.has("hi"))
            throw std::invalid_argument("sweep: --hi is required without a preset");
        req.points = 33;
        if (req.parameter == SweepParameter::twist_angle ||
            req.parameter == SweepParameter::ring_radius) {
            req.geometry = ga.resolve(cfg);
            req.full_hamiltonian = !model_bonds;
        }
        if (req.parameter == SweepParameter::hexagon_coupling ||
            req.parameter == SweepParameter::hexagon_coupling_on_locus)
            req.couplings = ca.resolve(cfg);
    }
    apply_overrides(req);

    const SweepTable table = sweep(req);
    emit(g, g.format == "json" ? sweep_json(table) : sweep_csv(table));
}

// ------------------------------------------------------------------ wigner

void run_wigner(const GlobalArgs& g, const CouplingArgs& ca, int state_index, double eps_rel,
                bool pgm) {
    const Config cfg = g.config();
    const CouplingSet c = ca.resolve(cfg);
    if (state_index < 1 || state_index > 6)
        throw std::invalid_argument("wigner: --state must be in [1, 6]");
    const double eps = eps_rel > 0 ? eps_rel : cfg.get_or("eps_rel", 1e-8);

    const auto states = block_eigensystem(c);
    const SymmetryAdaptedState& st = states[state_index - 1];
    const WignerGrid grid = wigner_full(st.vector);
    const GridSupport sup = support(grid, eps);

    if (pgm) {
        emit(g, grid_pgm(grid));
    } else if (g.format == "json") {
        nlohmann::json rep;
        rep["couplings"] = json_couplings(c);
        rep["state"] = state_index;
        rep["energy"] = st.energy;
        rep["eigenphase"] = st.eigenphase;
        rep["row_labels"] = grid.row_labels;
        rep["col_labels"] = grid.col_labels;
        nlohmann::json values = nlohmann::json::array();
        for (int r = 0; r < grid.rows; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (int cc = 0; cc < grid.cols; ++cc) row.push_back(grid.at(r, cc));
            values.push_back(row);
        }
        rep["values"] = values;
        rep["eps_rel"] = eps;
        rep["occupied_rows"] = std::vector<int>(sup.rows.begin(), sup.rows.end());
        nlohmann::json cells = nlohmann::json::array();
        for (const auto& [r, cc] : sup.cells) cells.push_back({r, cc});
        rep["occupied_cells"] = cells;
        emit(g, dump(rep));
    } else {
        emit(g, grid_csv(grid));
    }
}

// ------------------------------------------------------------------ regime

void run_regime_cmd(const GlobalArgs& g, const CouplingArgs& ca, int samples,
                    double eps_rel, const CLI::Option* o_samples,
                    const CLI::Option* o_eps) {
    if (g.out.empty())
        throw std::invalid_argument("regime: --out <directory> is required");
    const Config cfg = g.config();
    double preset_tol = 1e-9;
    const CouplingSet c = ca.resolve(cfg, &preset_tol);
    const double tol = g.resolve_tol(cfg).value_or(preset_tol);

    RegimeOptions opt;
    opt.seed = g.resolve_seed(cfg);
    opt.n_samples = o_samples->count() ? samples
                                       : static_cast<int>(cfg.get_or("n_samples", 100));
    opt.eps_rel = o_eps->count() ? eps_rel : cfg.get_or("eps_rel", 1e-8);

    const RegimeBundle bundle = run_regime(c, tol, opt);
    std::filesystem::create_directories(g.out);
    for (const auto& [name, content] : bundle.files) write_text(g.out + "/" + name, content);
    std::cout << bundle.report.dump(2) << "\n";
}

// ---------------------------------------------------------- algebra-verify

void run_algebra_verify(const GlobalArgs& g, const CouplingArgs& ca, int draws) {
    const Config cfg = g.config();
    const CouplingSet c = ca.resolve(cfg);
    emit(g, dump(algebra_report(c, g.resolve_seed(cfg), draws)));
}

// ---------------------------------------------------------------- ensemble

void run_ensemble(const GlobalArgs& g, int n, int critical, double eps, int hop_site,
                  double detune, double window) {
    const Config cfg = g.config();
    const double tol = g.resolve_tol(cfg).value_or(1e-9);
    const ChainSpec spec = make_chain(n, critical, eps, detune, hop_site);
    const ScalingReport r = scaling_report(spec, tol, window);
    emit(g, dump({{"g", r.g}, {"n", r.n}, {"l_ratio", r.l_ratio}, {"action", r.action}}));
}

// ------------------------------------------------------------------- berry

void run_berry(const GlobalArgs& g, const std::string& loop_path, int level,
               double gap_tol) {
    const ParameterLoop loop = parse_loop_csv(read_text(loop_path));
    BerryOptions opt;
    opt.gap_tol = gap_tol;
    const double phase = berry_phase(loop, level, opt);
    if (g.format == "json")
        emit(g, dump({{"level", level}, {"phase", phase}}));
    else
        emit(g, "phase=" + format_g17(phase) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"six-site dimeric hexagonal complex: spectra, degeneracy locus, "
                 "phase-space portraits, ensemble bookkeeping"};
    app.require_subcommand(1);

    GlobalArgs g;
    app.add_option("--out", g.out, "output file (or directory for bundles)");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->default_str("csv");
    app.add_option("--config", g.config_path, "flat key=value parameter file");
    g.o_seed = app.add_option("--seed", g.seed, "random seed");
    g.o_tol = app.add_option("--tol", g.tol, "degeneracy clustering tolerance");

    // spectrum
    auto* sc_spectrum = app.add_subcommand("spectrum", "eigenvalues and degeneracy classes");
    auto ca_spectrum = std::make_shared<CouplingArgs>();
    ca_spectrum->add_to(sc_spectrum);
    sc_spectrum->callback([&, ca_spectrum] { run_spectrum(g, *ca_spectrum); });

    // pipeline
    auto* sc_pipeline =
        app.add_subcommand("pipeline", "symmetry-adapted transform stages of the model");
    auto ca_pipeline = std::make_shared<CouplingArgs>();
    ca_pipeline->add_to(sc_pipeline);
    sc_pipeline->callback([&, ca_pipeline] { run_pipeline_cmd(g, *ca_pipeline); });

    // locus
    auto* sc_locus = app.add_subcommand("locus", "triple-degeneracy locus query");
    auto locus_x = std::make_shared<double>(0.0);
    auto locus_dd = std::make_shared<double>(1.0);
    auto locus_e0 = std::make_shared<double>(0.0);
    auto* o_x = sc_locus->add_option("--x", *locus_x, "locus coordinate dh/dd");
    auto* o_ldd = sc_locus->add_option("--dd", *locus_dd, "intra-dimer hopping");
    auto* o_le0 = sc_locus->add_option("--e0", *locus_e0, "on-site energy");
    sc_locus->callback([&, locus_x, locus_dd, locus_e0, o_x, o_ldd, o_le0] {
        run_locus(g, *locus_x, *locus_dd, *locus_e0, o_x, o_ldd, o_le0);
    });

    // critical-angle
    auto* sc_crit = app.add_subcommand("critical-angle",
                                       "twist angle where singlet and doublet cross");
    auto ga_crit = std::make_shared<GeometryArgs>();
    ga_crit->add_to(sc_crit);
    auto crit_opt = std::make_shared<CriticalAngleOptions>();
    sc_crit->add_option("--scan-points", crit_opt->scan_points, "coarse scan resolution");
    sc_crit->add_option("--gap-tol", crit_opt->gap_tol, "required gap at the crossing");
    sc_crit->add_option("--bracket-tol", crit_opt->bracket_tol, "bisection bracket width");
    sc_crit->add_option("--class-tol", crit_opt->class_tol,
                        "tolerance used to tell singlet from doublet");
    sc_crit->add_option("--max-iterations", crit_opt->max_iterations, "bisection budget");
    sc_crit->callback([&, ga_crit, crit_opt] { run_critical_angle(g, *ga_crit, *crit_opt); });

    // sweep
    auto* sc_sweep = app.add_subcommand("sweep", "one-parameter spectrum tables");
    auto ca_sweep = std::make_shared<CouplingArgs>();  // base for dh / dh_locus sweeps
    auto ga_sweep = std::make_shared<GeometryArgs>();
    auto sweep_preset = std::make_shared<std::string>();
    auto sweep_param = std::make_shared<std::string>();
    auto sweep_lo = std::make_shared<double>(0.0);
    auto sweep_hi = std::make_shared<double>(0.0);
    auto sweep_points = std::make_shared<int>(33);
    auto sweep_model = std::make_shared<bool>(false);
    auto* o_sweep_preset = sc_sweep->add_option(
        "--preset", *sweep_preset, "sweep preset (fig2a, fig2c, fig1.1)");
    sc_sweep->add_option("--parameter", *sweep_param,
                         "swept parameter: theta, dh, dh_locus, R");
    auto* o_lo = sc_sweep->add_option("--lo", *sweep_lo, "lower bound");
    auto* o_hi = sc_sweep->add_option("--hi", *sweep_hi, "upper bound");
    auto* o_points = sc_sweep->add_option("--points", *sweep_points, "grid points");
    sc_sweep->add_flag("--model", *sweep_model,
                       "use model bonds instead of all-pairs couplings");
    ca_sweep->add_to(sc_sweep, /*with_preset=*/false);
    ga_sweep->add_to(sc_sweep);
    sc_sweep->callback([&, ca_sweep, ga_sweep, sweep_preset, sweep_param, sweep_lo, sweep_hi,
                        sweep_points, sweep_model, o_sweep_preset, o_lo, o_hi, o_points] {
        if (!o_sweep_preset->count() && sweep_param->empty())
            throw std::invalid_argument("sweep: give --preset or --parameter");
        run_sweep(g, *ca_sweep, *ga_sweep, *sweep_preset, *sweep_param, *sweep_lo, *sweep_hi,
                  *sweep_points, *sweep_model, o_lo, o_hi, o_points);
    });

    // wigner
    auto* sc_wigner = app.add_subcommand("wigner", "phase-space portrait of an eigenstate");
    auto ca_wigner = std::make_shared<CouplingArgs>();
    ca_wigner->add_to(sc_wigner);
    auto wigner_state = std::make_shared<int>(1);
    auto wigner_eps = std::make_shared<double>(0.0);
    auto wigner_pgm = std::make_shared<bool>(false);
    sc_wigner->add_option("--state", *wigner_state, "eigenstate index, 1..6 by energy");
    sc_wigner->add_option("--eps-rel", *wigner_eps, "relative support threshold");
    sc_wigner->add_flag("--pgm", *wigner_pgm, "emit an ASCII graymap instead of CSV");
    sc_wigner->callback([&, ca_wigner, wigner_state, wigner_eps, wigner_pgm] {
        run_wigner(g, *ca_wigner, *wigner_state, *wigner_eps, *wigner_pgm);
    });

    // regime
    auto* sc_regime =
        app.add_subcommand("regime", "full portrait bundle for one parameter point");
    auto ca_regime = std::make_shared<CouplingArgs>();
    ca_regime->add_to(sc_regime);
    auto regime_samples = std::make_shared<int>(100);
    auto regime_eps = std::make_shared<double>(1e-8);
    auto* o_samples =
        sc_regime->add_option("--samples", *regime_samples, "invariant-row sample count");
    auto* o_eps = sc_regime->add_option("--eps-rel", *regime_eps,
                                        "relative support threshold");
    sc_regime->callback([&, ca_regime, regime_samples, regime_eps, o_samples, o_eps] {
        run_regime_cmd(g, *ca_regime, *regime_samples, *regime_eps, o_samples, o_eps);
    });

    // algebra-verify
    auto* sc_algebra =
        app.add_subcommand("algebra-verify", "generator identities and reassembly report");
    auto ca_algebra = std::make_shared<CouplingArgs>();
    ca_algebra->add_to(sc_algebra);
    auto algebra_draws = std::make_shared<int>(20);
    sc_algebra->add_option("--draws", *algebra_draws, "random operator draws");
    sc_algebra->callback(
        [&, ca_algebra, algebra_draws] { run_algebra_verify(g, *ca_algebra, *algebra_draws); });

    // ensemble
    auto* sc_ensemble = app.add_subcommand("ensemble", "chain degeneracy-scaling report");
    auto ens_n = std::make_shared<int>(1);
    auto ens_k = std::make_shared<int>(0);
    auto ens_eps = std::make_shared<double>(0.0);
    auto ens_hop = std::make_shared<int>(0);
    auto ens_detune = std::make_shared<double>(0.1);
    auto ens_window = std::make_shared<double>(0.1);
    sc_ensemble->add_option("--n", *ens_n, "number of polymers")->required();
    sc_ensemble->add_option("--critical", *ens_k, "blocks tuned to the degeneracy locus");
    sc_ensemble->add_option("--eps", *ens_eps, "inter-polymer hopping");
    sc_ensemble->add_option("--hop-site", *ens_hop, "site index carrying the hop (0..5)");
    sc_ensemble->add_option("--detune", *ens_detune, "ds offset of non-critical blocks");
    sc_ensemble->add_option("--window", *ens_window, "energy window around the reference");
    sc_ensemble->callback([&, ens_n, ens_k, ens_eps, ens_hop, ens_detune, ens_window] {
        run_ensemble(g, *ens_n, *ens_k, *ens_eps, *ens_hop, *ens_detune, *ens_window);
    });

    // berry
    auto* sc_berry = app.add_subcommand("berry", "Wilson-loop phase along a parameter loop");
    auto berry_loop = std::make_shared<std::string>();
    auto berry_level = std::make_shared<int>(0);
    auto berry_gap = std::make_shared<double>(1e-9);
    sc_berry->add_option("--loop", *berry_loop, "CSV of loop points (e0,dd,dh,ds,phi)")
        ->required();
    sc_berry->add_option("--level", *berry_level, "tracked energy level (0-based)");
    sc_berry->add_option("--gap-tol", *berry_gap, "degeneracy threshold for the tracked level");
    sc_berry->callback([&, berry_loop, berry_level, berry_gap] {
        run_berry(g, *berry_loop, *berry_level, *berry_gap);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
