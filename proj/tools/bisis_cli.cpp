// Command-line front end: parameter validation, simulation, equilibrium and
// stability reports, monotonicity checks, scenario reproduction, parameter
// sweeps, and basin probing. Exit codes: 0 pass, 1 expectation failure,
// 2 config error.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bisis/equilibria.hpp"
#include "bisis/integrator.hpp"
#include "bisis/model.hpp"
#include "bisis/sampling.hpp"
#include "bisis/scenarios.hpp"
#include "bisis/stability.hpp"

namespace {

using nlohmann::json;
using namespace bisis;

State parse_x0(const std::string& text) {
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(std::stod(item));
    if (vals.size() != 5)
        throw std::invalid_argument("--x0 expects five comma-separated values");
    return State{vals[0], vals[1], vals[2], vals[3], vals[4]};
}

SweepAxis parse_axis(const std::string& text) {
    // name:lo:hi:steps
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 4)
        throw std::invalid_argument("--axis expects name:lo:hi:steps");
    SweepAxis ax;
    ax.param = parts[0];
    ax.lo = std::stod(parts[1]);
    ax.hi = std::stod(parts[2]);
    ax.steps = std::stoi(parts[3]);
    return ax;
}

json state_json(const State& x) {
    return json::array({x.y1, x.y2, x.zS, x.z1, x.z2});
}

json spectrum_json(const Spectrum& s) {
    json out = json::array();
    for (const auto& l : s) out.push_back(json::array({l.real(), l.imag()}));
    return out;
}

json prediction_json(const Prediction& pr) {
    json m = json::array();
    for (const auto& mg : pr.margins) m.push_back({{"name", mg.name}, {"value", mg.value}});
    return {{"verdict", to_string(pr.verdict)},
            {"citation", pr.rule},
            {"detail", pr.detail},
            {"margins", m}};
}

json conditions_json(const std::vector<Condition>& conds) {
    json out = json::array();
    for (const auto& c : conds)
        out.push_back({{"name", c.name}, {"satisfied", c.satisfied()}, {"margin", c.margin}});
    return out;
}

json equilibrium_json(const Params& p, const Equilibrium& e) {
    json j;
    j["name"] = e.name;
    j["kind"] = to_string(e.kind);
    j["point"] = state_json(e.point);
    j["existence"] = conditions_json(e.existence);
    j["flags"] = {{"status", to_string(e.status)},
                  {"stability_candidate", e.stability_candidate}};
    if (e.status != ExistenceStatus::Absent) j["residual"] = residual(p, e.point);
    if (!e.note.empty()) j["note"] = e.note;
    return j;
}

json family_json(const Params& p, const EquilibriumFamily& f) {
    json j;
    j["name"] = f.name();
    j["kind"] = "family";
    j["existence"] = conditions_json(f.existence);
    j["flags"] = {{"status", to_string(f.status)}};
    j["y1_lo"] = f.y1_lo;
    j["y1_hi"] = f.y1_hi;
    if (f.status == ExistenceStatus::Exists) {
        json samples = json::array();
        for (const auto& st : f.samples(10)) {
            samples.push_back({{"point", state_json(st)}, {"residual", residual(p, st)}});
        }
        j["samples"] = std::move(samples);
    }
    if (!f.note.empty()) j["note"] = f.note;
    return j;
}

int cmd_validate(const std::string& config) {
    const Params p = params_from_json_file(config);
    std::cout << assumption_report_json(validate(p)) << "\n";
    return 0;
}

int cmd_simulate(const std::string& config, const std::string& x0_text, double dt, double t_end,
                 const std::string& out) {
    const Params p = params_from_json_file(config);
    const State x0 = parse_x0(x0_text);
    const Trajectory tr = simulate(p, x0, dt, t_end, std::max<std::size_t>(1, 100));
    if (!out.empty()) write_trajectory_csv_file(tr, out + "/trajectory.csv");
    const ConvergenceVerdict cv = detect_convergence(tr);
    json j;
    j["final"] = state_json(tr.final_state());
    j["t_end"] = tr.t_end();
    j["converged"] = cv.converged;
    j["residual"] = cv.residual;
    if (cv.converged) j["t_converged"] = cv.t_converged;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_equilibria(const std::string& config) {
    const Params p = params_from_json_file(config);
    json out = json::array();
    for (const auto& e : all_isolated(p)) out.push_back(equilibrium_json(p, e));
    for (const auto& f : coexistence_families(p)) out.push_back(family_json(p, f));
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_stability(const std::string& config, const std::string& at, bool all) {
    const Params p = params_from_json_file(config);
    json out = json::array();
    if (!at.empty()) {
        const State x = parse_x0(at);
        const bool on_fam = on_coexistence_family(p, x, 1e-8);
        const StabilityReport rep = classify(p, x, on_fam);
        out.push_back({{"point", state_json(x)},
                       {"eigenvalues", spectrum_json(rep.eigenvalues)},
                       {"numeric_verdict", to_string(rep.numeric_verdict)}});
    } else if (all) {
        for (const auto& e : all_isolated(p)) {
            if (e.status != ExistenceStatus::Exists) continue;
            const StabilityReport rep = classify(p, e.point, false);
            out.push_back({{"point", state_json(e.point)},
                           {"name", e.name},
                           {"eigenvalues", spectrum_json(rep.eigenvalues)},
                           {"numeric_verdict", to_string(rep.numeric_verdict)},
                           {"prediction", prediction_json(predict_stability(p, e))}});
        }
        for (const auto& f : coexistence_families(p)) {
            if (f.status != ExistenceStatus::Exists) continue;
            const State mid = f.at((f.y1_lo + f.y1_hi) / 2.0);
            const StabilityReport rep = classify(p, mid, true);
            out.push_back({{"family", f.name()},
                           {"point", state_json(mid)},
                           {"eigenvalues", spectrum_json(rep.eigenvalues)},
                           {"numeric_verdict", to_string(rep.numeric_verdict)},
                           {"prediction", prediction_json(predict_stability(p, f))}});
        }
    } else {
        throw std::invalid_argument("stability: pass --all or --at x0");
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_monotone(const std::string& config, int n, std::uint64_t seed) {
    const Params p = params_from_json_file(config);
    const auto samples = sample_interior_batch(seed, n);
    const SignatureSweep sweep = monotonicity_check(p, samples, Exec::Parallel);
    json j;
    j["samples"] = n;
    j["signatures_ok"] = sweep.n_ok;
    j["monotone_possible"] = sweep.monotone_possible();
    if (sweep.witness_found)
        j["witness"] = {{"i", sweep.witness_i + 1}, {"j", sweep.witness_j + 1}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_reproduce(const std::string& fig, const std::string& outdir, double dt_override) {
    RunOptions opt;
    opt.outdir = outdir;
    if (dt_override > 0) opt.dt = dt_override;
    const ScenarioSpec* spec = find_scenario(fig);
    if (!spec) throw std::invalid_argument("unknown scenario id " + fig);
    const ScenarioReport rep = run_scenario(*spec, opt);
    std::cout << scenario_report_json(*spec, rep) << "\n";
    return rep.pass ? 0 : 1;
}

int cmd_sweep(const std::string& config, const std::vector<std::string>& axes,
              const std::string& out_csv, const std::string& out_svg) {
    SweepSpec spec;
    spec.base = params_from_json_file(config);
    for (const auto& a : axes) spec.axes.push_back(parse_axis(a));
    const SweepGrid grid = sweep(spec);
    if (!out_csv.empty())
        write_sweep_csv_file(grid, out_csv);
    else
        write_sweep_csv(grid, std::cout);
    if (!out_svg.empty()) write_sweep_svg_file(grid, out_svg);
    return 0;
}

int cmd_basin(const std::string& config, const std::string& target, int n, std::uint64_t seed,
              BasinOptions opt) {
    const Params p = params_from_json_file(config);
    const auto eq = find_equilibrium(p, target);
    if (!eq || eq->status == ExistenceStatus::Absent)
        throw std::invalid_argument("basin: target " + target + " does not exist for these parameters");
    const double fraction = basin_probe(p, eq->point, n, seed, opt);
    json j;
    j["target"] = eq->name;
    j["point"] = state_json(eq->point);
    j["n"] = n;
    j["seed"] = seed;
    j["fraction"] = fraction;
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"competitive bi-virus spread with game-driven social distancing"};
    app.require_subcommand(1);

    std::string config, x0_text, outdir, out_csv, out_svg, target, fig, at_text;
    std::vector<std::string> axes;
    double dt = 1e-3, t_end = 300.0, dt_override = 0.0;
    int n = 50;
    std::uint64_t seed = 1;
    bool all = false;
    BasinOptions basin_opt;

    auto* validate_cmd = app.add_subcommand("validate", "check model assumptions for a config");
    validate_cmd->add_option("--config", config)->required();

    auto* sim = app.add_subcommand("simulate", "integrate from an initial state");
    sim->add_option("--config", config)->required();
    sim->add_option("--x0", x0_text, "y1,y2,zS,z1,z2")->required();
    sim->add_option("--dt", dt);
    sim->add_option("--t-end", t_end);
    sim->add_option("--out", outdir, "directory for trajectory.csv");

    auto* eq = app.add_subcommand("equilibria", "enumerate all equilibrium classes");
    eq->add_option("--config", config)->required();

    auto* st = app.add_subcommand("stability", "eigenvalues, verdicts and predictions");
    st->add_option("--config", config)->required();
    st->add_option("--at", at_text, "classify at a given equilibrium point");
    st->add_flag("--all", all, "every enumerated equilibrium and family");

    auto* mono = app.add_subcommand("monotone", "sign-similarity (order-preservation) check");
    mono->add_option("--config", config)->required();
    mono->add_option("--samples", n);
    mono->add_option("--seed", seed);

    auto* rep = app.add_subcommand("reproduce", "run a registered scenario (fig1..fig8, fig8b)");
    rep->add_option("figure", fig)->required();
    rep->add_option("--outdir", outdir);
    rep->add_option("--dt", dt_override, "override the registered step size");

    auto* sw = app.add_subcommand("sweep", "grid over one or two parameters");
    sw->add_option("--config", config)->required();
    sw->add_option("--axis", axes, "name:lo:hi:steps")->required();
    sw->add_option("--out", out_csv, "grid CSV path (default: stdout)");
    sw->add_option("--svg", out_svg, "heat-map SVG path");

    auto* ba = app.add_subcommand("basin", "fraction of random starts reaching a target");
    ba->add_option("--config", config)->required();
    ba->add_option("--target", target)->required();
    ba->add_option("--n", n);
    ba->add_option("--seed", seed);
    ba->add_option("--t-end", basin_opt.t_end);
    ba->add_option("--dt", basin_opt.h);
    ba->add_option("--dist-tol", basin_opt.dist_tol);
    ba->add_option("--conv-tol", basin_opt.conv_tol);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate_cmd->parsed()) return cmd_validate(config);
        if (sim->parsed()) return cmd_simulate(config, x0_text, dt, t_end, outdir);
        if (eq->parsed()) return cmd_equilibria(config);
        if (st->parsed()) return cmd_stability(config, at_text, all);
        if (mono->parsed()) return cmd_monotone(config, n, seed);
        if (rep->parsed()) return cmd_reproduce(fig, outdir, dt_override);
        if (sw->parsed()) return cmd_sweep(config, axes, out_csv, out_svg);
        if (ba->parsed()) return cmd_basin(config, target, n, seed, basin_opt);
    } catch (const integration_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
