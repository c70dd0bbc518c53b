#include "bisis/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bisis/model.hpp"
#include "bisis/sampling.hpp"
#include "bisis/svg.hpp"

namespace bisis {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

State make_state(double y1, double y2, double zS, double z1, double z2) {
    return State{y1, y2, zS, z1, z2};
}

Params make_params(double b1, double b2, double d1, double d2, double r1, double r2,
                   double c1, double c2, double cD, double q,
                   Variant variant = Variant::Standard) {
    Params p;
    p.beta1 = b1; p.beta2 = b2;
    p.delta1 = d1; p.delta2 = d2;
    p.r1 = r1; p.r2 = r2;
    p.c1 = c1; p.c2 = c2;
    p.cD = cD; p.q = q;
    p.variant = variant;
    return p;
}

double max_norm(const State& a, const State& b) {
    const Vec5 u = a.to_array(), v = b.to_array();
    double m = 0.0;
    for (int i = 0; i < kDim; ++i) m = std::max(m, std::abs(u[i] - v[i]));
    return m;
}

/// Max violation of the family's defining constraints at x.
double family_distance(const EquilibriumFamily& f, const State& x) {
    const Params& p = f.params;
    double d = std::max(std::abs(x.z1 - 1.0), std::abs(x.z2 - 1.0));
    switch (f.family) {
        case FamilyKind::L0: {
            const double sum = 1.0 - 1.0 / (p.q * f.r0);
            d = std::max(d, std::abs(x.y1 + x.y2 - sum));
            d = std::max(d, std::abs(x.zS));
            break;
        }
        case FamilyKind::L1: {
            const double sum = 1.0 - 1.0 / (p.q * p.q * f.r0);
            d = std::max(d, std::abs(x.y1 + x.y2 - sum));
            d = std::max(d, std::abs(x.zS - 1.0));
            break;
        }
        case FamilyKind::LS: {
            const double y2_on = p.cD / (2.0 * p.r2) - (p.r1 / p.r2) * x.y1;
            const double s_on = 1.0 - x.y1 - y2_on;
            const double zS_on =
                1.0 / (1.0 - p.q) - 1.0 / (p.q * (1.0 - p.q) * f.r0 * s_on);
            d = std::max(d, std::abs(x.y2 - y2_on));
            d = std::max(d, std::abs(x.zS - zS_on));
            break;
        }
    }
    d = std::max(d, f.y1_lo - x.y1);
    d = std::max(d, x.y1 - f.y1_hi);
    return d;
}

std::optional<EquilibriumFamily> find_family(const Params& p, const std::string& name) {
    for (auto& f : coexistence_families(p))
        if (f.name() == name) return f;
    return std::nullopt;
}

json state_json(const State& x) {
    return json::array({x.y1, x.y2, x.zS, x.z1, x.z2});
}

std::vector<ScenarioSpec> build_registry() {
    std::vector<ScenarioSpec> reg;

    {
        ScenarioSpec s;
        s.name = "fig1";
        s.description = "both viruses die out and distancing relaxes; the virus-1 threshold "
                        "sits exactly at one, so the approach is sub-exponential";
        s.params = make_params(0.8, 0.7, 0.4, 0.4, 3, 3, 9, 9, 1, 0.5);
        s.starts = {make_state(0.4, 0.6, 0.1, 0.1, 0.2)};
        s.t_end = 500;
        s.expected.kind = ExpectationKind::Point;
        s.expected.target = "dfe_candidate";
        s.expected.tolerance = 1e-2;
        s.expected.conv_tol = 1e-3;
        reg.push_back(std::move(s));
    }
    {
        ScenarioSpec s;
        s.name = "fig2";
        s.description = "virus 1 endemic, nobody distancing";
        s.params = make_params(0.9, 0.6, 0.2, 0.2, 0.2, 0.1, 0.6, 0.6, 0.5, 0.5);
        s.starts = {make_state(0.1, 0.8, 0.9, 0.2, 0.3)};
        s.expected.kind = ExpectationKind::Point;
        s.expected.target = "p_10";
        s.expected.tolerance = 1e-3;
        s.expected.conv_tol = 1e-6;
        reg.push_back(std::move(s));
    }
    {
        ScenarioSpec s;
        s.name = "fig3";
        s.description = "virus 1 endemic with every susceptible distancing";
        s.params = make_params(2, 0.3, 0.1, 0.6, 0.6, 0.4, 0.5, 0.5, 0.4, 0.3);
        s.starts = {make_state(0.1, 0.9, 0.5, 0.4, 0.7)};
        s.expected.kind = ExpectationKind::Point;
        s.expected.target = "p_11";
        s.expected.tolerance = 1e-3;
        s.expected.conv_tol = 1e-6;
        reg.push_back(std::move(s));
    }
    {
        ScenarioSpec s;
        s.name = "fig4";
        s.description = "virus 1 endemic with part of the susceptibles distancing";
        s.params = make_params(0.7, 0.1, 0.3, 0.6, 1, 1, 0.6, 1.5, 0.5, 0.6);
        s.starts = {make_state(0.3, 0.1, 0.3, 0.8, 0.8)};
        s.expected.kind = ExpectationKind::Point;
        s.expected.target = "p_1S";
        s.expected.tolerance = 1e-3;
        s.expected.conv_tol = 1e-6;
        reg.push_back(std::move(s));
    }
    {
        ScenarioSpec s;
        s.name = "fig5";
        s.description = "coexistence line with nobody distancing, four starts";
        s.params = make_params(0.4, 0.4, 0.2, 0.2, 1, 2, 4, 4, 2, 0.8);
        s.starts = {make_state(0.1, 0.8, 0.9, 0.9, 0.9), make_state(0.1, 0.1, 0.5, 0.5, 0.5),
                    make_state(0.8, 0.1, 0.5, 0.5, 0.5), make_state(0.1, 0.1, 0.5, 0.5, 0.5)};
        s.expected.kind = ExpectationKind::Family;
        s.expected.target = "L0";
        s.expected.tolerance = 1e-3;
        s.expected.conv_tol = 1e-4;
        reg.push_back(std::move(s));
    }
    {
        ScenarioSpec s;
        s.name = "fig6";
        s.description = "coexistence line with everybody distancing, four starts";
        s.params = make_params(0.4, 0.4, 0.2, 0.2, 1, 2, 4, 4, 0.1, 0.8);
        s.starts = {make_state(0.1, 0.8, 0.9, 0.9, 0.9), make_state(0.1, 0.1, 0.5, 0.5, 0.5),
                    make_state(0.8, 0.1, 0.5, 0.5, 0.5), make_state(0.1, 0.1, 0.5, 0.5, 0.5)};
        s.expected.kind = ExpectationKind::Family;
        s.expected.target = "L1";
        s.expected.tolerance = 1e-3;
        s.expected.conv_tol = 1e-4;
        reg.push_back(std::move(s));
    }
    {
        ScenarioSpec s;
        s.name = "fig7";
        s.description = "coexistence curve with interior distancing; parameters come from a "
                        "deterministic search, the start is a small off-curve perturbation";
        s.params = find_ls_params();
        const auto fam = find_family(s.params, "LS");
        const double mid = (fam->y1_lo + fam->y1_hi) / 2.0;
        State x0 = fam->at(mid);
        x0.y1 += 1e-2;
        x0.y2 = std::max(x0.y2 - 1e-2, 0.0);
        x0.zS = std::clamp(x0.zS + 1e-2, 0.0, 1.0);
        x0.z1 -= 1e-2;
        x0.z2 -= 1e-2;
        s.starts = {x0};
        s.expected.kind = ExpectationKind::Family;
        s.expected.target = "LS";
        s.expected.tolerance = 1e-3;
        s.expected.conv_tol = 1e-4;
        reg.push_back(std::move(s));
    }
    {
        ScenarioSpec s;
        s.name = "fig8";
        s.description = "coordination payoff with identical viral rates: sustained cycling";
        s.params = make_params(0.8, 0.8, 0.1, 0.1, 1.1, 1.1, 0.2, 0.3, 1, 0.1,
                               Variant::Coordination);
        s.starts = {make_state(0.5, 0.3, 0.6, 0.1, 0.2)};
        s.t_end = 2000;
        s.record_every = 200;
        s.expected.kind = ExpectationKind::LimitCycle;
        s.expected.coordinate = 0;  // y1
        s.expected.oscillation = OscillationClass::Sustained;
        s.expected.min_late_amplitude = 0.05;
        reg.push_back(std::move(s));
    }
    {
        ScenarioSpec s;
        s.name = "fig8b";
        s.description = "coordination payoff with virus 1 spreading faster: its swings keep "
                        "growing while the weaker virus's oscillations die down";
        s.params = make_params(0.9, 0.8, 0.1, 0.1, 1.1, 1.1, 0.2, 0.3, 1, 0.1,
                               Variant::Coordination);
        s.starts = {make_state(0.5, 0.3, 0.6, 0.1, 0.2)};
        s.t_end = 2000;
        s.record_every = 200;
        s.expected.kind = ExpectationKind::LimitCycle;
        s.expected.coordinate = 1;  // y2
        s.expected.oscillation = OscillationClass::Decaying;
        reg.push_back(std::move(s));
    }
    return reg;
}

}  // namespace

const std::vector<ScenarioSpec>& scenario_registry() {
    static const std::vector<ScenarioSpec> reg = build_registry();
    return reg;
}

const ScenarioSpec* find_scenario(const std::string& name) {
    for (const auto& s : scenario_registry())
        if (s.name == name) return &s;
    return nullptr;
}

namespace {

void write_artifacts(const ScenarioSpec& spec, const ScenarioReport& rep,
                     const std::vector<Trajectory>& trajectories, const std::string& outdir) {
    const fs::path dir = fs::path(outdir) / spec.name;
    fs::create_directories(dir);

    for (std::size_t k = 0; k < trajectories.size(); ++k) {
        const std::string fname = k == 0 ? "trajectory.csv"
                                         : "trajectory_" + std::to_string(k) + ".csv";
        write_trajectory_csv_file(trajectories[k], (dir / fname).string());
    }

    std::ofstream rj(dir / "report.json", std::ios::binary);
    rj << scenario_report_json(spec, rep);

    static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

    SvgPlot ts(spec.name + " time series", "t", "state", 0.0, trajectories[0].t_end(), 0.0, 1.0);
    for (int c = 0; c < kDim; ++c) {
        std::vector<std::pair<double, double>> pts;
        pts.reserve(trajectories[0].times.size());
        for (std::size_t k = 0; k < trajectories[0].times.size(); ++k)
            pts.emplace_back(trajectories[0].times[k], trajectories[0].states[k][c]);
        ts.polyline(pts, kPalette[c]);
        ts.legend_entry(kCoordNames[c], kPalette[c]);
    }
    ts.write_file((dir / "timeseries.svg").string());

    SvgPlot py(spec.name + " infected-mass plane", "y1", "y2", 0.0, 1.0, 0.0, 1.0);
    SvgPlot pz(spec.name + " distancing response", "y1", "zS", 0.0, 1.0, 0.0, 1.0);
    py.polyline({{0.0, 1.0}, {1.0, 0.0}}, "#999999", 1.0, true);  // simplex boundary
    for (std::size_t k = 0; k < trajectories.size(); ++k) {
        const auto& tr = trajectories[k];
        std::vector<std::pair<double, double>> yy, yz;
        yy.reserve(tr.states.size());
        yz.reserve(tr.states.size());
        for (const auto& st : tr.states) {
            yy.emplace_back(st.y1, st.y2);
            yz.emplace_back(st.y1, st.zS);
        }
        const std::string color = kPalette[k % 5];
        py.polyline(yy, color);
        pz.polyline(yz, color);
        py.marker(tr.states.front().y1, tr.states.front().y2, color, "dot");
        pz.marker(tr.states.front().y1, tr.states.front().zS, color, "dot");
    }
    // Analytic overlay: every existing isolated equilibrium and family.
    for (const auto& e : all_isolated(spec.params))
        if (e.status == ExistenceStatus::Exists) {
            py.marker(e.point.y1, e.point.y2, "#00b0b0");
            pz.marker(e.point.y1, e.point.zS, "#00b0b0");
        }
    for (const auto& f : coexistence_families(spec.params))
        if (f.status == ExistenceStatus::Exists) {
            std::vector<std::pair<double, double>> yy, yz;
            for (const auto& st : f.samples(40)) {
                yy.emplace_back(st.y1, st.y2);
                yz.emplace_back(st.y1, st.zS);
            }
            py.polyline(yy, "#00a000", 1.5, true);
            pz.polyline(yz, "#00a000", 1.5, true);
        }
    py.write_file((dir / "phase_y.svg").string());
    pz.write_file((dir / "phase_zs.svg").string());
}

}  // namespace

ScenarioReport run_scenario(const ScenarioSpec& spec, const RunOptions& opt) {
    const double h = opt.dt.value_or(spec.h);
    const double t_end = opt.t_end.value_or(spec.t_end);
    std::size_t record_every = spec.record_every;
    if (opt.dt && *opt.dt != spec.h)
        record_every = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::llround(spec.record_every * spec.h / *opt.dt)));

    ScenarioReport rep;
    rep.name = spec.name;

    std::optional<Equilibrium> target_eq;
    std::optional<EquilibriumFamily> target_fam;
    if (spec.expected.kind == ExpectationKind::Point) {
        target_eq = find_equilibrium(spec.params, spec.expected.target);
        if (!target_eq || target_eq->status == ExistenceStatus::Absent)
            throw std::invalid_argument("run_scenario: expected equilibrium " +
                                        spec.expected.target + " does not exist");
        rep.target_point = target_eq->point;
    } else if (spec.expected.kind == ExpectationKind::Family) {
        target_fam = find_family(spec.params, spec.expected.target);
        if (!target_fam || target_fam->status != ExistenceStatus::Exists)
            throw std::invalid_argument("run_scenario: expected family " + spec.expected.target +
                                        " does not exist");
    }

    std::vector<Trajectory> trajectories;
    trajectories.reserve(spec.starts.size());

    bool all_pass = true;
    for (const State& x0 : spec.starts) {
        Trajectory tr = simulate(spec.params, x0, h, t_end, record_every);
        StartReport sr;
        sr.x0 = x0;
        sr.final_state = tr.final_state();
        sr.convergence = detect_convergence(tr, spec.expected.conv_tol);
        switch (spec.expected.kind) {
            case ExpectationKind::Point:
                sr.measured = max_norm(sr.final_state, target_eq->point);
                sr.pass = sr.measured < spec.expected.tolerance;
                break;
            case ExpectationKind::Family:
                sr.measured = family_distance(*target_fam, sr.final_state);
                sr.pass = sr.measured < spec.expected.tolerance;
                break;
            case ExpectationKind::LimitCycle: {
                sr.oscillation = detect_oscillation(tr, spec.expected.coordinate);
                const auto& amp = sr.oscillation.peak_amplitudes;
                sr.measured = amp.empty() ? 0.0 : amp.back();
                sr.pass = sr.oscillation.classification == spec.expected.oscillation &&
                          sr.measured >= spec.expected.min_late_amplitude;
                break;
            }
        }
        all_pass = all_pass && sr.pass;
        rep.starts.push_back(std::move(sr));
        trajectories.push_back(std::move(tr));
    }
    rep.pass = all_pass;

    if (!opt.outdir.empty()) write_artifacts(spec, rep, trajectories, opt.outdir);
    return rep;
}

ScenarioReport reproduce(const std::string& figure_id, const RunOptions& opt) {
    const ScenarioSpec* spec = find_scenario(figure_id);
    if (!spec) throw std::invalid_argument("reproduce: unknown scenario id " + figure_id);
    return run_scenario(*spec, opt);
}

std::string scenario_report_json(const ScenarioSpec& spec, const ScenarioReport& rep) {
    json j;
    j["name"] = rep.name;
    j["description"] = spec.description;
    j["pass"] = rep.pass;
    j["params"] = json::parse(params_to_json(spec.params));
    j["h"] = spec.h;
    j["t_end"] = spec.t_end;
    json starts = json::array();
    for (const auto& sr : rep.starts) {
        json s;
        s["x0"] = state_json(sr.x0);
        s["final"] = state_json(sr.final_state);
        s["measured"] = sr.measured;
        s["pass"] = sr.pass;
        s["converged"] = sr.convergence.converged;
        s["residual"] = sr.convergence.residual;
        s["t_converged"] = sr.convergence.t_converged;
        if (spec.expected.kind == ExpectationKind::LimitCycle) {
            s["oscillation"] = to_string(sr.oscillation.classification);
            s["peak_amplitudes"] = sr.oscillation.peak_amplitudes;
        }
        starts.push_back(std::move(s));
    }
    j["starts"] = std::move(starts);
    if (spec.expected.kind == ExpectationKind::Point) {
        j["expected"] = {{"kind", "point"},
                         {"target", spec.expected.target},
                         {"point", state_json(rep.target_point)},
                         {"tolerance", spec.expected.tolerance}};
    } else if (spec.expected.kind == ExpectationKind::Family) {
        j["expected"] = {{"kind", "family"},
                         {"target", spec.expected.target},
                         {"tolerance", spec.expected.tolerance}};
    } else {
        j["expected"] = {{"kind", "limit-cycle"},
                         {"coordinate", kCoordNames[spec.expected.coordinate]},
                         {"class", to_string(spec.expected.oscillation)},
                         {"min_late_amplitude", spec.expected.min_late_amplitude}};
    }
    return j.dump(2);
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

double Params::* param_field(const std::string& name) {
    if (name == "beta1") return &Params::beta1;
    if (name == "beta2") return &Params::beta2;
    if (name == "delta1") return &Params::delta1;
    if (name == "delta2") return &Params::delta2;
    if (name == "r1") return &Params::r1;
    if (name == "r2") return &Params::r2;
    if (name == "c1") return &Params::c1;
    if (name == "c2") return &Params::c2;
    if (name == "cD") return &Params::cD;
    if (name == "q") return &Params::q;
    throw std::invalid_argument("sweep: unknown parameter axis \"" + name + "\"");
}

SweepCell eval_cell(Params p, double v0, double v1) {
    SweepCell cell;
    cell.v0 = v0;
    cell.v1 = v1;

    const AssumptionReport rep = validate(p);
    if (!rep.hard_ok() || !rep.generic_costs) return cell;

    auto apply = [&cell](std::uint32_t bit, ExistenceStatus status, const Prediction& pr) {
        if (status == ExistenceStatus::Exists) cell.exists |= 1u << bit;
        if (status == ExistenceStatus::Exists && pr.verdict == PredictedVerdict::Stable)
            cell.stable |= 1u << bit;
    };

    for (const auto& e : enumerate_dfes(p))
        if (e.stability_candidate) apply(kDfeCandidate, e.status, predict_stability(p, e));
    for (int virus : {1, 2})
        for (const auto& e : unilateral(p, virus)) {
            const std::uint32_t bit =
                (virus == 1 ? kP10 : kP20) + static_cast<std::uint32_t>(e.distancing);
            apply(bit, e.status, predict_stability(p, e));
        }
    for (const auto& f : coexistence_families(p)) {
        const std::uint32_t bit = f.family == FamilyKind::L0 ? kL0
                                : f.family == FamilyKind::L1 ? kL1
                                                             : kLS;
        apply(bit, f.status, predict_stability(p, f));
    }
    return cell;
}

}  // namespace

const char* sweep_class_name(std::uint32_t bit) {
    static const char* names[] = {"dfe", "p10", "p11", "p1S", "p20", "p21", "p2S",
                                  "L0",  "L1",  "LS"};
    return bit < kSweepClassCount ? names[bit] : "?";
}

SweepGrid sweep(const SweepSpec& spec, Exec exec) {
    if (spec.axes.empty() || spec.axes.size() > 2)
        throw std::invalid_argument("sweep: need one or two axes");
    if (spec.axes.size() == 2 && spec.axes[0].param == spec.axes[1].param)
        throw std::invalid_argument("sweep: axes must name distinct parameters");
    for (const auto& ax : spec.axes)
        if (ax.steps < 1) throw std::invalid_argument("sweep: steps must be at least 1");

    SweepGrid grid;
    grid.spec = spec;
    grid.n0 = spec.axes[0].steps;
    grid.n1 = spec.axes.size() == 2 ? spec.axes[1].steps : 1;
    grid.cells.resize(static_cast<std::size_t>(grid.n0) * grid.n1);

    auto axis_value = [](const SweepAxis& ax, int k) {
        return ax.steps == 1 ? ax.lo : ax.lo + (ax.hi - ax.lo) * k / (ax.steps - 1);
    };

    auto field0 = param_field(spec.axes[0].param);
    auto field1 = spec.axes.size() == 2 ? param_field(spec.axes[1].param) : nullptr;

    const long long total = static_cast<long long>(grid.cells.size());
    auto work = [&](long long idx) {
        const int i = static_cast<int>(idx / grid.n1);
        const int jj = static_cast<int>(idx % grid.n1);
        Params p = spec.base;
        const double v0 = axis_value(spec.axes[0], i);
        p.*field0 = v0;
        double v1 = 0.0;
        if (field1) {
            v1 = axis_value(spec.axes[1], jj);
            p.*field1 = v1;
        }
        grid.cells[idx] = eval_cell(p, v0, v1);
    };

    if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long idx = 0; idx < total; ++idx) work(idx);
    } else {
        for (long long idx = 0; idx < total; ++idx) work(idx);
    }
    return grid;
}

void write_sweep_csv(const SweepGrid& grid, std::ostream& os) {
    os << grid.spec.axes[0].param;
    os << ',' << (grid.spec.axes.size() == 2 ? grid.spec.axes[1].param : "-");
    for (std::uint32_t b = 0; b < kSweepClassCount; ++b) os << ",exists_" << sweep_class_name(b);
    for (std::uint32_t b = 0; b < kSweepClassCount; ++b) os << ",stable_" << sweep_class_name(b);
    os << '\n';
    char buf[32];
    for (const auto& cell : grid.cells) {
        std::snprintf(buf, sizeof buf, "%.12g", cell.v0);
        os << buf << ',';
        std::snprintf(buf, sizeof buf, "%.12g", cell.v1);
        os << buf;
        for (std::uint32_t b = 0; b < kSweepClassCount; ++b)
            os << ',' << ((cell.exists >> b) & 1u);
        for (std::uint32_t b = 0; b < kSweepClassCount; ++b)
            os << ',' << ((cell.stable >> b) & 1u);
        os << '\n';
    }
}

void write_sweep_csv_file(const SweepGrid& grid, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_sweep_csv(grid, out);
}

void write_sweep_svg_file(const SweepGrid& grid, const std::string& path) {
    // Heat map colored by the first stable class in each cell.
    static const char* kPalette[] = {"#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3",
                                     "#937860", "#da8bc3", "#8c8c8c", "#ccb974", "#64b5cd"};
    const auto& ax0 = grid.spec.axes[0];
    const bool two = grid.spec.axes.size() == 2;
    const double x_lo = ax0.lo, x_hi = ax0.steps == 1 ? ax0.lo + 1 : ax0.hi;
    const double y_lo = two ? grid.spec.axes[1].lo : 0.0;
    const double y_hi = two ? (grid.spec.axes[1].steps == 1 ? y_lo + 1 : grid.spec.axes[1].hi)
                            : 1.0;

    SvgPlot plot("stable classes over the sweep", ax0.param,
                 two ? grid.spec.axes[1].param : "", x_lo, x_hi, y_lo, y_hi);
    const double dx = (x_hi - x_lo) / std::max(grid.n0 - 1, 1);
    const double dy = (y_hi - y_lo) / std::max(grid.n1 - 1, 1);
    std::vector<bool> seen(kSweepClassCount, false);
    for (const auto& cell : grid.cells) {
        if (cell.stable == 0) continue;
        int first = 0;
        while (!((cell.stable >> first) & 1u)) ++first;
        seen[first] = true;
        // One filled square per cell, sized to the grid pitch.
        std::vector<std::pair<double, double>> box = {
            {cell.v0 - dx / 2, cell.v1 - dy / 2}, {cell.v0 + dx / 2, cell.v1 - dy / 2},
            {cell.v0 + dx / 2, cell.v1 + dy / 2}, {cell.v0 - dx / 2, cell.v1 + dy / 2},
            {cell.v0 - dx / 2, cell.v1 - dy / 2}};
        plot.polyline(box, kPalette[first], 2.5, false);
    }
    for (std::uint32_t b = 0; b < kSweepClassCount; ++b)
        if (seen[b]) plot.legend_entry(sweep_class_name(b), kPalette[b]);
    plot.write_file(path);
}

// ---------------------------------------------------------------------------
// Basin probing

double basin_probe(const Params& p, const State& target, int n, std::uint64_t seed,
                   const BasinOptions& opt, Exec exec) {
    if (n < 1) throw std::invalid_argument("basin_probe: n must be positive");
    const std::vector<State> starts = sample_interior_batch(seed, n, opt.margin);

    const auto n_steps = static_cast<std::size_t>(std::llround(opt.t_end / opt.h));
    const std::size_t record_every = std::max<std::size_t>(1, n_steps / 2000);

    std::vector<char> hit(n, 0);
    auto work = [&](int k) {
        const Trajectory tr = simulate(p, starts[k], opt.h, opt.t_end, record_every);
        const ConvergenceVerdict cv = detect_convergence(tr, opt.conv_tol);
        hit[k] = cv.converged && max_norm(cv.limit, target) < opt.dist_tol;
    };

    if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int k = 0; k < n; ++k) work(k);
    } else {
        for (int k = 0; k < n; ++k) work(k);
    }

    int count = 0;
    for (char c : hit) count += c;
    return static_cast<double>(count) / n;
}

Params find_ls_params() {
    // Fixed shared reproduction number; scan the distancing economics until
    // the interior-distancing curve exists with room to spare and every
    // closed-form stability hypothesis holds strictly.
    for (double q : {0.7, 0.75, 0.8, 0.65, 0.6}) {
        for (double cD : {0.6, 0.8, 1.0, 1.2, 0.4}) {
            for (double r2 : {2.0, 1.5, 3.0}) {
                const Params p = make_params(0.5, 0.5, 0.25, 0.25, 1.0, r2,
                                             cD + 0.5, cD + 1.0, cD, q);
                const auto fam = find_family(p, "LS");
                if (!fam || fam->status != ExistenceStatus::Exists) continue;
                if (fam->y1_hi - fam->y1_lo < 0.05) continue;
                if (predict_stability(p, *fam).verdict != PredictedVerdict::Stable) continue;
                return p;
            }
        }
    }
    throw std::logic_error("find_ls_params: search grid exhausted");
}

}  // namespace bisis
