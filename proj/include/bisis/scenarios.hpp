#ifndef BISIS_SCENARIOS_HPP
#define BISIS_SCENARIOS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bisis/equilibria.hpp"
#include "bisis/integrator.hpp"
#include "bisis/stability.hpp"
#include "bisis/types.hpp"

namespace bisis {

enum class ExpectationKind { Point, Family, LimitCycle };

/// What a scenario run must show, with the tolerance pinned up front.
struct Expectation {
    ExpectationKind kind = ExpectationKind::Point;
    std::string target;      // equilibrium name or family name
    double tolerance = 1e-3; // distance to the point / family constraints
    double conv_tol = tol::convergence;  // residual+drift threshold for "settled"
    // LimitCycle only:
    int coordinate = 0;
    OscillationClass oscillation = OscillationClass::Sustained;
    double min_late_amplitude = 0.0;
};

struct ScenarioSpec {
    std::string name;
    std::string description;
    Params params;
    std::vector<State> starts;
    double h = 1e-4;
    double t_end = 300.0;
    std::size_t record_every = 100;
    Expectation expected;
};

struct StartReport {
    State x0;
    State final_state;
    double measured = 0.0;  // distance / family residual / late amplitude
    bool pass = false;
    ConvergenceVerdict convergence;
    OscillationVerdict oscillation;
};

struct ScenarioReport {
    std::string name;
    bool pass = false;
    std::vector<StartReport> starts;
    State target_point;  // resolved target when the expectation is a point
};

/// Every simulation study in the registry, keyed fig1..fig8 plus the
/// generic-rates coordination variant fig8b and the searched
/// partial-distancing curve scenario fig7.
const std::vector<ScenarioSpec>& scenario_registry();

const ScenarioSpec* find_scenario(const std::string& name);

struct RunOptions {
    std::optional<double> dt;      // override the registered step size
    std::optional<double> t_end;
    std::string outdir;            // empty: no artifacts
};

/// Simulates every start, evaluates the expectation, and (with an outdir)
/// writes <outdir>/<name>/{trajectory*.csv, report.json, phase_y.svg,
/// phase_zs.svg, timeseries.svg}.
ScenarioReport run_scenario(const ScenarioSpec& spec, const RunOptions& opt = {});

/// Runs a registered scenario by name. Throws std::invalid_argument for an
/// unknown id.
ScenarioReport reproduce(const std::string& figure_id, const RunOptions& opt = {});

std::string scenario_report_json(const ScenarioSpec& spec, const ScenarioReport& rep);

// ---------------------------------------------------------------------------
// Parameter sweeps

struct SweepAxis {
    std::string param;  // beta1, beta2, delta1, delta2, r1, r2, c1, c2, cD, q
    double lo = 0.0, hi = 1.0;
    int steps = 1;
};

struct SweepSpec {
    Params base;
    std::vector<SweepAxis> axes;  // 1 or 2 axes with distinct parameters
};

struct SweepCell {
    double v0 = 0.0, v1 = 0.0;  // axis values
    std::uint32_t exists = 0;   // bitmask over SweepClass
    std::uint32_t stable = 0;   // closed-form Stable verdicts
};

/// Bit positions of equilibrium classes in SweepCell masks.
enum SweepClass : std::uint32_t {
    kDfeCandidate = 0,
    kP10 = 1, kP11 = 2, kP1S = 3,
    kP20 = 4, kP21 = 5, kP2S = 6,
    kL0 = 7, kL1 = 8, kLS = 9,
    kSweepClassCount = 10,
};

const char* sweep_class_name(std::uint32_t bit);

struct SweepGrid {
    SweepSpec spec;
    int n0 = 1, n1 = 1;  // grid extents (n1 == 1 for a single axis)
    std::vector<SweepCell> cells;  // row-major, cell(i,j) = cells[i*n1+j]

    const SweepCell& at(int i, int j) const { return cells[static_cast<std::size_t>(i) * n1 + j]; }
};

/// Evaluates enumerators and stability predictions on every grid cell.
SweepGrid sweep(const SweepSpec& spec, Exec exec = Exec::Parallel);

void write_sweep_csv(const SweepGrid& grid, std::ostream& os);
void write_sweep_csv_file(const SweepGrid& grid, const std::string& path);
void write_sweep_svg_file(const SweepGrid& grid, const std::string& path);

// ---------------------------------------------------------------------------
// Basin probing

struct BasinOptions {
    double h = 1e-3;
    double t_end = 300.0;
    double dist_tol = 1e-3;   // limit must land this close to the target
    double conv_tol = 1e-6;   // settledness threshold
    double margin = 1e-3;     // distance of the draws from the boundary
};

/// Fraction of n uniform interior starts whose settled limit lies within
/// dist_tol of the target. Deterministic for a fixed seed regardless of the
/// execution policy.
double basin_probe(const Params& p, const State& target, int n, std::uint64_t seed,
                   const BasinOptions& opt = {}, Exec exec = Exec::Parallel);

/// Deterministic grid search for parameters admitting a stable
/// partial-distancing coexistence curve (used by the fig7 scenario).
Params find_ls_params();

}  // namespace bisis

#endif  // BISIS_SCENARIOS_HPP
