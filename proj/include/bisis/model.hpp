#ifndef BISIS_MODEL_HPP
#define BISIS_MODEL_HPP

#include <iosfwd>
#include <string>

#include "bisis/types.hpp"

namespace bisis {

/// Contact factor of a group with distancing fraction z: 1 - z(1-q).
/// Always lands in [q, 1]. Throws std::domain_error outside z in [0,1],
/// q in (0,1).
double q_factor(double z, double q);

/// Membership in the state space (product of the infection simplex and the
/// unit cube of distancing fractions), with coordinate-wise slack.
bool in_gamma(const State& x, double slack = tol::gamma_slack);

/// Time derivatives of the five coordinates. The zS line switches with
/// p.variant; all other lines are shared. Throws std::domain_error when x
/// lies outside the state space beyond the slack.
Vec5 rhs(const Params& p, const State& x);

/// Perceived payoffs: susceptible distancing / not, infected-with-1
/// distancing / not, infected-with-2 distancing / not.
struct PayoffSet {
    double sD = 0, sN = 0;
    double i1D = 0, i1N = 0;
    double i2D = 0, i2N = 0;
};

PayoffSet payoffs(const Params& p, const State& x);

struct ReproductionNumbers {
    double base1 = 0, base2 = 0;  // beta_i / delta_i
    double eff1 = 0, eff2 = 0;    // scaled by both contact factors

    double base(int virus) const { return virus == 1 ? base1 : base2; }
    double eff(int virus) const { return virus == 1 ? eff1 : eff2; }
};

ReproductionNumbers reproduction_numbers(const Params& p, const State& x);

/// Per-assumption verdicts for a parameter set. Hard requirements (positive
/// rates, q strictly inside (0,1), positive risks and distancing cost) gate
/// most operations; the remaining flags are informational.
struct AssumptionReport {
    bool rates_positive = false;          // beta_i > 0 and delta_i > 0
    bool q_in_open_unit = false;          // q in (0,1)
    bool risks_positive = false;          // r_i > 0
    bool risk_ordered = false;            // r1 < r2 (reported, not enforced)
    bool distancing_cost_positive = false;  // cD > 0
    bool cost1_above_cD = false;          // c1 > cD
    bool cost2_above_cD = false;          // c2 > cD
    bool generic_costs = false;           // min_i |c_i - cD| above the floor
    double genericity_margin = 0.0;       // min_i |c_i - cD|

    bool pro_social() const { return cost1_above_cD && cost2_above_cD; }
    bool hard_ok() const {
        return rates_positive && q_in_open_unit && risks_positive && distancing_cost_positive;
    }
};

/// Evaluates every assumption flag; throws std::invalid_argument on
/// non-finite parameters. Never mutates.
AssumptionReport validate(const Params& p);

/// JSON config I/O. The document must contain exactly the numeric fields
/// beta1, beta2, delta1, delta2, r1, r2, c1, c2, cD, q and optionally
/// "variant": "standard" | "coordination". Unknown keys are rejected.
Params params_from_json(const std::string& text);
Params params_from_json_file(const std::string& path);
std::string params_to_json(const Params& p);

std::string assumption_report_json(const AssumptionReport& rep);

}  // namespace bisis

#endif  // BISIS_MODEL_HPP
