#include "bisis/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bisis {

double q_factor(double z, double q) {
    if (!(z >= 0.0 && z <= 1.0))
        throw std::domain_error("q_factor: z = " + std::to_string(z) + " outside [0,1]");
    if (!(q > 0.0 && q < 1.0))
        throw std::domain_error("q_factor: q = " + std::to_string(q) + " outside (0,1)");
    return 1.0 - z * (1.0 - q);
}

bool in_gamma(const State& x, double slack) {
    const Vec5 v = x.to_array();
    for (double c : v)
        if (!(c >= -slack && c <= 1.0 + slack)) return false;
    return x.y1 + x.y2 <= 1.0 + slack;
}

namespace {

void require_in_gamma(const State& x, const char* op) {
    if (!in_gamma(x, tol::gamma_slack))
        throw std::domain_error(std::string(op) + ": state outside the admissible set");
}

double susceptible_payoff_gap(const Params& p, const State& x) {
    double gap = 2.0 * (p.r1 * x.y1 + p.r2 * x.y2) - p.cD;
    if (p.variant == Variant::Coordination) gap += x.zS - 1.0;
    return gap;
}

}  // namespace

Vec5 rhs(const Params& p, const State& x) {
    require_in_gamma(x, "rhs");
    const double s = x.s();
    const double qzS = 1.0 - x.zS * (1.0 - p.q);
    const double qz1 = 1.0 - x.z1 * (1.0 - p.q);
    const double qz2 = 1.0 - x.z2 * (1.0 - p.q);
    return {
        x.y1 * (p.beta1 * s * qzS * qz1 - p.delta1),
        x.y2 * (p.beta2 * s * qzS * qz2 - p.delta2),
        x.zS * (1.0 - x.zS) * susceptible_payoff_gap(p, x),
        x.z1 * (1.0 - x.z1) * (p.c1 - p.cD),
        x.z2 * (1.0 - x.z2) * (p.c2 - p.cD),
    };
}

PayoffSet payoffs(const Params& p, const State& x) {
    require_in_gamma(x, "payoffs");
    const double risk = p.r1 * x.y1 + p.r2 * x.y2;
    PayoffSet out;
    out.sD = -p.cD + risk;
    out.sN = -risk;
    if (p.variant == Variant::Coordination) out.sN += 1.0 - x.zS;
    out.i1D = -p.cD;
    out.i1N = -p.c1;
    out.i2D = -p.cD;
    out.i2N = -p.c2;
    return out;
}

ReproductionNumbers reproduction_numbers(const Params& p, const State& x) {
    require_in_gamma(x, "reproduction_numbers");
    ReproductionNumbers rn;
    rn.base1 = p.beta1 / p.delta1;
    rn.base2 = p.beta2 / p.delta2;
    const double qzS = q_factor(std::clamp(x.zS, 0.0, 1.0), p.q);
    rn.eff1 = qzS * q_factor(std::clamp(x.z1, 0.0, 1.0), p.q) * rn.base1;
    rn.eff2 = qzS * q_factor(std::clamp(x.z2, 0.0, 1.0), p.q) * rn.base2;
    return rn;
}

AssumptionReport validate(const Params& p) {
    for (double v : {p.beta1, p.beta2, p.delta1, p.delta2, p.r1, p.r2, p.c1, p.c2, p.cD, p.q})
        if (!std::isfinite(v))
            throw std::invalid_argument("validate: non-finite parameter value");

    AssumptionReport rep;
    rep.rates_positive = p.beta1 > 0 && p.beta2 > 0 && p.delta1 > 0 && p.delta2 > 0;
    rep.q_in_open_unit = p.q > 0 && p.q < 1;
    rep.risks_positive = p.r1 > 0 && p.r2 > 0;
    rep.risk_ordered = rep.risks_positive && p.r1 < p.r2;
    rep.distancing_cost_positive = p.cD > 0;
    rep.cost1_above_cD = p.c1 > p.cD;
    rep.cost2_above_cD = p.c2 > p.cD;
    rep.genericity_margin = std::min(std::abs(p.c1 - p.cD), std::abs(p.c2 - p.cD));
    rep.generic_costs = rep.genericity_margin > tol::genericity;
    return rep;
}

namespace {

using nlohmann::json;

const char* variant_name(Variant v) {
    return v == Variant::Standard ? "standard" : "coordination";
}

}  // namespace

Params params_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("params: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("params: top-level JSON must be an object");

    static const char* numeric_keys[] = {"beta1", "beta2", "delta1", "delta2",
                                         "r1",    "r2",    "c1",     "c2",
                                         "cD",    "q"};
    for (auto& [key, value] : j.items()) {
        bool known = key == "variant";
        for (const char* k : numeric_keys) known = known || key == k;
        if (!known) throw std::invalid_argument("params: unknown key \"" + key + "\"");
    }

    Params p;
    auto num = [&](const char* key) {
        if (!j.contains(key)) throw std::invalid_argument(std::string("params: missing key \"") + key + "\"");
        if (!j[key].is_number()) throw std::invalid_argument(std::string("params: key \"") + key + "\" must be a number");
        return j[key].get<double>();
    };
    p.beta1 = num("beta1");
    p.beta2 = num("beta2");
    p.delta1 = num("delta1");
    p.delta2 = num("delta2");
    p.r1 = num("r1");
    p.r2 = num("r2");
    p.c1 = num("c1");
    p.c2 = num("c2");
    p.cD = num("cD");
    p.q = num("q");
    if (j.contains("variant")) {
        const std::string v = j["variant"].get<std::string>();
        if (v == "standard")
            p.variant = Variant::Standard;
        else if (v == "coordination")
            p.variant = Variant::Coordination;
        else
            throw std::invalid_argument("params: variant must be \"standard\" or \"coordination\"");
    }
    return p;
}

Params params_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("params: cannot open config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return params_from_json(buf.str());
}

std::string params_to_json(const Params& p) {
    json j;
    j["beta1"] = p.beta1;
    j["beta2"] = p.beta2;
    j["delta1"] = p.delta1;
    j["delta2"] = p.delta2;
    j["r1"] = p.r1;
    j["r2"] = p.r2;
    j["c1"] = p.c1;
    j["c2"] = p.c2;
    j["cD"] = p.cD;
    j["q"] = p.q;
    j["variant"] = variant_name(p.variant);
    return j.dump(2);
}

std::string assumption_report_json(const AssumptionReport& rep) {
    json j;
    j["rates_positive"] = rep.rates_positive;
    j["q_in_open_unit"] = rep.q_in_open_unit;
    j["risks_positive"] = rep.risks_positive;
    j["risk_ordered"] = rep.risk_ordered;
    j["distancing_cost_positive"] = rep.distancing_cost_positive;
    j["cost1_above_cD"] = rep.cost1_above_cD;
    j["cost2_above_cD"] = rep.cost2_above_cD;
    j["generic_costs"] = rep.generic_costs;
    j["genericity_margin"] = rep.genericity_margin;
    j["hard_ok"] = rep.hard_ok();
    return j.dump(2);
}

}  // namespace bisis
