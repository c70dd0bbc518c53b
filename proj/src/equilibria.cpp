#include "bisis/equilibria.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "bisis/model.hpp"

namespace bisis {

namespace {

// Margins inside this band around zero are boundary cases, neither existing
// nor absent.
constexpr double kDegenerateBand = 1e-14;

ExistenceStatus status_from(const std::vector<Condition>& conds) {
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& c : conds) worst = std::min(worst, c.margin);
    if (std::abs(worst) <= kDegenerateBand) return ExistenceStatus::Degenerate;
    return worst > 0.0 ? ExistenceStatus::Exists : ExistenceStatus::Absent;
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

bool coordination_variant(const Params& p) { return p.variant == Variant::Coordination; }

const char* kInteriorDistancingNote =
    "interior susceptible-distancing level is specific to the standard payoff; "
    "not an equilibrium of the coordination variant";

}  // namespace

const char* to_string(EquilibriumKind k) {
    switch (k) {
        case EquilibriumKind::Dfe: return "dfe";
        case EquilibriumKind::Unilateral: return "unilateral";
        case EquilibriumKind::LinePoint: return "line-point";
    }
    return "?";
}

const char* to_string(ExistenceStatus s) {
    switch (s) {
        case ExistenceStatus::Exists: return "exists";
        case ExistenceStatus::Degenerate: return "degenerate";
        case ExistenceStatus::Absent: return "absent";
    }
    return "?";
}

const char* to_string(FamilyKind f) {
    switch (f) {
        case FamilyKind::L0: return "L0";
        case FamilyKind::L1: return "L1";
        case FamilyKind::LS: return "LS";
    }
    return "?";
}

std::vector<Equilibrium> enumerate_dfes(const Params& p) {
    const AssumptionReport rep = validate(p);
    if (!rep.generic_costs)
        throw std::invalid_argument(
            "enumerate_dfes: costs are non-generic (|c_i - cD| = " +
            std::to_string(rep.genericity_margin) + " at or below the floor); the infected "
            "distancing lines would admit a continuum of rest points");

    const int cand_z1 = p.c1 > p.cD ? 1 : 0;
    const int cand_z2 = p.c2 > p.cD ? 1 : 0;

    std::vector<Equilibrium> out;
    out.reserve(8);
    for (int zS = 0; zS <= 1; ++zS)
        for (int z1 = 0; z1 <= 1; ++z1)
            for (int z2 = 0; z2 <= 1; ++z2) {
                Equilibrium e;
                e.name = "dfe_" + std::to_string(zS) + std::to_string(z1) + std::to_string(z2);
                e.kind = EquilibriumKind::Dfe;
                e.point = State{0.0, 0.0, double(zS), double(z1), double(z2)};
                e.existence.push_back({"generic costs", rep.genericity_margin - tol::genericity});
                e.status = ExistenceStatus::Exists;
                e.stability_candidate = (zS == 0 && z1 == cand_z1 && z2 == cand_z2);
                out.push_back(std::move(e));
            }
    return out;
}

std::vector<Equilibrium> unilateral(const Params& p, int virus) {
    if (virus != 1 && virus != 2)
        throw std::invalid_argument("unilateral: virus must be 1 or 2");

    const double beta = p.beta(virus);
    const double delta = p.delta(virus);
    const double r = p.r(virus);

    auto base_point = [&](double y, double zS) {
        State x;
        (virus == 1 ? x.y1 : x.y2) = y;
        x.zS = zS;
        x.z1 = 1.0;
        x.z2 = 1.0;
        return x;
    };

    std::vector<Equilibrium> out;

    {  // no susceptible distancing
        Equilibrium e;
        e.name = "p_" + std::to_string(virus) + "0";
        e.kind = EquilibriumKind::Unilateral;
        e.virus = virus;
        e.distancing = DistancingLevel::None;
        const double y = 1.0 - delta / (p.q * beta);
        e.point = base_point(std::max(y, 0.0), 0.0);
        e.existence.push_back({"endemic level positive (q R0 above one)", y});
        e.status = status_from(e.existence);
        out.push_back(std::move(e));
    }
    {  // all susceptibles distancing
        Equilibrium e;
        e.name = "p_" + std::to_string(virus) + "1";
        e.kind = EquilibriumKind::Unilateral;
        e.virus = virus;
        e.distancing = DistancingLevel::Full;
        const double y = 1.0 - delta / (p.q * p.q * beta);
        e.point = base_point(std::max(y, 0.0), 1.0);
        e.existence.push_back({"endemic level positive (q^2 R0 above one)", y});
        e.status = status_from(e.existence);
        out.push_back(std::move(e));
    }
    {  // interior susceptible distancing, pinned by the indifference payoff
        Equilibrium e;
        e.name = "p_" + std::to_string(virus) + "S";
        e.kind = EquilibriumKind::Unilateral;
        e.virus = virus;
        e.distancing = DistancingLevel::Partial;
        const double y = p.cD / (2.0 * r);
        const double slack = 1.0 - y;  // 1 - cD/(2r)
        const double inv_qr0 = delta / (p.q * beta);
        double zS = std::numeric_limits<double>::quiet_NaN();
        if (slack > 0.0)
            zS = 1.0 / (1.0 - p.q) - delta / (beta * slack * p.q * (1.0 - p.q));
        e.point = base_point(y, std::isfinite(zS) ? zS : -1.0);
        e.existence.push_back({"endemic level at most one", slack});
        e.existence.push_back({"some susceptibles distance (zS below one)", inv_qr0 - p.q * slack});
        e.existence.push_back({"some susceptibles socialize (zS above zero)", slack - inv_qr0});
        if (coordination_variant(p)) {
            e.existence.push_back({"standard susceptible payoff", -1.0});
            e.note = kInteriorDistancingNote;
        }
        e.status = status_from(e.existence);
        out.push_back(std::move(e));
    }
    return out;
}

State EquilibriumFamily::at(double y1) const {
    if (!(y1 > y1_lo))
        throw std::out_of_range(name() + ": y1 = " + std::to_string(y1) +
                                " at or below the lower bound " + std::to_string(y1_lo));
    if (!(y1 < y1_hi))
        throw std::out_of_range(name() + ": y1 = " + std::to_string(y1) +
                                " at or above the upper bound " + std::to_string(y1_hi));

    const Params& p = params;
    switch (family) {
        case FamilyKind::L0: {
            const double sum = 1.0 - 1.0 / (p.q * r0);
            return State{y1, sum - y1, 0.0, 1.0, 1.0};
        }
        case FamilyKind::L1: {
            const double sum = 1.0 - 1.0 / (p.q * p.q * r0);
            return State{y1, sum - y1, 1.0, 1.0, 1.0};
        }
        case FamilyKind::LS: {
            const double y2 = p.cD / (2.0 * p.r2) - (p.r1 / p.r2) * y1;
            const double zS =
                1.0 / (1.0 - p.q) - 1.0 / (p.q * (1.0 - p.q) * r0 * (1.0 - y1 - y2));
            return State{y1, y2, zS, 1.0, 1.0};
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<State> EquilibriumFamily::samples(int n) const {
    std::vector<State> out;
    out.reserve(n);
    for (int k = 1; k <= n; ++k)
        out.push_back(at(y1_lo + (y1_hi - y1_lo) * k / (n + 1)));
    return out;
}

std::vector<EquilibriumFamily> coexistence_families(const Params& p, CoexistenceOptions opt) {
    const double r0_1 = p.r0(1);
    const double r0_2 = p.r0(2);
    if (!opt.assume_equal_r0) {
        const double scale = std::max(std::abs(r0_1), std::abs(r0_2));
        if (std::abs(r0_1 - r0_2) > tol::r0_match_rel * scale) return {};
    }
    const double r0 = r0_1;

    std::vector<EquilibriumFamily> out;

    {
        EquilibriumFamily f;
        f.family = FamilyKind::L0;
        f.params = p;
        f.r0 = r0;
        const double sum = 1.0 - 1.0 / (p.q * r0);
        f.y1_lo = 0.0;
        f.y1_hi = std::max(sum, 0.0);
        f.existence.push_back({"infected mass positive (q R0 above one)", sum});
        f.status = status_from(f.existence);
        f.note = "endpoints coincide with the closures of p_10 and p_20";
        out.push_back(std::move(f));
    }
    {
        EquilibriumFamily f;
        f.family = FamilyKind::L1;
        f.params = p;
        f.r0 = r0;
        const double sum = 1.0 - 1.0 / (p.q * p.q * r0);
        f.y1_lo = 0.0;
        f.y1_hi = std::max(sum, 0.0);
        f.existence.push_back({"infected mass positive (q^2 R0 above one)", sum});
        f.status = status_from(f.existence);
        f.note = "endpoints coincide with the closures of p_11 and p_21";
        out.push_back(std::move(f));
    }
    {
        EquilibriumFamily f;
        f.family = FamilyKind::LS;
        f.params = p;
        f.r0 = r0;
        const double order = p.r2 - p.r1;
        f.existence.push_back({"risk weights ordered (r1 below r2)", order});
        if (order > 0.0) {
            const double a = p.cD / (2.0 * p.r2);  // y-sum intercept of the indifference line
            const double slope = 1.0 - p.r1 / p.r2;
            const double lo = std::max({0.0, (p.r2 / p.r1) * (a - 1.0),
                                        (1.0 - a - 1.0 / (p.q * p.q * r0)) / slope});
            const double hi = std::min({p.cD / (2.0 * p.r1), (1.0 - a) / slope,
                                        (1.0 - a - 1.0 / (p.q * r0)) / slope, 1.0});
            f.y1_lo = lo;
            f.y1_hi = hi;
            f.existence.push_back({"parameter range nonempty", hi - lo});
        } else {
            f.y1_lo = f.y1_hi = 0.0;
        }
        if (coordination_variant(p)) {
            f.existence.push_back({"standard susceptible payoff", -1.0});
            f.note = kInteriorDistancingNote;
        }
        f.status = status_from(f.existence);
        out.push_back(std::move(f));
    }
    return out;
}

State ls_point(const Params& p, double y1) {
    const auto families = coexistence_families(p);
    for (const auto& f : families)
        if (f.family == FamilyKind::LS) {
            if (f.status != ExistenceStatus::Exists)
                throw std::invalid_argument("ls_point: the partial-distancing curve does not exist for these parameters");
            return f.at(y1);
        }
    throw std::invalid_argument(
        "ls_point: coexistence requires equal base reproduction numbers");
}

double residual(const Params& p, const State& x) {
    const Vec5 d = rhs(p, x);
    double m = 0.0;
    for (double c : d) m = std::max(m, std::abs(c));
    return m;
}

std::vector<Equilibrium> all_isolated(const Params& p) {
    std::vector<Equilibrium> out = enumerate_dfes(p);
    for (int virus : {1, 2})
        for (auto& e : unilateral(p, virus)) out.push_back(std::move(e));
    return out;
}

std::optional<Equilibrium> find_equilibrium(const Params& p, const std::string& name) {
    std::string key = lower(name);
    if (key == "p_dfe0") key = "dfe_011";
    if (key == "p_dfe1") key = "dfe_111";
    for (auto& e : all_isolated(p)) {
        if (lower(e.name) == key) return e;
        if (key == "dfe_candidate" && e.stability_candidate) return e;
    }
    return std::nullopt;
}

bool on_coexistence_family(const Params& p, const State& x, double tol) {
    for (const auto& f : coexistence_families(p)) {
        if (f.status != ExistenceStatus::Exists) continue;
        if (x.y1 < f.y1_lo + tol || x.y1 > f.y1_hi - tol) continue;
        const State ref = f.at(x.y1);
        double dist = 0.0;
        const Vec5 a = x.to_array(), b = ref.to_array();
        for (int i = 0; i < kDim; ++i) dist = std::max(dist, std::abs(a[i] - b[i]));
        if (dist <= tol) return true;
    }
    return false;
}

}  // namespace bisis
