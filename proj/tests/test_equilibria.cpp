#include <doctest.h>

#include <cmath>
#include <set>

#include "bisis/equilibria.hpp"
#include "bisis/model.hpp"
#include "bisis/sampling.hpp"
#include "fixtures.hpp"

using namespace bisis;
namespace fx = bisis::fixtures;

namespace {

const Equilibrium& by_name(const std::vector<Equilibrium>& v, const std::string& name) {
    for (const auto& e : v)
        if (e.name == name) return e;
    REQUIRE(false);
    return v.front();
}

const EquilibriumFamily& family(const std::vector<EquilibriumFamily>& v, FamilyKind k) {
    for (const auto& f : v)
        if (f.family == k) return f;
    REQUIRE(false);
    return v.front();
}

}  // namespace

TEST_SUITE_BEGIN("equilibria");

TEST_CASE("eight distinct disease-free points, one candidate") {
    const auto dfes = enumerate_dfes(fx::fig1());
    REQUIRE(dfes.size() == 8);
    std::set<std::string> names;
    int candidates = 0;
    for (const auto& e : dfes) {
        names.insert(e.name);
        CHECK(e.point.y1 == 0.0);
        CHECK(e.point.y2 == 0.0);
        CHECK(residual(fx::fig1(), e.point) == 0.0);
        candidates += e.stability_candidate;
        CHECK(in_gamma(e.point, 0.0));
    }
    CHECK(names.size() == 8);
    CHECK(candidates == 1);
}

TEST_CASE("candidate follows the cost ordering") {
    SUBCASE("both costs above cD") {
        for (const auto& e : enumerate_dfes(fx::fig1()))
            if (e.stability_candidate) {
                CHECK(e.point.zS == 0.0);
                CHECK(e.point.z1 == 1.0);
                CHECK(e.point.z2 == 1.0);
            }
    }
    SUBCASE("split costs") {
        Params p = fx::fig1();
        p.c1 = 0.5;  // below cD = 1
        for (const auto& e : enumerate_dfes(p))
            if (e.stability_candidate) {
                CHECK(e.point.z1 == 0.0);
                CHECK(e.point.z2 == 1.0);
            }
    }
}

TEST_CASE("non-generic costs are rejected") {
    Params p = fx::fig1();
    p.c2 = p.cD;
    CHECK_THROWS_AS(enumerate_dfes(p), std::invalid_argument);
}

TEST_CASE("unilateral points of the published studies") {
    SUBCASE("no distancing") {
        const auto v = unilateral(fx::fig2(), 1);
        const auto& e = by_name(v, "p_10");
        CHECK(e.status == ExistenceStatus::Exists);
        CHECK(e.point.y1 == doctest::Approx(5.0 / 9.0).epsilon(1e-14));
        CHECK(e.point.y2 == 0.0);
        CHECK(e.point.zS == 0.0);
        CHECK(e.point.z1 == 1.0);
        CHECK(e.point.z2 == 1.0);
        CHECK(residual(fx::fig2(), e.point) < 1e-12);
    }
    SUBCASE("full distancing") {
        const auto v = unilateral(fx::fig3(), 1);
        const auto& e = by_name(v, "p_11");
        CHECK(e.status == ExistenceStatus::Exists);
        CHECK(e.point.y1 == doctest::Approx(4.0 / 9.0).epsilon(1e-14));
        CHECK(e.point.zS == 1.0);
        CHECK(residual(fx::fig3(), e.point) < 1e-12);
    }
    SUBCASE("partial distancing") {
        const auto v = unilateral(fx::fig4(), 1);
        const auto& e = by_name(v, "p_1S");
        CHECK(e.status == ExistenceStatus::Exists);
        CHECK(e.point.y1 == doctest::Approx(0.25).epsilon(1e-14));
        CHECK(e.point.zS == doctest::Approx(5.0 / 42.0).epsilon(1e-13));
        CHECK(residual(fx::fig4(), e.point) < 1e-12);
    }
}

TEST_CASE("degenerate existence margin at an exact threshold") {
    // fig1 has q beta1/delta1 = 1 exactly, so p_10's endemic level is 0.
    const auto v = unilateral(fx::fig1(), 1);
    CHECK(by_name(v, "p_10").status == ExistenceStatus::Degenerate);
}

TEST_CASE("absent points are reported, not thrown") {
    const auto v = unilateral(fx::fig2(), 2);  // q^2 R0_2 = 0.75 < 1
    CHECK(by_name(v, "p_21").status == ExistenceStatus::Absent);
    // and p_20 exists: q R0_2 = 1.5
    CHECK(by_name(v, "p_20").status == ExistenceStatus::Exists);
}

TEST_CASE("full distancing holds less infection than none") {
    Rng rng(17);
    int both = 0;
    for (int i = 0; i < 200; ++i) {
        const Params p = sample_params(rng);
        const auto v = unilateral(p, 1);
        const auto& p10 = by_name(v, "p_10");
        const auto& p11 = by_name(v, "p_11");
        if (p10.status == ExistenceStatus::Exists && p11.status == ExistenceStatus::Exists) {
            ++both;
            CHECK(p11.point.y1 < p10.point.y1);
        }
    }
    CHECK(both > 5);  // the draw ranges make this common
}

TEST_CASE("coexistence families of the published studies") {
    SUBCASE("no-distancing line") {
        const auto fams = coexistence_families(fx::fig5());
        REQUIRE(fams.size() == 3);
        const auto& L0 = family(fams, FamilyKind::L0);
        CHECK(L0.status == ExistenceStatus::Exists);
        CHECK(L0.y1_hi == doctest::Approx(0.375).epsilon(1e-14));
        for (const auto& st : L0.samples(10)) {
            CHECK(st.y1 + st.y2 == doctest::Approx(0.375).epsilon(1e-14));
            CHECK(st.zS == 0.0);
            CHECK(residual(fx::fig5(), st) < 1e-12);
            CHECK(in_gamma(st, 0.0));
        }
        // cD = 2 leaves no room for the partial-distancing curve.
        CHECK(family(fams, FamilyKind::LS).status == ExistenceStatus::Absent);
    }
    SUBCASE("full-distancing line") {
        const auto fams = coexistence_families(fx::fig6());
        const auto& L1 = family(fams, FamilyKind::L1);
        CHECK(L1.status == ExistenceStatus::Exists);
        CHECK(L1.y1_hi == doctest::Approx(0.21875).epsilon(1e-14));
        for (const auto& st : L1.samples(10)) {
            CHECK(st.y1 + st.y2 == doctest::Approx(0.21875).epsilon(1e-14));
            CHECK(st.zS == 1.0);
            CHECK(residual(fx::fig6(), st) < 1e-12);
        }
    }
    SUBCASE("unequal reproduction numbers leave no coexistence") {
        CHECK(coexistence_families(fx::fig2()).empty());
    }
    SUBCASE("assume-equal mode overrides the match check") {
        Params p = fx::fig5();
        p.beta2 = 0.4 + 1e-9;  // relative mismatch far above the tolerance
        CHECK(coexistence_families(p).empty());
        CoexistenceOptions opt;
        opt.assume_equal_r0 = true;
        CHECK_FALSE(coexistence_families(p, opt).empty());
    }
}

TEST_CASE("translating along a line keeps it an equilibrium") {
    for (const Params& p : {fx::fig5(), fx::fig6()}) {
        for (const auto& f : coexistence_families(p)) {
            if (f.status != ExistenceStatus::Exists || f.family == FamilyKind::LS) continue;
            const double eps = (f.y1_hi - f.y1_lo) / 7.0;
            const State base = f.at((f.y1_lo + f.y1_hi) / 2.0);
            const State moved{base.y1 + eps, base.y2 - eps, base.zS, base.z1, base.z2};
            CHECK(residual(p, moved) < 1e-12);
        }
    }
}

TEST_CASE("partial-distancing curve") {
    // Searched parameters admitting the curve (equal R0 = 2, ordered risks).
    const Params p = fx::make(0.5, 0.5, 0.25, 0.25, 1.0, 2.0, 1.5, 2.0, 1.0, 0.8);
    const auto fams = coexistence_families(p);
    const auto& LS = family(fams, FamilyKind::LS);
    REQUIRE(LS.status == ExistenceStatus::Exists);

    SUBCASE("interior points are exact equilibria with pinned payoff") {
        for (const auto& st : LS.samples(10)) {
            CHECK(residual(p, st) < 1e-12);
            CHECK(in_gamma(st, 0.0));
            CHECK(2.0 * (p.r1 * st.y1 + p.r2 * st.y2) - p.cD ==
                  doctest::Approx(0.0).epsilon(1e-14));
            CHECK(st.zS > 0.0);
            CHECK(st.zS < 1.0);
        }
        const State mid = ls_point(p, (LS.y1_lo + LS.y1_hi) / 2.0);
        CHECK(residual(p, mid) < 1e-12);
    }
    SUBCASE("bounds are attained at the range limits") {
        const double tiny = 1e-12;
        const State lo = LS.at(LS.y1_lo + tiny);
        const State hi = LS.at(LS.y1_hi - tiny);
        // Near each end some coordinate sits at its boundary of validity.
        const double lo_slack = std::min({lo.y1, lo.y2, 1.0 - lo.y2, lo.zS, 1.0 - lo.zS});
        const double hi_slack = std::min({hi.y1, hi.y2, 1.0 - hi.y2, hi.zS, 1.0 - hi.zS});
        CHECK(lo_slack < 1e-9);
        CHECK(hi_slack < 1e-9);
    }
    SUBCASE("out-of-range parameter names the violated bound") {
        CHECK_THROWS_WITH_AS(ls_point(p, LS.y1_hi + 0.1),
                             doctest::Contains("upper bound"), std::out_of_range);
        CHECK_THROWS_WITH_AS(ls_point(p, LS.y1_lo - 0.1),
                             doctest::Contains("lower bound"), std::out_of_range);
    }
    SUBCASE("curve requires equal reproduction numbers") {
        CHECK_THROWS_AS(ls_point(fx::fig2(), 0.1), std::invalid_argument);
    }
}

TEST_CASE("residual is positive off equilibrium") {
    CHECK(residual(fx::fig2(), State{0.3, 0.3, 0.5, 0.5, 0.5}) > 0.0);
}

TEST_CASE("name lookup") {
    const auto p10 = find_equilibrium(fx::fig2(), "p_10");
    REQUIRE(p10.has_value());
    CHECK(p10->point.y1 == doctest::Approx(5.0 / 9.0));
    const auto cand = find_equilibrium(fx::fig1(), "dfe_candidate");
    REQUIRE(cand.has_value());
    CHECK(cand->point.z1 == 1.0);
    CHECK(find_equilibrium(fx::fig1(), "p_dfe0")->point.zS == 0.0);
    CHECK(find_equilibrium(fx::fig1(), "p_DFE1")->point.zS == 1.0);
    CHECK_FALSE(find_equilibrium(fx::fig1(), "nonsense").has_value());
}

TEST_CASE("family membership query") {
    const auto fams = coexistence_families(fx::fig5());
    const auto& L0 = family(fams, FamilyKind::L0);
    const State on = L0.at(0.2);
    CHECK(on_coexistence_family(fx::fig5(), on));
    CHECK_FALSE(on_coexistence_family(fx::fig5(), State{0.2, 0.3, 0.5, 1, 1}));
    CHECK_FALSE(on_coexistence_family(fx::fig2(), State{0.2, 0.17, 0, 1, 1}));
}

TEST_SUITE_END();
