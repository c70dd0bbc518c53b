#include <doctest.h>

#include <cmath>

#include "bisis/model.hpp"
#include "bisis/sampling.hpp"
#include "fixtures.hpp"

using namespace bisis;
namespace fx = bisis::fixtures;

TEST_SUITE_BEGIN("model");

TEST_CASE("q_factor basic values") {
    CHECK(q_factor(0.0, 0.5) == 1.0);
    CHECK(q_factor(1.0, 0.5) == 0.5);
    CHECK(q_factor(0.5, 0.5) == 0.75);
    CHECK_THROWS_AS(q_factor(-0.1, 0.5), std::domain_error);
    CHECK_THROWS_AS(q_factor(1.1, 0.5), std::domain_error);
    CHECK_THROWS_AS(q_factor(0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(q_factor(0.5, 1.0), std::domain_error);
}

TEST_CASE("q_factor stays in [q, 1]") {
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        const double q = rng.uniform(0.01, 0.99);
        const double z = rng.uniform();
        const double f = q_factor(z, q);
        CHECK(f >= q);
        CHECK(f <= 1.0);
    }
}

TEST_CASE("in_gamma membership") {
    CHECK(in_gamma(State{0, 0, 0, 1, 1}, 0.0));
    CHECK_FALSE(in_gamma(State{0.6, 0.6, 0, 0, 0}, 1e-9));
    CHECK(in_gamma(State{-1e-12, 0, 0, 0, 0}, 1e-9));
    CHECK_FALSE(in_gamma(State{0, 0, 1.1, 0, 0}, 1e-9));
}

TEST_CASE("vector field values by hand substitution") {
    // s = 0 kills the infection gain terms; each line is a plain product.
    const Vec5 d = rhs(fx::fig1(), State{0.4, 0.6, 0.1, 0.1, 0.2});
    CHECK(d[0] == doctest::Approx(-0.16).epsilon(1e-14));
    CHECK(d[1] == doctest::Approx(-0.24).epsilon(1e-14));
    CHECK(d[2] == doctest::Approx(0.45).epsilon(1e-14));
    CHECK(d[3] == doctest::Approx(0.72).epsilon(1e-14));
    CHECK(d[4] == doctest::Approx(1.28).epsilon(1e-14));
}

TEST_CASE("vertex of the state space is a rest point of every model") {
    Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        Params p = sample_params(rng);
        if (i % 2) p.variant = Variant::Coordination;
        const Vec5 d = rhs(p, State{0, 0, 0, 1, 1});
        for (double c : d) CHECK(c == 0.0);
    }
}

TEST_CASE("endemic no-distancing point is a rest point") {
    const Vec5 d = rhs(fx::fig2(), State{5.0 / 9.0, 0, 0, 1, 1});
    for (double c : d) CHECK(std::abs(c) < 1e-16);
}

TEST_CASE("rhs rejects states outside the admissible set") {
    CHECK_THROWS_AS(rhs(fx::fig1(), State{0.7, 0.7, 0, 0, 0}), std::domain_error);
}

TEST_CASE("boundary lines vanish exactly") {
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        const Params p = sample_params(rng);
        State x = sample_interior(rng);
        x.y1 = 0;
        CHECK(rhs(p, x)[0] == 0.0);
        x.y2 = 0;
        CHECK(rhs(p, x)[1] == 0.0);
        x.zS = i % 2 ? 0.0 : 1.0;
        CHECK(rhs(p, x)[2] == 0.0);
        x.z1 = i % 2 ? 1.0 : 0.0;
        CHECK(rhs(p, x)[3] == 0.0);
        x.z2 = i % 2 ? 0.0 : 1.0;
        CHECK(rhs(p, x)[4] == 0.0);
    }
}

TEST_CASE("full infection decays at the recovery rate") {
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        const Params p = sample_params(rng);
        State x = sample_interior(rng);
        x.y2 = 1.0 - x.y1;  // y1 + y2 = 1
        const Vec5 d = rhs(p, x);
        CHECK(d[0] == doctest::Approx(-p.delta1 * x.y1).epsilon(1e-12));
        CHECK(d[1] == doctest::Approx(-p.delta2 * x.y2).epsilon(1e-12));
    }
}

TEST_CASE("standard and coordination variants share all non-zS lines") {
    Rng rng(9);
    for (int i = 0; i < 100; ++i) {
        Params p = sample_params(rng);
        const State x = sample_interior(rng);
        p.variant = Variant::Standard;
        const Vec5 a = rhs(p, x);
        p.variant = Variant::Coordination;
        const Vec5 b = rhs(p, x);
        CHECK(a[0] == b[0]);
        CHECK(a[1] == b[1]);
        CHECK(a[3] == b[3]);
        CHECK(a[4] == b[4]);
        // Coordination shifts the zS payoff gap by zS - 1.
        CHECK(b[2] - a[2] ==
              doctest::Approx(x.zS * (1 - x.zS) * (x.zS - 1.0)).epsilon(1e-12));
    }
}

TEST_CASE("payoff values") {
    SUBCASE("disease-free") {
        Params p = fx::fig1();  // cD = 1
        const PayoffSet po = payoffs(p, State{0, 0, 0.3, 0.5, 0.5});
        CHECK(po.sD == -1.0);
        CHECK(po.sN == 0.0);
        CHECK(po.i1D == -1.0);
        CHECK(po.i1N == -9.0);
    }
    SUBCASE("gap equals the replicator drive") {
        const PayoffSet po = payoffs(fx::fig1(), State{0.4, 0.6, 0.1, 0.1, 0.2});
        CHECK(po.sD - po.sN == doctest::Approx(5.0).epsilon(1e-14));
    }
    SUBCASE("indifference locus") {
        // 2 r.y = cD makes distancing and not distancing equally attractive.
        const Params p = fx::fig1();  // r = (3,3), cD = 1
        const PayoffSet po = payoffs(p, State{1.0 / 12.0, 1.0 / 12.0, 0.5, 0.5, 0.5});
        CHECK(po.sD == doctest::Approx(po.sN).epsilon(1e-14));
    }
    SUBCASE("coordination adds the conformity term to not distancing") {
        Params p = fx::fig8();
        const State x{0.2, 0.1, 0.6, 0.1, 0.2};
        const PayoffSet po = payoffs(p, x);
        const double risk = p.r1 * x.y1 + p.r2 * x.y2;
        CHECK(po.sN == doctest::Approx(-risk + (1 - x.zS)).epsilon(1e-14));
    }
}

TEST_CASE("reproduction numbers") {
    SUBCASE("no distancing leaves them at the base values") {
        const auto rn = reproduction_numbers(fx::fig2(), State{0.3, 0.2, 0, 0, 0});
        CHECK(rn.eff1 == rn.base1);
        CHECK(rn.eff2 == rn.base2);
        CHECK(rn.base1 == doctest::Approx(4.5));
    }
    SUBCASE("published equilibrium values") {
        const auto rn2 = reproduction_numbers(fx::fig2(), State{5.0 / 9.0, 0, 0, 1, 1});
        CHECK(rn2.eff1 == doctest::Approx(9.0 / 4.0).epsilon(1e-14));
        CHECK(rn2.eff2 == doctest::Approx(3.0 / 2.0).epsilon(1e-14));
        const auto rn3 = reproduction_numbers(fx::fig3(), State{4.0 / 9.0, 0, 1, 1, 1});
        CHECK(rn3.eff1 == doctest::Approx(9.0 / 5.0).epsilon(1e-14));
        CHECK(rn3.eff2 == doctest::Approx(9.0 / 200.0).epsilon(1e-14));
    }
    SUBCASE("bounds") {
        Rng rng(13);
        for (int i = 0; i < 100; ++i) {
            const Params p = sample_params(rng);
            const State x = sample_interior(rng);
            const auto rn = reproduction_numbers(p, x);
            CHECK(rn.eff1 >= p.q * p.q * rn.base1 - 1e-15);
            CHECK(rn.eff1 <= rn.base1 + 1e-15);
            CHECK(rn.eff2 >= p.q * p.q * rn.base2 - 1e-15);
            CHECK(rn.eff2 <= rn.base2 + 1e-15);
        }
    }
}

TEST_CASE("assumption report") {
    SUBCASE("published DFE study") {
        const AssumptionReport rep = validate(fx::fig1());
        CHECK(rep.rates_positive);
        CHECK(rep.q_in_open_unit);
        CHECK(rep.pro_social());
        CHECK(rep.generic_costs);
        CHECK_FALSE(rep.risk_ordered);  // r1 == r2 there
        CHECK(rep.hard_ok());
    }
    SUBCASE("q at the boundary fails") {
        Params p = fx::fig1();
        p.q = 1.0;
        CHECK_FALSE(validate(p).q_in_open_unit);
    }
    SUBCASE("equal costs are non-generic") {
        Params p = fx::fig1();
        p.c1 = p.cD;
        const AssumptionReport rep = validate(p);
        CHECK_FALSE(rep.generic_costs);
        CHECK(rep.genericity_margin == 0.0);
    }
    SUBCASE("non-finite parameters are a hard error") {
        Params p = fx::fig1();
        p.beta2 = std::nan("");
        CHECK_THROWS_AS(validate(p), std::invalid_argument);
    }
}

TEST_CASE("params JSON round trip and strictness") {
    const Params p = fx::fig3();
    const Params back = params_from_json(params_to_json(p));
    CHECK(back.beta1 == p.beta1);
    CHECK(back.delta2 == p.delta2);
    CHECK(back.cD == p.cD);
    CHECK(back.q == p.q);
    CHECK(back.variant == p.variant);

    CHECK_THROWS_AS(params_from_json("{\"beta1\": 1}"), std::invalid_argument);
    CHECK_THROWS_AS(params_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(
        params_from_json(
            "{\"beta1\":1,\"beta2\":1,\"delta1\":1,\"delta2\":1,\"r1\":1,\"r2\":2,"
            "\"c1\":2,\"c2\":2,\"cD\":1,\"q\":0.5,\"extra\":0}"),
        std::invalid_argument);

    Params coord = params_from_json(
        "{\"beta1\":1,\"beta2\":1,\"delta1\":1,\"delta2\":1,\"r1\":1,\"r2\":2,"
        "\"c1\":2,\"c2\":2,\"cD\":1,\"q\":0.5,\"variant\":\"coordination\"}");
    CHECK(coord.variant == Variant::Coordination);
}

TEST_SUITE_END();
