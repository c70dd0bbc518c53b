#include <doctest.h>

#include <cmath>
#include <sstream>

#include "bisis/equilibria.hpp"
#include "bisis/integrator.hpp"
#include "bisis/model.hpp"
#include "bisis/sampling.hpp"
#include "fixtures.hpp"

using namespace bisis;
namespace fx = bisis::fixtures;

namespace {

double max_norm(const State& a, const State& b) {
    double m = 0;
    for (int i = 0; i < kDim; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST_SUITE_BEGIN("integrator");

TEST_CASE("a rest point stays put") {
    const State p10{5.0 / 9.0, 0, 0, 1, 1};
    const State next = step(fx::fig2(), p10, 0.37);
    CHECK(max_norm(next, p10) == 0.0);
}

TEST_CASE("boundary distancing coordinates are exact fixed points") {
    State x{0.2, 0.3, 0.4, 1.0, 0.0};
    const State next = step(fx::fig2(), x, 1e-2);
    CHECK(next.z1 == 1.0);
    CHECK(next.z2 == 0.0);
}

TEST_CASE("one step agrees with two half steps to local order") {
    const State x0{0.4, 0.6, 0.1, 0.1, 0.2};
    const Params p = fx::fig1();

    SUBCASE("tiny step: difference is at roundoff level") {
        const State full = step(p, x0, 1e-4);
        const State half = step(p, step(p, x0, 5e-5), 5e-5);
        CHECK(max_norm(full, half) < 1e-13);
    }
    SUBCASE("coarse step: difference scales like h^5") {
        const State full = step(p, x0, 1e-2);
        const State half = step(p, step(p, x0, 5e-3), 5e-3);
        CHECK(max_norm(full, half) < 100.0 * std::pow(1e-2, 5));
    }
}

TEST_CASE("step rejects bad input") {
    CHECK_THROWS_AS(step(fx::fig1(), State{0.4, 0.6, 0.1, 0.1, 0.2}, 0.0), std::domain_error);
    CHECK_THROWS_AS(step(fx::fig1(), State{0.9, 0.9, 0, 0, 0}, 1e-3), std::domain_error);
}

TEST_CASE("simulate records uniformly plus final state") {
    const Trajectory tr = simulate(fx::fig2(), State{0.1, 0.2, 0.3, 0.4, 0.5}, 1e-3, 0.055, 10);
    REQUIRE(tr.times.size() >= 3);
    CHECK(tr.times.front() == 0.0);
    for (std::size_t k = 0; k + 2 < tr.times.size(); ++k)
        CHECK(tr.times[k + 1] - tr.times[k] == doctest::Approx(1e-2));
    // 55 steps: the last record falls off the uniform grid but is kept.
    CHECK(tr.times.back() == doctest::Approx(0.055).epsilon(1e-12));
    CHECK(tr.times[tr.times.size() - 2] == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(tr.dt == 1e-3);
}

TEST_CASE("simulate from a rest point is constant") {
    const State dfe{0, 0, 0, 1, 1};
    const Trajectory tr = simulate(fx::fig1(), dfe, 1e-2, 5.0, 10);
    for (const auto& st : tr.states) CHECK(max_norm(st, dfe) == 0.0);

    const ConvergenceVerdict cv = detect_convergence(tr);
    CHECK(cv.converged);
    CHECK(cv.t_converged == 0.0);
    CHECK(cv.residual == 0.0);
}

TEST_CASE("endemic convergence of the published study") {
    // Coarser step than the archival setting; the verdict is unchanged.
    const Trajectory tr =
        simulate(fx::fig2(), State{0.1, 0.8, 0.9, 0.2, 0.3}, 1e-3, 300.0, 1000);
    const State p10{5.0 / 9.0, 0, 0, 1, 1};
    CHECK(max_norm(tr.final_state(), p10) < 1e-3);

    const ConvergenceVerdict cv = detect_convergence(tr, 1e-6);
    CHECK(cv.converged);
    CHECK(max_norm(cv.limit, p10) < 1e-3);
    CHECK(cv.t_converged > 0.0);
}

TEST_CASE("halving the step leaves a convergent run unchanged to 1e-6") {
    const State x0{0.1, 0.8, 0.9, 0.2, 0.3};
    const Trajectory a = simulate(fx::fig2(), x0, 1e-3, 100.0, 1000);
    const Trajectory b = simulate(fx::fig2(), x0, 5e-4, 100.0, 2000);
    CHECK(max_norm(a.final_state(), b.final_state()) < 1e-6);
}

TEST_CASE("coexistence-line run lands on the line") {
    const Trajectory tr =
        simulate(fx::fig5(), State{0.1, 0.8, 0.9, 0.9, 0.9}, 1e-3, 300.0, 1000);
    const State fin = tr.final_state();
    CHECK(std::abs(fin.y1 + fin.y2 - 0.375) < 1e-3);
    CHECK(fin.zS < 1e-3);
}

TEST_CASE("positive invariance of random interior starts") {
    Rng rng(21);
    for (int rep = 0; rep < 10; ++rep) {
        const Params p = sample_params(rng);
        const State x0 = sample_interior(rng);
        const Trajectory tr = simulate(p, x0, 1e-3, 20.0, 100);
        for (const auto& st : tr.states) CHECK(in_gamma(st, 1e-9));
    }
}

TEST_CASE("infected distancing moves one way only") {
    Rng rng(33);
    for (int rep = 0; rep < 10; ++rep) {
        const Params p = sample_params(rng);
        const State x0 = sample_interior(rng);
        const Trajectory tr = simulate(p, x0, 1e-3, 30.0, 50);
        const double dir1 = p.c1 > p.cD ? 1.0 : -1.0;
        const double dir2 = p.c2 > p.cD ? 1.0 : -1.0;
        for (std::size_t k = 0; k + 1 < tr.states.size(); ++k) {
            CHECK(dir1 * (tr.states[k + 1].z1 - tr.states[k].z1) >= 0.0);
            CHECK(dir2 * (tr.states[k + 1].z2 - tr.states[k].z2) >= 0.0);
        }
    }
}

TEST_CASE("oscillation classification on synthetic trajectories") {
    auto synth = [](auto f) {
        Trajectory tr;
        tr.params = fx::fig1();
        tr.dt = 0.01;
        for (int k = 0; k <= 4000; ++k) {
            const double t = k * 0.01;
            tr.times.push_back(t);
            State st;
            st.y1 = f(t);
            tr.states.push_back(st);
        }
        return tr;
    };

    SUBCASE("constant amplitude is sustained") {
        const auto tr = synth([](double t) { return 0.5 + 0.2 * std::sin(t); });
        CHECK(detect_oscillation(tr, 0).classification == OscillationClass::Sustained);
    }
    SUBCASE("decaying envelope") {
        const auto tr =
            synth([](double t) { return 0.5 + 0.3 * std::exp(-0.1 * t) * std::sin(t); });
        CHECK(detect_oscillation(tr, 0).classification == OscillationClass::Decaying);
    }
    SUBCASE("growing envelope") {
        const auto tr =
            synth([](double t) { return 0.5 + 0.01 * std::exp(0.05 * t) * std::sin(t); });
        CHECK(detect_oscillation(tr, 0).classification == OscillationClass::Growing);
    }
    SUBCASE("monotone signal has no interior maxima") {
        const auto tr = synth([](double t) { return 1.0 - std::exp(-t); });
        CHECK(detect_oscillation(tr, 0).classification == OscillationClass::None);
    }
    SUBCASE("too few swings") {
        const auto tr = synth([](double t) { return 0.5 + 0.2 * std::sin(t / 12.0); });
        CHECK(detect_oscillation(tr, 0).classification == OscillationClass::None);
    }
}

TEST_CASE("trajectory CSV format") {
    const Trajectory tr = simulate(fx::fig2(), State{0.1, 0.8, 0.9, 0.2, 0.3}, 1e-3, 0.01, 5);
    std::ostringstream os;
    write_trajectory_csv(tr, os);
    const std::string text = os.str();
    CHECK(text.substr(0, 20) == "t,y1,y2,zS,z1,z2\n0,0");
    CHECK(text.find("\r") == std::string::npos);
    CHECK(text.find("0.10000000000000001") != std::string::npos);  // 17 significant digits

    // Full precision: values survive a parse round trip bit-exactly.
    std::istringstream is(text);
    std::string line;
    std::getline(is, line);  // header
    std::getline(is, line);
    std::getline(is, line);  // first recorded step
    std::stringstream fields(line);
    std::string cell;
    std::getline(fields, cell, ',');
    std::getline(fields, cell, ',');
    CHECK(std::stod(cell) == tr.states[1].y1);
}

TEST_SUITE_END();
