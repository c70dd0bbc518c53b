#include "bisis/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "bisis/model.hpp"

namespace bisis {

namespace {

Vec5 axpy(const Vec5& x, double a, const Vec5& d) {
    Vec5 out;
    for (int i = 0; i < kDim; ++i) out[i] = x[i] + a * d[i];
    return out;
}

/// Largest distance outside [0,1] (or above the simplex constraint) and the
/// coordinate responsible. Returns 0 when the state is admissible.
std::pair<double, int> gamma_violation(const Vec5& v) {
    double worst = 0.0;
    int coord = -1;
    for (int i = 0; i < kDim; ++i) {
        const double excess = std::max(-v[i], v[i] - 1.0);
        if (excess > worst) {
            worst = excess;
            coord = i;
        }
    }
    const double simplex = v[0] + v[1] - 1.0;
    if (simplex > worst) {
        worst = simplex;
        coord = v[0] > v[1] ? 0 : 1;
    }
    return {worst, coord};
}

State clamp_to_gamma(Vec5 v) {
    for (int i = 0; i < kDim; ++i) v[i] = std::clamp(v[i], 0.0, 1.0);
    const double excess = v[0] + v[1] - 1.0;
    if (excess > 0.0) {
        // Euclidean projection onto the simplex edge, then back into the corner
        // if one coordinate went negative.
        v[0] -= excess / 2.0;
        v[1] -= excess / 2.0;
        if (v[0] < 0.0) { v[1] += v[0]; v[0] = 0.0; }
        if (v[1] < 0.0) { v[0] += v[1]; v[1] = 0.0; }
    }
    return State::from_array(v);
}

}  // namespace

State step(const Params& p, const State& x, double h) {
    if (!(h > 0.0)) throw std::domain_error("step: step size must be positive");
    if (!in_gamma(x, tol::gamma_slack))
        throw std::domain_error("step: state outside the admissible set");

    const Vec5 x0 = x.to_array();
    const Vec5 k1 = rhs(p, x);
    const Vec5 k2 = rhs(p, State::from_array(axpy(x0, h / 2.0, k1)));
    const Vec5 k3 = rhs(p, State::from_array(axpy(x0, h / 2.0, k2)));
    const Vec5 k4 = rhs(p, State::from_array(axpy(x0, h, k3)));

    Vec5 out;
    for (int i = 0; i < kDim; ++i)
        out[i] = x0[i] + (h / 6.0) * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);

    const auto [violation, coord] = gamma_violation(out);
    if (violation > tol::clamp)
        throw integration_error("step: coordinate " + std::string(kCoordNames[coord]) +
                                    " left the admissible set by " + std::to_string(violation),
                                0.0, coord, out[coord]);
    if (violation > 0.0) return clamp_to_gamma(out);
    return State::from_array(out);
}

Trajectory simulate(const Params& p, const State& x0, double h, double t_end,
                    std::size_t record_every) {
    if (!(h > 0.0)) throw std::domain_error("simulate: step size must be positive");
    if (!(t_end > 0.0)) throw std::domain_error("simulate: horizon must be positive");
    if (record_every == 0) record_every = 1;
    if (!in_gamma(x0, tol::gamma_slack))
        throw std::domain_error("simulate: initial state outside the admissible set");

    const auto n_steps = static_cast<std::size_t>(std::llround(t_end / h));

    Trajectory tr;
    tr.params = p;
    tr.dt = h;
    tr.times.reserve(n_steps / record_every + 2);
    tr.states.reserve(n_steps / record_every + 2);

    State x = x0;
    tr.times.push_back(0.0);
    tr.states.push_back(x);
    for (std::size_t i = 1; i <= n_steps; ++i) {
        const double t = static_cast<double>(i) * h;
        try {
            x = step(p, x, h);
        } catch (const integration_error& e) {
            throw integration_error(std::string(e.what()) + " at t = " + std::to_string(t),
                                    t, e.coordinate, e.value);
        }
        if (i % record_every == 0 || i == n_steps) {
            tr.times.push_back(t);
            tr.states.push_back(x);
        }
    }
    return tr;
}

ConvergenceVerdict detect_convergence(const Trajectory& tr, double tol_conv) {
    if (tr.states.empty()) throw std::invalid_argument("detect_convergence: empty trajectory");

    ConvergenceVerdict v;
    v.limit = tr.final_state();

    const Vec5 d = rhs(tr.params, v.limit);
    for (double c : d) v.residual = std::max(v.residual, std::abs(c));

    const double t_tail = tr.t_end() * 0.9;
    const Vec5 fin = v.limit.to_array();
    for (std::size_t k = 0; k < tr.states.size(); ++k) {
        if (tr.times[k] < t_tail) continue;
        const Vec5 s = tr.states[k].to_array();
        for (int i = 0; i < kDim; ++i)
            v.drift = std::max(v.drift, std::abs(s[i] - fin[i]));
    }

    v.converged = v.residual < tol_conv && v.drift < tol_conv;
    if (v.converged) {
        v.t_converged = tr.t_end();
        for (std::size_t k = tr.states.size(); k-- > 0;) {
            const Vec5 s = tr.states[k].to_array();
            double dist = 0.0;
            for (int i = 0; i < kDim; ++i) dist = std::max(dist, std::abs(s[i] - fin[i]));
            if (dist < tol_conv)
                v.t_converged = tr.times[k];
            else
                break;
        }
    }
    return v;
}

const char* to_string(OscillationClass c) {
    switch (c) {
        case OscillationClass::None: return "None";
        case OscillationClass::Decaying: return "Decaying";
        case OscillationClass::Sustained: return "Sustained";
        case OscillationClass::Growing: return "Growing";
    }
    return "?";
}

OscillationVerdict detect_oscillation(const Trajectory& tr, int coordinate,
                                      const OscillationConfig& cfg) {
    if (coordinate < 0 || coordinate >= kDim)
        throw std::out_of_range("detect_oscillation: coordinate index out of range");

    OscillationVerdict v;
    const double t_start = tr.t_end() * cfg.transient_fraction;

    std::vector<double> extrema;
    int n_maxima = 0;
    double prev = 0.0, cur = 0.0;
    bool have2 = false, have1 = false;
    for (std::size_t k = 0; k < tr.states.size(); ++k) {
        if (tr.times[k] < t_start) continue;
        const double next = tr.states[k][coordinate];
        if (have2) {
            if (cur > prev && cur > next) {
                extrema.push_back(cur);
                ++n_maxima;
            } else if (cur < prev && cur < next) {
                extrema.push_back(cur);
            }
        }
        prev = cur;
        cur = next;
        have2 = have1;
        have1 = true;
    }

    for (std::size_t k = 0; k + 1 < extrema.size(); ++k)
        v.peak_amplitudes.push_back(std::abs(extrema[k + 1] - extrema[k]));

    if (n_maxima < cfg.min_maxima || v.peak_amplitudes.size() < 2) {
        v.classification = OscillationClass::None;
        return v;
    }

    const auto& a = v.peak_amplitudes;
    bool monotone_growth = true;
    for (std::size_t k = 0; k + 1 < a.size(); ++k)
        monotone_growth = monotone_growth && a[k + 1] > a[k] * (1.0 + cfg.rel_growth_tol);

    if (monotone_growth)
        v.classification = OscillationClass::Growing;
    else if (a.back() >= cfg.sustained_ratio * a.front())
        v.classification = OscillationClass::Sustained;
    else
        v.classification = OscillationClass::Decaying;
    return v;
}

void write_trajectory_csv(const Trajectory& tr, std::ostream& os) {
    os << "t,y1,y2,zS,z1,z2\n";
    char buf[64];
    for (std::size_t k = 0; k < tr.states.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g", tr.times[k]);
        os << buf;
        const Vec5 s = tr.states[k].to_array();
        for (double c : s) {
            std::snprintf(buf, sizeof buf, "%.17g", c);
            os << ',' << buf;
        }
        os << '\n';
    }
}

void write_trajectory_csv_file(const Trajectory& tr, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_trajectory_csv(tr, out);
}

}  // namespace bisis
