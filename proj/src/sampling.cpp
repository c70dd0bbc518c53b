#include "bisis/sampling.hpp"

#include <cmath>

namespace bisis {

State sample_interior(Rng& rng, double margin) {
    State x;
    for (;;) {
        x.y1 = rng.uniform(margin, 1.0 - margin);
        x.y2 = rng.uniform(margin, 1.0 - margin);
        if (x.y1 + x.y2 <= 1.0 - margin) break;
    }
    x.zS = rng.uniform(margin, 1.0 - margin);
    x.z1 = rng.uniform(margin, 1.0 - margin);
    x.z2 = rng.uniform(margin, 1.0 - margin);
    return x;
}

Params sample_params(Rng& rng, const ParamsRange& range) {
    Params p;
    p.beta1 = rng.uniform(range.rate_lo, range.rate_hi);
    p.beta2 = rng.uniform(range.rate_lo, range.rate_hi);
    p.delta1 = rng.uniform(range.rate_lo, range.rate_hi);
    p.delta2 = range.equal_r0 ? p.beta2 * p.delta1 / p.beta1
                              : rng.uniform(range.rate_lo, range.rate_hi);
    p.q = rng.uniform(range.q_lo, range.q_hi);
    p.r1 = rng.uniform(range.risk_lo, range.risk_hi);
    p.r2 = rng.uniform(range.risk_lo, range.risk_hi);
    p.cD = rng.uniform(range.cost_lo, range.cost_hi);
    auto generic_cost = [&] {
        double c;
        do {
            c = rng.uniform(range.cost_lo, range.cost_hi);
        } while (std::abs(c - p.cD) <= range.generic_margin);
        return c;
    };
    p.c1 = generic_cost();
    p.c2 = generic_cost();
    return p;
}

std::vector<State> sample_interior_batch(std::uint64_t seed, int n, double margin) {
    Rng rng(seed);
    std::vector<State> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(sample_interior(rng, margin));
    return out;
}

}  // namespace bisis
