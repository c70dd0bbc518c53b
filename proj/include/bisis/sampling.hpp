#ifndef BISIS_SAMPLING_HPP
#define BISIS_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "bisis/types.hpp"

namespace bisis {

/// Deterministic uniform source. The engine sequence is pinned by the
/// standard; doubles are built from the raw bits so results do not depend
/// on the library's distribution implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Uniform draw from the interior of the state space, kept at least margin
/// away from every boundary. The infected pair is drawn by rejection on the
/// shrunken simplex.
State sample_interior(Rng& rng, double margin = 1e-3);

/// Bounds for randomized parameter draws. Keeps every hard assumption
/// satisfied and redraws until the costs are generic by at least
/// generic_margin.
struct ParamsRange {
    double rate_lo = 0.2, rate_hi = 2.0;
    double q_lo = 0.1, q_hi = 0.9;
    double risk_lo = 0.1, risk_hi = 2.0;
    double cost_lo = 0.1, cost_hi = 2.5;
    double generic_margin = 1e-3;
    /// Force beta2/delta2 == beta1/delta1 (coexistence families possible).
    bool equal_r0 = false;
};

Params sample_params(Rng& rng, const ParamsRange& range = {});

std::vector<State> sample_interior_batch(std::uint64_t seed, int n, double margin = 1e-3);

}  // namespace bisis

#endif  // BISIS_SAMPLING_HPP
