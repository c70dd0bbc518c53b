#ifndef BISIS_STABILITY_HPP
#define BISIS_STABILITY_HPP

#include <array>
#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bisis/equilibria.hpp"
#include "bisis/types.hpp"

namespace bisis {

enum class Exec { Serial, Parallel };

using Spectrum = std::array<std::complex<double>, 5>;

/// Analytic Jacobian of the standard system, row/column order
/// (y1, y2, zS, z1, z2). Throws std::invalid_argument for the coordination
/// variant, whose zS row has no closed form here; use jacobian_fd instead.
Mat5 jacobian(const Params& p, const State& x);

/// Central finite differences of the vector field; works for both variants.
Mat5 jacobian_fd(const Params& p, const State& x, double fd_step = 1e-6);

/// All five eigenvalues via a dense solver, sorted by (real, imag);
/// conjugate pairs come out exactly paired. Throws std::runtime_error when
/// the iteration fails.
Spectrum eigenvalues(const Mat5& m);

/// Closed-form spectrum at an enumerated equilibrium, exploiting the
/// (block-)triangular Jacobian structure there. Returns nullopt when the
/// point class has no closed form (coordination variant).
std::optional<Spectrum> eigenvalues_closed_form(const Params& p, const Equilibrium& e);
std::optional<Spectrum> eigenvalues_closed_form(const Params& p, const EquilibriumFamily& f,
                                                double y1);

double spectral_abscissa(const Spectrum& s);

enum class NumericVerdict { ExpStable, Unstable, CenterLine, Degenerate };

const char* to_string(NumericVerdict v);

struct StabilityReport {
    Spectrum eigenvalues{};
    double spectral_abscissa = 0.0;
    NumericVerdict numeric_verdict = NumericVerdict::Degenerate;
};

/// Eigenvalue-based verdict at an equilibrium point. Requires the residual
/// there to be below tol::equilibrium_residual, else throws
/// std::invalid_argument. on_family enables the center-line verdict for
/// points of a coexistence continuum.
StabilityReport classify(const Params& p, const State& point, bool on_family = false);

enum class PredictedVerdict { Stable, Unstable, Inconclusive };

const char* to_string(PredictedVerdict v);

struct Margin {
    std::string name;
    double value = 0.0;
};

/// Closed-form stability verdict: the fired rule, a human-readable detail
/// of the inequality that decided it, and every evaluated margin.
/// Hypotheses are strict inequalities; when neither direction fires the
/// verdict is Inconclusive.
struct Prediction {
    PredictedVerdict verdict = PredictedVerdict::Inconclusive;
    std::string rule;
    std::string detail;
    std::vector<Margin> margins;
};

Prediction predict_stability(const Params& p, const Equilibrium& e);
Prediction predict_stability(const Params& p, const EquilibriumFamily& f);

/// Sign-similarity search: for each signature matrix P = diag(+-1,...) the
/// sweep reports whether P J(x) P has all off-diagonal entries above
/// -tol::metzler at every sample. A system that admits no such P on
/// interior samples is not order-preserving; the witness is an index pair
/// (i, j) with J_ij < 0 < J_ji at some sample.
struct SignatureSweep {
    std::vector<bool> signature_ok;  // 2^n entries, bit k of the index = sign of P_kk
    int n_ok = 0;
    bool witness_found = false;
    int witness_i = -1, witness_j = -1;

    bool monotone_possible() const { return n_ok > 0; }
};

SignatureSweep monotonicity_check(const Params& p, std::span<const State> samples,
                                  Exec exec = Exec::Serial);

/// Same sweep over arbitrary square matrices (n <= 8); used to restrict the
/// question to sub-blocks.
SignatureSweep metzler_signature_sweep(std::span<const std::vector<double>> matrices, int n);

enum class Agreement { Agree, Disagree, NotComparable };

const char* to_string(Agreement a);

struct CrossCheck {
    std::string subject;
    Agreement agreement = Agreement::NotComparable;
    Prediction prediction;
    NumericVerdict numeric = NumericVerdict::Degenerate;
};

/// Numeric classification vs closed-form prediction. NotComparable when the
/// prediction is inconclusive, the numeric verdict degenerate, or the
/// equilibrium does not exist.
CrossCheck cross_check(const Params& p, const Equilibrium& e);
/// Family version: a Stable prediction must classify as a center line at
/// every sampled point, an Unstable one at some point.
CrossCheck cross_check(const Params& p, const EquilibriumFamily& f, int n_samples = 10);

}  // namespace bisis

#endif  // BISIS_STABILITY_HPP
