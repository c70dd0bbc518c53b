#include "bisis/stability.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bisis/model.hpp"

namespace bisis {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

Spectrum sorted(Spectrum s) {
    std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return s;
}

}  // namespace

Mat5 jacobian(const Params& p, const State& x) {
    if (p.variant == Variant::Coordination)
        throw std::invalid_argument(
            "jacobian: no analytic form for the coordination variant; use jacobian_fd");
    if (!in_gamma(x, tol::gamma_slack))
        throw std::domain_error("jacobian: state outside the admissible set");

    const double s = x.s();
    const double qzS = 1.0 - x.zS * (1.0 - p.q);
    const double qz1 = 1.0 - x.z1 * (1.0 - p.q);
    const double qz2 = 1.0 - x.z2 * (1.0 - p.q);
    const double omq = 1.0 - p.q;
    const double gap = 2.0 * (p.r1 * x.y1 + p.r2 * x.y2) - p.cD;

    Mat5 J{};
    J[0][0] = p.beta1 * (s - x.y1) * qzS * qz1 - p.delta1;
    J[0][1] = -p.beta1 * x.y1 * qzS * qz1;
    J[0][2] = -p.beta1 * x.y1 * s * omq * qz1;
    J[0][3] = -p.beta1 * x.y1 * s * qzS * omq;
    J[0][4] = 0.0;

    J[1][0] = -p.beta2 * x.y2 * qzS * qz2;
    J[1][1] = p.beta2 * (s - x.y2) * qzS * qz2 - p.delta2;
    J[1][2] = -p.beta2 * x.y2 * s * omq * qz2;
    J[1][3] = 0.0;
    J[1][4] = -p.beta2 * x.y2 * s * qzS * omq;

    J[2][0] = x.zS * (1.0 - x.zS) * 2.0 * p.r1;
    J[2][1] = x.zS * (1.0 - x.zS) * 2.0 * p.r2;
    J[2][2] = (1.0 - 2.0 * x.zS) * gap;
    J[2][3] = 0.0;
    J[2][4] = 0.0;

    J[3][3] = (1.0 - 2.0 * x.z1) * (p.c1 - p.cD);
    J[4][4] = (1.0 - 2.0 * x.z2) * (p.c2 - p.cD);
    return J;
}

Mat5 jacobian_fd(const Params& p, const State& x, double fd_step) {
    Mat5 J{};
    const Vec5 base = x.to_array();
    for (int j = 0; j < kDim; ++j) {
        // Shrink toward a one-sided difference where the state space leaves
        // no room on one side of the coordinate.
        double room_up = 1.0 - base[j];
        if (j < 2) room_up = std::min(room_up, 1.0 - base[0] - base[1]);
        const double hhi = std::min(fd_step, std::max(room_up, 0.0));
        const double hlo = std::min(fd_step, std::max(base[j], 0.0));
        if (hhi + hlo <= 0.0)
            throw std::domain_error("jacobian_fd: coordinate pinned, no room to difference");

        Vec5 hi = base, lo = base;
        hi[j] += hhi;
        lo[j] -= hlo;
        const Vec5 fhi = rhs(p, State::from_array(hi));
        const Vec5 flo = rhs(p, State::from_array(lo));
        for (int i = 0; i < kDim; ++i) J[i][j] = (fhi[i] - flo[i]) / (hhi + hlo);
    }
    return J;
}

Spectrum eigenvalues(const Mat5& m) {
    Eigen::Matrix<double, 5, 5> em;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) em(i, j) = m[i][j];

    Eigen::EigenSolver<Eigen::Matrix<double, 5, 5>> solver(em, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigenvalues: dense eigen-iteration did not converge");

    Spectrum s;
    for (int i = 0; i < kDim; ++i) s[i] = solver.eigenvalues()(i);
    return sorted(s);
}

namespace {

/// Roots of lambda^2 - b lambda - c = 0.
std::pair<std::complex<double>, std::complex<double>> quadratic_pair(double b, double c) {
    const std::complex<double> disc = std::sqrt(std::complex<double>(b * b + 4.0 * c, 0.0));
    return {(b + disc) / 2.0, (b - disc) / 2.0};
}

}  // namespace

std::optional<Spectrum> eigenvalues_closed_form(const Params& p, const Equilibrium& e) {
    if (p.variant == Variant::Coordination) return std::nullopt;

    const State& x = e.point;
    switch (e.kind) {
        case EquilibriumKind::Dfe: {
            // Lower triangular there; the spectrum is the diagonal.
            const double qzS = q_factor(x.zS, p.q);
            return sorted({
                std::complex<double>(p.beta1 * qzS * q_factor(x.z1, p.q) - p.delta1),
                std::complex<double>(p.beta2 * qzS * q_factor(x.z2, p.q) - p.delta2),
                std::complex<double>(-(1.0 - 2.0 * x.zS) * p.cD),
                std::complex<double>((1.0 - 2.0 * x.z1) * (p.c1 - p.cD)),
                std::complex<double>((1.0 - 2.0 * x.z2) * (p.c2 - p.cD)),
            });
        }
        case EquilibriumKind::Unilateral: {
            const int i = e.virus, j = 3 - e.virus;
            const double bi = p.beta(i), di = p.delta(i);
            const double bj = p.beta(j), dj = p.delta(j);
            const double yi = i == 1 ? x.y1 : x.y2;
            const double cross = bj * di / bi - dj;  // shared susceptible pool
            const double gap = 2.0 * p.r(i) * yi - p.cD;
            switch (e.distancing) {
                case DistancingLevel::None:  // upper triangular
                    return sorted({
                        std::complex<double>(di - bi * p.q),
                        std::complex<double>(cross),
                        std::complex<double>(gap),
                        std::complex<double>(-(p.c1 - p.cD)),
                        std::complex<double>(-(p.c2 - p.cD)),
                    });
                case DistancingLevel::Full:  // same structure, extra q and flipped zS row
                    return sorted({
                        std::complex<double>(di - bi * p.q * p.q),
                        std::complex<double>(cross),
                        std::complex<double>(-gap),
                        std::complex<double>(-(p.c1 - p.cD)),
                        std::complex<double>(-(p.c2 - p.cD)),
                    });
                case DistancingLevel::Partial: {
                    // One block couples the endemic mass with zS; quadratic factor.
                    const double s = x.s();
                    const double J11 = -di * yi / s;
                    const double J13 = -bi * yi * s * (1.0 - p.q) * p.q;
                    const double J31 = x.zS * (1.0 - x.zS) * 2.0 * p.r(i);
                    auto [l1, l2] = quadratic_pair(J11, J13 * J31);
                    return sorted({
                        l1,
                        l2,
                        std::complex<double>(cross),
                        std::complex<double>(-(p.c1 - p.cD)),
                        std::complex<double>(-(p.c2 - p.cD)),
                    });
                }
            }
            return std::nullopt;
        }
        case EquilibriumKind::LinePoint:
            return std::nullopt;  // use the family overload
    }
    return std::nullopt;
}

std::optional<Spectrum> eigenvalues_closed_form(const Params& p, const EquilibriumFamily& f,
                                                double y1) {
    if (p.variant == Variant::Coordination) return std::nullopt;

    const State x = f.at(y1);
    const double gap = 2.0 * (p.r1 * x.y1 + p.r2 * x.y2) - p.cD;
    switch (f.family) {
        case FamilyKind::L0:
            return sorted({
                std::complex<double>(0.0),
                std::complex<double>(-p.q * (p.beta1 * x.y1 + p.beta2 * x.y2)),
                std::complex<double>(gap),
                std::complex<double>(-(p.c1 - p.cD)),
                std::complex<double>(-(p.c2 - p.cD)),
            });
        case FamilyKind::L1:
            return sorted({
                std::complex<double>(0.0),
                std::complex<double>(-p.q * p.q * (p.beta1 * x.y1 + p.beta2 * x.y2)),
                std::complex<double>(-gap),
                std::complex<double>(-(p.c1 - p.cD)),
                std::complex<double>(-(p.c2 - p.cD)),
            });
        case FamilyKind::LS: {
            const double s = x.s();
            const double trace = -(p.delta1 * x.y1 + p.delta2 * x.y2) / s;
            const double A13 = -p.beta1 * x.y1 * s * (1.0 - p.q) * p.q;
            const double A23 = -p.beta2 * x.y2 * s * (1.0 - p.q) * p.q;
            const double A31 = x.zS * (1.0 - x.zS) * 2.0 * p.r1;
            const double A32 = x.zS * (1.0 - x.zS) * 2.0 * p.r2;
            auto [l1, l2] = quadratic_pair(trace, A13 * A31 + A23 * A32);
            return sorted({
                std::complex<double>(0.0),
                l1,
                l2,
                std::complex<double>(p.cD - p.c1),
                std::complex<double>(p.cD - p.c2),
            });
        }
    }
    return std::nullopt;
}

double spectral_abscissa(const Spectrum& s) {
    double m = s[0].real();
    for (const auto& l : s) m = std::max(m, l.real());
    return m;
}

const char* to_string(NumericVerdict v) {
    switch (v) {
        case NumericVerdict::ExpStable: return "ExpStable";
        case NumericVerdict::Unstable: return "Unstable";
        case NumericVerdict::CenterLine: return "CenterLine";
        case NumericVerdict::Degenerate: return "Degenerate";
    }
    return "?";
}

StabilityReport classify(const Params& p, const State& point, bool on_family) {
    const double res = residual(p, point);
    if (res >= tol::equilibrium_residual)
        throw std::invalid_argument("classify: not an equilibrium (residual " +
                                    std::to_string(res) + ")");

    const Mat5 J = p.variant == Variant::Standard ? jacobian(p, point)
                                                  : jacobian_fd(p, point);
    StabilityReport rep;
    rep.eigenvalues = eigenvalues(J);
    rep.spectral_abscissa = spectral_abscissa(rep.eigenvalues);

    if (rep.spectral_abscissa < -tol::zero_eig) {
        rep.numeric_verdict = NumericVerdict::ExpStable;
    } else if (rep.spectral_abscissa > tol::zero_eig) {
        rep.numeric_verdict = NumericVerdict::Unstable;
    } else {
        int n_zero = 0, n_neg = 0;
        for (const auto& l : rep.eigenvalues) {
            if (std::abs(l) < tol::zero_eig)
                ++n_zero;
            else if (l.real() < -tol::zero_eig)
                ++n_neg;
        }
        rep.numeric_verdict = (on_family && n_zero == 1 && n_neg == 4)
                                  ? NumericVerdict::CenterLine
                                  : NumericVerdict::Degenerate;
    }
    return rep;
}

const char* to_string(PredictedVerdict v) {
    switch (v) {
        case PredictedVerdict::Stable: return "Stable";
        case PredictedVerdict::Unstable: return "Unstable";
        case PredictedVerdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

namespace {

/// An equilibrium whose infected-distancing level disagrees with the cost
/// ordering carries a positive replicator eigenvalue.
std::optional<Prediction> distancing_partition_rule(const Params& p, const State& x) {
    for (int i : {1, 2}) {
        const double zi = i == 1 ? x.z1 : x.z2;
        const double eig = (1.0 - 2.0 * zi) * (p.c(i) - p.cD);
        if (eig > 0.0) {
            Prediction pr;
            pr.verdict = PredictedVerdict::Unstable;
            pr.rule = "infected-distancing mismatch";
            pr.detail = "z" + std::to_string(i) + " = " + fmt(zi) +
                        " disagrees with the cost ordering (c" + std::to_string(i) + " - cD = " +
                        fmt(p.c(i) - p.cD) + "); replicator eigenvalue " + fmt(eig) + " > 0";
            pr.margins.push_back({"replicator eigenvalue", eig});
            return pr;
        }
    }
    return std::nullopt;
}

Prediction inconclusive(std::string why) {
    Prediction pr;
    pr.verdict = PredictedVerdict::Inconclusive;
    pr.rule = "no strict criterion fired";
    pr.detail = std::move(why);
    return pr;
}

Prediction predict_dfe(const Params& p, const Equilibrium& e) {
    if (auto pr = distancing_partition_rule(p, e.point)) return *pr;

    if (e.point.zS == 1.0) {
        Prediction pr;
        pr.verdict = PredictedVerdict::Unstable;
        pr.rule = "distancing without disease";
        pr.detail = "zS = 1 at a disease-free state; replicator eigenvalue cD = " + fmt(p.cD) +
                    " > 0";
        pr.margins.push_back({"replicator eigenvalue", p.cD});
        return pr;
    }

    // zS = 0 and z_i matching the cost ordering: the unique candidate.
    Prediction pr;
    const double qf1 = p.c1 > p.cD ? p.q : 1.0;
    const double qf2 = p.c2 > p.cD ? p.q : 1.0;
    const double m1 = 1.0 - qf1 * p.r0(1);
    const double m2 = 1.0 - qf2 * p.r0(2);
    pr.margins.push_back({"1 - R1* at the candidate", m1});
    pr.margins.push_back({"1 - R2* at the candidate", m2});
    if (m1 > 0.0 && m2 > 0.0) {
        pr.verdict = PredictedVerdict::Stable;
        pr.rule = "candidate reproduction thresholds";
        pr.detail = "equilibrium reproduction numbers " + fmt(qf1 * p.r0(1)) + ", " +
                    fmt(qf2 * p.r0(2)) + " both below one";
    } else if (m1 < 0.0 || m2 < 0.0) {
        pr.verdict = PredictedVerdict::Unstable;
        pr.rule = "candidate reproduction thresholds";
        pr.detail = "an equilibrium reproduction number exceeds one (" + fmt(qf1 * p.r0(1)) +
                    ", " + fmt(qf2 * p.r0(2)) + ")";
    } else {
        return inconclusive("an equilibrium reproduction number sits exactly at one");
    }
    return pr;
}

Prediction predict_unilateral(const Params& p, const Equilibrium& e) {
    if (e.status == ExistenceStatus::Absent)
        return inconclusive("the point does not lie in the state space");
    if (e.status == ExistenceStatus::Degenerate)
        return inconclusive("an existence margin vanishes");
    if (auto pr = distancing_partition_rule(p, e.point)) return *pr;
    if (p.c1 == p.cD || p.c2 == p.cD)
        return inconclusive("a socializing cost equals the distancing cost (non-generic)");

    const int i = e.virus, j = 3 - e.virus;
    const double yi = i == 1 ? e.point.y1 : e.point.y2;
    const double gap = 2.0 * p.r(i) * yi - p.cD;  // susceptible payoff for distancing

    Prediction pr;
    if (e.distancing == DistancingLevel::Partial) {
        // Existence of the interior-distancing point plus cross-virus
        // dominance decides; the coupled block is always a stable pair.
        if (e.status != ExistenceStatus::Exists)
            return inconclusive("the interior-distancing point does not strictly exist");
        const double dom = p.r0(i) - p.r0(j);
        pr.margins.push_back({"R0 dominance", dom});
        if (dom > 0.0) {
            pr.verdict = PredictedVerdict::Stable;
            pr.rule = "interior-distancing dominance";
            pr.detail = "R0_" + std::to_string(i) + " = " + fmt(p.r0(i)) + " exceeds R0_" +
                        std::to_string(j) + " = " + fmt(p.r0(j)) +
                        " and the coupled infection/distancing pair is always damped";
        } else if (dom < 0.0) {
            pr.verdict = PredictedVerdict::Unstable;
            pr.rule = "interior-distancing dominance";
            pr.detail = "R0_" + std::to_string(i) + " = " + fmt(p.r0(i)) + " is below R0_" +
                        std::to_string(j) + " = " + fmt(p.r0(j));
        } else {
            return inconclusive("the base reproduction numbers are exactly equal");
        }
        return pr;
    }

    // Boundary-distancing points: equilibrium reproduction numbers.
    const double qzS = e.distancing == DistancingLevel::Full ? p.q : 1.0;
    const double Ri = qzS * p.q * p.r0(i);
    const double Rj = qzS * p.q * p.r0(j);
    const double above_one = Ri - 1.0;
    const double dominance = Ri - Rj;
    // zS rests at 0 (resp. 1) only if the distancing payoff is negative
    // (resp. positive) at the endemic level.
    const double payoff_ok = e.distancing == DistancingLevel::None ? -gap : gap;

    pr.margins.push_back({"R* - 1", above_one});
    pr.margins.push_back({"R* dominance", dominance});
    pr.margins.push_back({"payoff sign", payoff_ok});
    const double bound = 1.0 - p.cD / (2.0 * p.r(i));
    if (bound > 0.0)
        pr.margins.push_back({"reciprocal payoff bound", e.distancing == DistancingLevel::None
                                                             ? 1.0 / bound - Ri
                                                             : Ri - 1.0 / bound});

    if (above_one > 0.0 && dominance > 0.0 && payoff_ok > 0.0) {
        pr.verdict = PredictedVerdict::Stable;
        pr.rule = e.distancing == DistancingLevel::None ? "dominant endemic, distancing unrewarding"
                                                        : "dominant endemic, distancing rewarding";
        pr.detail = "R*_" + std::to_string(i) + " = " + fmt(Ri) + " > max(1, " + fmt(Rj) +
                    ") and the susceptible distancing payoff at the endemic level is " +
                    fmt(gap) + (e.distancing == DistancingLevel::None ? " < 0" : " > 0");
    } else if (above_one < 0.0 || dominance < 0.0 || payoff_ok < 0.0) {
        pr.verdict = PredictedVerdict::Unstable;
        pr.rule = "reversed endemic threshold";
        pr.detail = "a strict stability inequality is reversed (R* - 1 = " + fmt(above_one) +
                    ", dominance = " + fmt(dominance) + ", payoff sign = " + fmt(payoff_ok) + ")";
    } else {
        return inconclusive("a stability inequality holds with equality");
    }
    return pr;
}

}  // namespace

Prediction predict_stability(const Params& p, const Equilibrium& e) {
    if (p.variant == Variant::Coordination)
        return inconclusive("no closed-form criteria for the coordination variant");
    switch (e.kind) {
        case EquilibriumKind::Dfe: return predict_dfe(p, e);
        case EquilibriumKind::Unilateral: return predict_unilateral(p, e);
        case EquilibriumKind::LinePoint:
            return inconclusive("line points are judged through their family");
    }
    return inconclusive("unknown equilibrium kind");
}

Prediction predict_stability(const Params& p, const EquilibriumFamily& f) {
    if (p.variant == Variant::Coordination)
        return inconclusive("no closed-form criteria for the coordination variant");
    if (f.status != ExistenceStatus::Exists)
        return inconclusive("the family does not strictly exist");
    if (auto pr = distancing_partition_rule(p, f.at((f.y1_lo + f.y1_hi) / 2.0))) return *pr;
    if (p.c1 == p.cD || p.c2 == p.cD)
        return inconclusive("a socializing cost equals the distancing cost (non-generic)");

    Prediction pr;
    if (f.family == FamilyKind::LS) {
        // Existence of the curve under the pro-social ordering already pins
        // every nonzero eigenvalue to the left half plane.
        pr.verdict = PredictedVerdict::Stable;
        pr.rule = "interior-distancing curve";
        pr.detail = "the curve exists (range " + fmt(f.y1_lo) + ".." + fmt(f.y1_hi) +
                    ") and its nonzero spectrum is always damped";
        pr.margins.push_back({"range width", f.y1_hi - f.y1_lo});
        return pr;
    }

    const double sum = f.family == FamilyKind::L0 ? 1.0 - 1.0 / (p.q * f.r0)
                                                  : 1.0 - 1.0 / (p.q * p.q * f.r0);
    // The payoff eigenvalue varies along the line; it must keep one sign at
    // both extreme mass splits.
    const double m1 = f.family == FamilyKind::L0 ? p.cD / (2.0 * p.r1) - sum
                                                 : sum - p.cD / (2.0 * p.r1);
    const double m2 = f.family == FamilyKind::L0 ? p.cD / (2.0 * p.r2) - sum
                                                 : sum - p.cD / (2.0 * p.r2);
    pr.margins.push_back({"payoff margin, all mass on virus 1", m1});
    pr.margins.push_back({"payoff margin, all mass on virus 2", m2});

    const char* which = f.family == FamilyKind::L0 ? "below" : "above";
    if (m1 > 0.0 && m2 > 0.0) {
        pr.verdict = PredictedVerdict::Stable;
        pr.rule = "line payoff sign";
        pr.detail = std::string("the endemic mass keeps the distancing payoff ") + which +
                    " the distancing cost along the whole line";
    } else if (m1 < 0.0 || m2 < 0.0) {
        pr.verdict = PredictedVerdict::Unstable;
        pr.rule = "line payoff sign";
        pr.detail = "the distancing payoff crosses the wrong side of the cost on part of the line";
    } else {
        return inconclusive("the payoff margin vanishes at a line endpoint");
    }
    return pr;
}

namespace {

bool metzler_under_signature(const double* m, int n, unsigned sig) {
    for (int i = 0; i < n; ++i) {
        const double si = (sig >> i) & 1u ? -1.0 : 1.0;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double sj = (sig >> j) & 1u ? -1.0 : 1.0;
            if (m[i * n + j] * si * sj < -tol::metzler) return false;
        }
    }
    return true;
}

}  // namespace

SignatureSweep metzler_signature_sweep(std::span<const std::vector<double>> matrices, int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("metzler_signature_sweep: n out of range");
    const unsigned n_sig = 1u << n;
    SignatureSweep sweep;
    sweep.signature_ok.assign(n_sig, true);
    for (const auto& m : matrices) {
        if (static_cast<int>(m.size()) != n * n)
            throw std::invalid_argument("metzler_signature_sweep: matrix size mismatch");
        for (unsigned sig = 0; sig < n_sig; ++sig)
            if (sweep.signature_ok[sig] && !metzler_under_signature(m.data(), n, sig))
                sweep.signature_ok[sig] = false;
        if (!sweep.witness_found) {
            for (int i = 0; i < n && !sweep.witness_found; ++i)
                for (int j = 0; j < n && !sweep.witness_found; ++j)
                    if (m[i * n + j] < -tol::metzler && m[j * n + i] > tol::metzler) {
                        sweep.witness_found = true;
                        sweep.witness_i = i;
                        sweep.witness_j = j;
                    }
        }
    }
    sweep.n_ok = static_cast<int>(std::count(sweep.signature_ok.begin(),
                                             sweep.signature_ok.end(), true));
    return sweep;
}

SignatureSweep monotonicity_check(const Params& p, std::span<const State> samples, Exec exec) {
    if (samples.empty()) throw std::invalid_argument("monotonicity_check: no samples");

    std::vector<std::vector<double>> mats(samples.size());
    auto fill = [&](std::size_t k) {
        const Mat5 J = jacobian(p, samples[k]);
        std::vector<double> flat(kDim * kDim);
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j) flat[i * kDim + j] = J[i][j];
        mats[k] = std::move(flat);
    };

    if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (long long k = 0; k < static_cast<long long>(samples.size()); ++k) fill(k);
    } else {
        for (std::size_t k = 0; k < samples.size(); ++k) fill(k);
    }
    return metzler_signature_sweep(mats, kDim);
}

const char* to_string(Agreement a) {
    switch (a) {
        case Agreement::Agree: return "Agree";
        case Agreement::Disagree: return "Disagree";
        case Agreement::NotComparable: return "NotComparable";
    }
    return "?";
}

CrossCheck cross_check(const Params& p, const Equilibrium& e) {
    CrossCheck cc;
    cc.subject = e.name;
    cc.prediction = predict_stability(p, e);
    if (e.status != ExistenceStatus::Exists ||
        cc.prediction.verdict == PredictedVerdict::Inconclusive) {
        cc.agreement = Agreement::NotComparable;
        return cc;
    }
    cc.numeric = classify(p, e.point, /*on_family=*/false).numeric_verdict;
    switch (cc.numeric) {
        case NumericVerdict::ExpStable:
            cc.agreement = cc.prediction.verdict == PredictedVerdict::Stable
                               ? Agreement::Agree : Agreement::Disagree;
            break;
        case NumericVerdict::Unstable:
            cc.agreement = cc.prediction.verdict == PredictedVerdict::Unstable
                               ? Agreement::Agree : Agreement::Disagree;
            break;
        default:
            cc.agreement = Agreement::NotComparable;
            break;
    }
    return cc;
}

CrossCheck cross_check(const Params& p, const EquilibriumFamily& f, int n_samples) {
    CrossCheck cc;
    cc.subject = f.name();
    cc.prediction = predict_stability(p, f);
    if (f.status != ExistenceStatus::Exists ||
        cc.prediction.verdict == PredictedVerdict::Inconclusive) {
        cc.agreement = Agreement::NotComparable;
        return cc;
    }

    int n_center = 0, n_unstable = 0, n_degenerate = 0;
    for (const State& x : f.samples(n_samples)) {
        switch (classify(p, x, /*on_family=*/true).numeric_verdict) {
            case NumericVerdict::CenterLine: ++n_center; break;
            case NumericVerdict::Unstable: ++n_unstable; break;
            default: ++n_degenerate; break;
        }
    }
    cc.numeric = n_unstable > 0 ? NumericVerdict::Unstable
               : n_center == n_samples ? NumericVerdict::CenterLine
                                       : NumericVerdict::Degenerate;

    if (cc.prediction.verdict == PredictedVerdict::Stable)
        cc.agreement = n_center == n_samples ? Agreement::Agree
                     : n_unstable > 0        ? Agreement::Disagree
                                             : Agreement::NotComparable;
    else
        cc.agreement = n_unstable > 0   ? Agreement::Agree
                     : n_degenerate > 0 ? Agreement::NotComparable
                                        : Agreement::Disagree;
    return cc;
}

}  // namespace bisis
