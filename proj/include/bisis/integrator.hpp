#ifndef BISIS_INTEGRATOR_HPP
#define BISIS_INTEGRATOR_HPP

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "bisis/types.hpp"

namespace bisis {

/// Recorded trajectory: states every record_every steps plus the final
/// state, with the parameter snapshot that produced it.
struct Trajectory {
    Params params;
    double dt = 0.0;
    std::vector<double> times;
    std::vector<State> states;

    double t_end() const { return times.empty() ? 0.0 : times.back(); }
    const State& final_state() const { return states.back(); }
};

/// One classical fourth-order Runge-Kutta step. Boundary coordinates are
/// exact fixed points of the scheme; roundoff-level excursions outside the
/// state space (up to tol::clamp) are projected back, anything larger
/// throws integration_error naming the offending coordinate.
State step(const Params& p, const State& x, double h);

/// Fixed-step integration from t = 0 to t_end, recording every
/// record_every-th step plus the final state. Step errors are rethrown
/// with the failing time attached.
Trajectory simulate(const Params& p, const State& x0, double h, double t_end,
                    std::size_t record_every = 1);

struct ConvergenceVerdict {
    bool converged = false;
    State limit;              // final state, meaningful when converged
    double residual = 0.0;    // max-norm of the vector field at the final state
    double drift = 0.0;       // max state movement over the last 10% of the horizon
    double t_converged = 0.0; // earliest recorded time the state stays within tol of the limit
};

/// Converged means the vector field residual at the final state is below
/// tol_conv AND the state moved less than tol_conv over the final 10% of
/// the horizon (points near a line of equilibria have a small residual
/// while still sliding along it).
ConvergenceVerdict detect_convergence(const Trajectory& tr, double tol_conv = tol::convergence);

enum class OscillationClass { None, Decaying, Sustained, Growing };

const char* to_string(OscillationClass c);

struct OscillationConfig {
    double transient_fraction = 0.25;  // fraction of the horizon discarded up front
    double sustained_ratio = 0.5;      // last amplitude >= ratio * first amplitude
    double rel_growth_tol = 1e-3;      // per-swing growth to call the sequence increasing
    int min_maxima = 4;
};

struct OscillationVerdict {
    OscillationClass classification = OscillationClass::None;
    std::vector<double> peak_amplitudes;  // |value change| between successive extrema
};

/// Classifies the oscillation of one coordinate from the peak-to-peak
/// amplitudes between successive local extrema after the transient.
OscillationVerdict detect_oscillation(const Trajectory& tr, int coordinate,
                                      const OscillationConfig& cfg = {});

/// CSV with header t,y1,y2,zS,z1,z2, 17 significant digits, LF endings.
void write_trajectory_csv(const Trajectory& tr, std::ostream& os);
void write_trajectory_csv_file(const Trajectory& tr, const std::string& path);

}  // namespace bisis

#endif  // BISIS_INTEGRATOR_HPP
