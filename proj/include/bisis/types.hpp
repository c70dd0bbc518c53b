#ifndef BISIS_TYPES_HPP
#define BISIS_TYPES_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace bisis {

inline constexpr int kDim = 5;

using Vec5 = std::array<double, 5>;
using Mat5 = std::array<std::array<double, 5>, 5>;

/// Payoff structure of the susceptible replicator equation.
enum class Variant { Standard, Coordination };

/// Full state (y1, y2, zS, z1, z2): infected mass fractions and the
/// distancing fractions of susceptibles and of each infected group.
/// The susceptible mass s = 1 - y1 - y2 is derived, never stored.
struct State {
    double y1 = 0.0;
    double y2 = 0.0;
    double zS = 0.0;
    double z1 = 0.0;
    double z2 = 0.0;

    double s() const { return 1.0 - y1 - y2; }

    Vec5 to_array() const { return {y1, y2, zS, z1, z2}; }
    static State from_array(const Vec5& v) { return {v[0], v[1], v[2], v[3], v[4]}; }

    double operator[](int i) const {
        switch (i) {
            case 0: return y1;
            case 1: return y2;
            case 2: return zS;
            case 3: return z1;
            case 4: return z2;
        }
        throw std::out_of_range("State index out of range");
    }
};

/// Coordinate names in state order, used by error messages and CSV output.
inline constexpr const char* kCoordNames[kDim] = {"y1", "y2", "zS", "z1", "z2"};

/// Model constants. All rates are per unit time; payoffs are dimensionless.
struct Params {
    double beta1 = 0.0, beta2 = 0.0;    // infection rates
    double delta1 = 0.0, delta2 = 0.0;  // recovery rates
    double r1 = 0.0, r2 = 0.0;          // perceived risk weights
    double c1 = 0.0, c2 = 0.0;          // cost of socializing while infected
    double cD = 0.0;                    // cost of social distancing
    double q = 0.0;                     // contact-reduction factor, in (0,1)
    Variant variant = Variant::Standard;

    double beta(int virus) const { return virus == 1 ? beta1 : beta2; }
    double delta(int virus) const { return virus == 1 ? delta1 : delta2; }
    double r(int virus) const { return virus == 1 ? r1 : r2; }
    double c(int virus) const { return virus == 1 ? c1 : c2; }
    /// Base reproduction number of a virus.
    double r0(int virus) const { return beta(virus) / delta(virus); }
};

/// Fixed numeric policy constants.
namespace tol {
inline constexpr double gamma_slack = 1e-9;   // state-space membership slack
inline constexpr double genericity = 1e-9;    // |c_i - cD| floor for generic costs
inline constexpr double clamp = 1e-8;         // max post-step boundary violation to clamp
inline constexpr double zero_eig = 1e-8;      // dead-zone for zero eigenvalues
inline constexpr double metzler = 1e-12;      // off-diagonal negativity slack
inline constexpr double r0_match_rel = 1e-12; // relative tolerance for R0_1 == R0_2
inline constexpr double convergence = 1e-9;   // default residual for convergence
inline constexpr double equilibrium_residual = 1e-10;  // classify() precondition
}  // namespace tol

/// Thrown when an integration step leaves the state space by more than the
/// clamping tolerance; carries the offending coordinate and the time.
class integration_error : public std::runtime_error {
public:
    integration_error(std::string msg, double time, int coordinate, double value)
        : std::runtime_error(std::move(msg)), time(time), coordinate(coordinate), value(value) {}

    double time;
    int coordinate;
    double value;
};

}  // namespace bisis

#endif  // BISIS_TYPES_HPP
