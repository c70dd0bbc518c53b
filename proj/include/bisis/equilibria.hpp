#ifndef BISIS_EQUILIBRIA_HPP
#define BISIS_EQUILIBRIA_HPP

#include <optional>
#include <string>
#include <vector>

#include "bisis/types.hpp"

namespace bisis {

enum class EquilibriumKind { Dfe, Unilateral, LinePoint };
enum class DistancingLevel { None, Full, Partial };

/// All existence conditions are strict inequalities; the status keeps
/// boundary cases (zero margin) apart from clear existence/absence.
enum class ExistenceStatus { Exists, Degenerate, Absent };

const char* to_string(EquilibriumKind k);
const char* to_string(ExistenceStatus s);

struct Condition {
    std::string name;
    double margin = 0.0;  // positive iff satisfied

    bool satisfied() const { return margin > 0.0; }
};

struct Equilibrium {
    std::string name;
    EquilibriumKind kind = EquilibriumKind::Dfe;
    int virus = 0;  // 1 or 2 for unilateral equilibria
    DistancingLevel distancing = DistancingLevel::None;
    State point;
    std::vector<Condition> existence;
    ExistenceStatus status = ExistenceStatus::Exists;
    bool stability_candidate = false;  // DFE only: the one that may be stable
    std::string note;
};

enum class FamilyKind { L0, L1, LS };

const char* to_string(FamilyKind f);

/// One-parameter family of coexistence equilibria, parameterized by y1 on
/// the open interval (y1_lo, y1_hi).
struct EquilibriumFamily {
    FamilyKind family = FamilyKind::L0;
    Params params;  // snapshot used by at()
    double r0 = 0.0;  // shared base reproduction number
    double y1_lo = 0.0, y1_hi = 0.0;
    std::vector<Condition> existence;
    ExistenceStatus status = ExistenceStatus::Absent;
    std::string note;

    std::string name() const { return to_string(family); }
    /// Maps the parameter to the full state; throws std::out_of_range with
    /// the violated bound named when y1 leaves (y1_lo, y1_hi).
    State at(double y1) const;
    /// n equally spaced interior samples.
    std::vector<State> samples(int n) const;
};

/// The eight disease-free equilibria, with the unique stability candidate
/// flagged. Throws std::invalid_argument when |c_i - cD| is below the
/// genericity floor (the distancing lines would then be degenerate).
std::vector<Equilibrium> enumerate_dfes(const Params& p);

/// The three single-virus equilibria of the given virus (no / full /
/// partial susceptible distancing, infected groups fully distancing), each
/// with per-condition margins. Non-existence is reported, never thrown.
std::vector<Equilibrium> unilateral(const Params& p, int virus);

struct CoexistenceOptions {
    /// Treat the base reproduction numbers as exactly equal and use
    /// beta1/delta1 as the shared value, instead of requiring them to match
    /// to within the relative tolerance.
    bool assume_equal_r0 = false;
};

/// Every coexistence family, all requiring equal base reproduction numbers.
/// Families that do not exist for p are returned with status Absent and the
/// failing margins; an empty list means the reproduction numbers differ.
std::vector<EquilibriumFamily> coexistence_families(const Params& p,
                                                    CoexistenceOptions opt = {});

/// Point of the partial-distancing coexistence curve at parameter y1.
/// Requires the curve to exist for p.
State ls_point(const Params& p, double y1);

/// Max-norm of the vector field; the residual self-check primitive.
double residual(const Params& p, const State& x);

/// The 8 DFEs plus both viruses' unilateral equilibria, in a fixed order.
std::vector<Equilibrium> all_isolated(const Params& p);

/// Lookup by name ("dfe_011", "p_10", "p_2S", ...). Names are matched
/// case-insensitively; returns nullopt when unknown.
std::optional<Equilibrium> find_equilibrium(const Params& p, const std::string& name);

/// True when x lies within tol of a point of some existing coexistence
/// family (used to separate center-line spectra from degenerate ones).
bool on_coexistence_family(const Params& p, const State& x, double tol = 1e-9);

}  // namespace bisis

#endif  // BISIS_EQUILIBRIA_HPP
