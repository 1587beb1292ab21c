#pragma once

#include <array>
#include <optional>

namespace aquasim {

// Closed interval, used both for fuzzy optimal sets and for chromosome
// tolerance pairs.
struct Range {
    double lo = 0.0;
    double hi = 0.0;
    double width() const { return hi - lo; }
};

enum class ParamKind { Oxygen, PH, Temperature };

struct ParamUniverse {
    ParamKind kind;
    double lo, hi;          // universe bounds
    double opt_lo, opt_hi;  // species optimal set
};

// Species universes: O2 in [0,14] ppm with optimal [5,12]; pH in [0,14]
// with optimal [6.5,8.5]; temperature in [18,36] C with optimal [22,30].
constexpr ParamUniverse kOxygenUniverse{ParamKind::Oxygen, 0.0, 14.0, 5.0, 12.0};
constexpr ParamUniverse kPhUniverse{ParamKind::PH, 0.0, 14.0, 6.5, 8.5};
constexpr ParamUniverse kTemperatureUniverse{ParamKind::Temperature, 18.0, 36.0, 22.0, 30.0};

enum class StateLabel { Normal, Tolerable, Bad };

struct ShrimpState {
    StateLabel label = StateLabel::Normal;
    double crisp = 1.0;  // in [0,1]
};

struct DegreePair {
    double optimal = 0.0;
    double bad = 0.0;  // always 1 - optimal
};

// Degree of membership in the "optimo" set. Trapezoid with linear ramps of
// half-width w = 0.1 * (opt_hi - opt_lo) centered on each optimal bound;
// x is clamped to the universe first. An override (an agent's tolerance
// pair) replaces the optimal bounds; override.lo > override.hi throws.
double membership_optimal(const ParamUniverse& u, double x,
                          const std::optional<Range>& opt_override = std::nullopt);

DegreePair membership_pair(const ParamUniverse& u, double x,
                           const std::optional<Range>& opt_override = std::nullopt);

// Firing strength of the eight rules, antecedents exactly as the rule
// table (intersection = min):
//   R1 (O,O,O)->Normal   R2 (O,O,M)->Tolerable  R3 (O,M,O)->Tolerable
//   R4 (M,O,O)->Tolerable R5 (M,M,O)->Bad       R6 (M,O,M)->Bad
//   R7 (O,M,M)->Bad      R8 (M,M,M)->death (not simulated; floors at Bad)
std::array<double, 8> rule_strengths(const DegreePair& o2, const DegreePair& ph,
                                     const DegreePair& temp);

// Weighted average of the output singletons (Normal 1.0, Tolerable 0.6,
// Bad 0.2, death 0.0). Labels: crisp < 0.4 -> Bad, < 0.8 -> Tolerable,
// else Normal. All-zero strengths throw (cannot happen for clamped inputs).
ShrimpState defuzzify(const std::array<double, 8>& strengths);

struct ToleranceOverrides {
    std::optional<Range> o2;
    std::optional<Range> ph;
    std::optional<Range> temp;
};

// membership -> rule_strengths -> defuzzify, end to end.
ShrimpState evaluate_state(double o2, double ph, double temp,
                           const ToleranceOverrides& tol = {});

const char* to_string(StateLabel label);

}  // namespace aquasim
