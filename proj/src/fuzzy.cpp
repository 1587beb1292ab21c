#include "aquasim/fuzzy.hpp"

#include <algorithm>
#include <stdexcept>

namespace aquasim {

namespace {

// Antecedent pattern per rule: true = "optimo", false = "malo",
// in (O2, pH, temperature) order. Row order matches the rule table.
struct RuleRow {
    bool o2_optimal, ph_optimal, temp_optimal;
    double singleton;
};

constexpr std::array<RuleRow, 8> kRules{{
    {true, true, true, 1.0},     // R1: Normal
    {true, true, false, 0.6},    // R2: Tolerable
    {true, false, true, 0.6},    // R3: Tolerable
    {false, true, true, 0.6},    // R4: Tolerable
    {false, false, true, 0.2},   // R5: Bad
    {false, true, false, 0.2},   // R6: Bad
    {true, false, false, 0.2},   // R7: Bad
    {false, false, false, 0.0},  // R8: death, not simulated
}};

constexpr double kBadThreshold = 0.4;
constexpr double kNormalThreshold = 0.8;

}  // namespace

double membership_optimal(const ParamUniverse& u, double x,
                          const std::optional<Range>& opt_override) {
    double opt_lo = u.opt_lo;
    double opt_hi = u.opt_hi;
    if (opt_override) {
        if (opt_override->lo > opt_override->hi)
            throw std::invalid_argument("tolerance override with min > max");
        opt_lo = opt_override->lo;
        opt_hi = opt_override->hi;
    }

    x = std::clamp(x, u.lo, u.hi);

    const double w = 0.1 * (opt_hi - opt_lo);
    if (w == 0.0) return (x == opt_lo) ? 1.0 : 0.0;

    if (x <= opt_lo - w || x >= opt_hi + w) return 0.0;
    if (x < opt_lo + w) return (x - (opt_lo - w)) / (2.0 * w);
    if (x > opt_hi - w) return ((opt_hi + w) - x) / (2.0 * w);
    return 1.0;
}

DegreePair membership_pair(const ParamUniverse& u, double x,
                           const std::optional<Range>& opt_override) {
    const double mu = membership_optimal(u, x, opt_override);
    return {mu, 1.0 - mu};
}

std::array<double, 8> rule_strengths(const DegreePair& o2, const DegreePair& ph,
                                     const DegreePair& temp) {
    std::array<double, 8> strengths{};
    for (std::size_t i = 0; i < kRules.size(); ++i) {
        const RuleRow& r = kRules[i];
        const double a = r.o2_optimal ? o2.optimal : o2.bad;
        const double b = r.ph_optimal ? ph.optimal : ph.bad;
        const double c = r.temp_optimal ? temp.optimal : temp.bad;
        strengths[i] = std::min({a, b, c});
    }
    return strengths;
}

ShrimpState defuzzify(const std::array<double, 8>& strengths) {
    double weighted = 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < strengths.size(); ++i) {
        weighted += strengths[i] * kRules[i].singleton;
        total += strengths[i];
    }
    if (total <= 0.0) throw std::runtime_error("no rule fired");

    ShrimpState state;
    state.crisp = weighted / total;
    if (state.crisp < kBadThreshold)
        state.label = StateLabel::Bad;
    else if (state.crisp < kNormalThreshold)
        state.label = StateLabel::Tolerable;
    else
        state.label = StateLabel::Normal;
    return state;
}

ShrimpState evaluate_state(double o2, double ph, double temp,
                           const ToleranceOverrides& tol) {
    const DegreePair d_o2 = membership_pair(kOxygenUniverse, o2, tol.o2);
    const DegreePair d_ph = membership_pair(kPhUniverse, ph, tol.ph);
    const DegreePair d_temp = membership_pair(kTemperatureUniverse, temp, tol.temp);
    return defuzzify(rule_strengths(d_o2, d_ph, d_temp));
}

const char* to_string(StateLabel label) {
    switch (label) {
        case StateLabel::Normal: return "Normal";
        case StateLabel::Tolerable: return "Tolerable";
        case StateLabel::Bad: return "Bad";
    }
    return "?";
}

}  // namespace aquasim
