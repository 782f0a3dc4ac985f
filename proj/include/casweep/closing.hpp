#pragma once

#include <optional>
#include <string>

#include "casweep/cellular_automaton.hpp"

namespace casweep {

struct ClosingVerdict {
    bool closing = false;
    unsigned radius = 0;  // smallest strong closing radius when closing
    // when not closing: distinct asymptotic configurations with equal images
    std::optional<EpConfig> witness_a, witness_b;
};

struct RadiusCheck {
    enum Reason { Holds, BelowTwiceRadius, NotUnique, NoExtension };
    bool holds = false;
    Reason reason = Holds;
    unsigned m = 0;
    int r = 0;  // the neighborhood radius used (at least 1)
};

std::string reason_name(RadiusCheck::Reason r);

int working_radius(const LocalRule& f);  // max(1, radius)

RadiusCheck is_strong_left_closing_radius(const LocalRule& f, unsigned m);

// Exact search for right-asymptotic y != y' with f(y) = f(y'); nullopt iff left-closing.
std::optional<std::pair<EpConfig, EpConfig>> left_nonclosing_witness(const LocalRule& f);

ClosingVerdict left_closing_decide(const LocalRule& f, unsigned max_radius = 12);
ClosingVerdict right_closing_decide(const LocalRule& f, unsigned max_radius = 12);

// Distinct, equal images, and right- (or left-) asymptotic.
bool validates_left_witness(const LocalRule& f, const EpConfig& a, const EpConfig& b);
bool validates_right_witness(const LocalRule& f, const EpConfig& a, const EpConfig& b);

bool right_asymptotic(const EpConfig& a, const EpConfig& b);
bool left_asymptotic(const EpConfig& a, const EpConfig& b);

}  // namespace casweep
