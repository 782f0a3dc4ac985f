#pragma once

#include <optional>

#include "casweep/block_rule.hpp"

namespace casweep {

// Mealy automaton with Q = A, stored as mu(s a) = a' s' over dense indices.
struct MealyAutomaton {
    Index states = 0;
    std::vector<std::uint32_t> output, next;  // indexed by s * states + a

    Index delta(Index s, Index a) const { return next[s * states + a]; }
    bool is_bijective() const;
};

// States are blocks of length n = m; mu(q, a) splits chi^[0,n)(q a).
MealyAutomaton mealy_from_block(const BlockRule& chi);

struct GoodStates {
    std::vector<char> good;
    std::size_t transformations = 0;  // size of the explored transformation graph
};

// Good states via the graph of transformations T : Q -> Q reachable from the identity.
GoodStates good_states(const MealyAutomaton& mealy, std::size_t max_transformations = 1u << 20);

struct SweepOutcome {
    bool converges = false;
    std::vector<EpConfig> limits;  // distinct accumulation points; one when converging
    std::size_t cycle_states = 0;  // carries recurring at the reference position
};

// Accumulation points of chi^{i+}(y) as i -> -inf, computed exactly.
SweepOutcome sweeper_eval(const BlockRule& chi, const EpConfig& y);

// Aggregate agreement: "sweeper gives f on all sampled y" vs verify_slider.
bool slider_sweeper_agree(const BlockRule& chi, const LocalRule& f, std::size_t samples, std::uint64_t seed);
// The sweeper half of the above.
bool sweeper_matches(const BlockRule& chi, const LocalRule& f, std::size_t samples, std::uint64_t seed);

}  // namespace casweep
