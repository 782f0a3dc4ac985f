#pragma once

#include "casweep/synthesis.hpp"

namespace casweep {

enum class Direction { LeftToRight, RightToLeft };

std::string direction_name(Direction d);
Direction direction_from_name(const std::string& s);

// A RightToLeft stage is run by reversing the tape, sweeping with rule.reversed()
// from left to right, and reversing back.
struct DirectedSlider {
    BlockRule rule;
    Direction direction = Direction::LeftToRight;
};

struct Decomposition {
    std::vector<DirectedSlider> stages;  // applied in order
    LocalRule claimed_ca;
    // CA realized by each stage when known (filled by decompose_biclosing)
    std::vector<LocalRule> realized;
};

// Smallest k >= 0 with v_p(lambda) - k v_p(q) <= 0 for every prime p.
int shift_offset_from_lambda(const ValuedRational& lambda, unsigned q);
// The same for f, confirmed with slider_exists at k and k-1. VerdictError if f is
// not left-closing.
int shift_offset(const LocalRule& f);

// Right-to-left sigma^-k followed by left-to-right sigma^k o f.
// VerdictError (with witnesses) when f is not bi-closing.
Decomposition decompose_biclosing(const LocalRule& f);

// Limit of one stage on y; nullopt when the sweep does not converge.
std::optional<EpConfig> evaluate_stage(const DirectedSlider& s, const EpConfig& y);
std::optional<EpConfig> evaluate(const Decomposition& d, const EpConfig& y);

bool verify_decomposition(const Decomposition& d, std::size_t samples, std::uint64_t seed);

// lambda of each realized stage CA; throws std::domain_error if `realized` is missing.
std::vector<ValuedRational> stage_lambdas(const Decomposition& d);

}  // namespace casweep
