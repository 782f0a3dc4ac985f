#pragma once

#include <functional>
#include <memory>
#include <utility>

#include "casweep/cellular_automaton.hpp"
#include "casweep/core.hpp"

namespace casweep {

// chi : S^m -> S^m as a table of image word indices.
class BlockRule {
public:
    BlockRule() = default;
    BlockRule(unsigned q, unsigned m, std::vector<std::uint32_t> table);

    static BlockRule identity(unsigned q, unsigned m);
    static BlockRule from_function(unsigned q, unsigned m, const std::function<Word(const Word&)>& fn);

    unsigned q() const { return q_; }
    unsigned m() const { return m_; }
    Index size() const { return table_.size(); }
    const std::vector<std::uint32_t>& table() const { return table_; }
    std::uint32_t operator[](Index w) const { return table_[w]; }

    bool is_bijective() const { return inverse_ != nullptr; }
    BlockRule inverse() const;  // throws std::domain_error when not bijective
    const std::vector<std::uint32_t>& inverse_table() const;
    BlockRule reversed() const;  // rev(w) -> rev(chi(w))

    Word apply(const Word& w) const;

    // Sweep as a carry machine: the carry holds the m-1 cells already touched,
    // one input cell enters per step and one finished cell leaves.
    Index carries() const { return carries_; }
    std::pair<Symbol, Index> step(Index carry, Symbol input) const {
        const Index out = table_[carry * q_ + input];
        return {static_cast<Symbol>(out / carries_), out % carries_};
    }

    bool operator==(const BlockRule& o) const { return q_ == o.q_ && m_ == o.m_ && table_ == o.table_; }

private:
    unsigned q_ = 2, m_ = 1;
    Index carries_ = 1;
    std::vector<std::uint32_t> table_{0, 1};
    std::shared_ptr<const std::vector<std::uint32_t>> inverse_;
};

bool is_bijective(const BlockRule& chi);

EpConfig apply_at(const BlockRule& chi, const EpConfig& x, Pos i);
// left-to-right at i, ..., j-1; reversed = true applies at j-1, ..., i
EpConfig sweep_range(const BlockRule& chi, const EpConfig& x, Pos i, Pos j, bool reversed = false);
EpConfig sweep_right_limit(const BlockRule& chi, const EpConfig& x, Pos i);
EpConfig sweep_left_limit(const BlockRule& xi, const EpConfig& x, Pos i);

// Outputs of a carry run: cell(p + k) = prefix[k] for k < |prefix|, then period repeats.
struct RightRun {
    Word prefix;
    Word period;
    std::vector<Index> carries;  // carry before each emitted prefix cell
};
// Run from `carry` occupying [p, p+m-1); inputs y_{p+m-1}, y_{p+m}, ...
RightRun run_right(const BlockRule& chi, Index carry, const EpConfig& y, Pos p);
// Carry after consuming y_[from, to).
Index run_carry(const BlockRule& chi, Index carry, const EpConfig& y, Pos from, Pos to);

struct Representation {
    EpConfig x;
    Pos i = 0;
};

// (y, z) = (xi^{i-}(x), chi^{i+}(x)).
std::pair<EpConfig, EpConfig> representation_eval(const BlockRule& chi, const Representation& rep);

// Number of w in S^m with f(y)_(-inf,i) . w . y_[i+m,inf) representing (y, f(y)).
Index count_representations(const BlockRule& chi, const LocalRule& f, const EpConfig& y, Pos i);

// Cells [lo, lo+|w|) of x overwritten by w.
EpConfig overwrite(const EpConfig& x, Pos lo, const Word& w);

}  // namespace casweep
