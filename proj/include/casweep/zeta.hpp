#pragma once

#include <optional>

#include "casweep/block_rule.hpp"

namespace casweep {

// Automaton over bi-infinite words on a product alphabet of `tracks` copies of
// S = {0..q-1}. At step s, track k reads the cell at position s + offsets[k], so a
// run reading (y, z) may look ahead on y without buffering. A bi-infinite path is
// accepting when it visits `initial` infinitely often to the left and `final` to
// the right. Letters pack the tracks big-endian: sum_k a_k q^(tracks-1-k).
struct ZAutomaton {
    struct Edge {
        std::uint32_t from, letter, to;
    };

    unsigned q = 2;
    unsigned tracks = 1;
    std::vector<Pos> offsets{0};
    std::size_t states = 0;
    std::vector<Edge> edges;
    std::vector<char> initial, final_;

    std::uint32_t letters() const;
    Symbol digit(std::uint32_t letter, unsigned track) const;
    void validate() const;
};

// Limits on automaton sizes created by products and retiming.
inline std::size_t& max_automaton_states() {
    static std::size_t cap = 4'000'000;
    return cap;
}

bool member(const ZAutomaton& A, const std::vector<EpConfig>& tracks);
// Membership of a single configuration over the packed alphabet (offsets already applied).
bool member_packed(const ZAutomaton& A, const EpConfig& word);

ZAutomaton trim(const ZAutomaton& A);
bool is_empty(const ZAutomaton& A);
// Tracks of an accepted eventually periodic word, or nullopt when empty.
std::optional<std::vector<EpConfig>> nonempty_witness(const ZAutomaton& A);

// Same language, different read offsets.
ZAutomaton retime(const ZAutomaton& A, const std::vector<Pos>& offsets);
// Embed into `tracks` tracks; old track k becomes placement[k]; other tracks are free.
ZAutomaton lift(const ZAutomaton& A, unsigned tracks, const std::vector<unsigned>& placement,
                const std::vector<Pos>& offsets);
// Intersection; B is retimed to A's offsets when they differ.
ZAutomaton intersect(const ZAutomaton& A, const ZAutomaton& B);
ZAutomaton project(const ZAutomaton& A, unsigned track);

ZAutomaton full_automaton(unsigned q, unsigned tracks);
ZAutomaton diagonal_automaton(unsigned q);  // {(y, y)}
// Words whose tracks i and j differ somewhere.
ZAutomaton differs_automaton(unsigned q, unsigned tracks, unsigned i, unsigned j, const std::vector<Pos>& offsets);

// Tracks (y, z) with z = chi^{i+}(x), y = xi^{i-}(x) for some representation (x, i).
ZAutomaton slider_relation_automaton(const BlockRule& chi);
// Tracks (y, z) with z the limit of a subsequence of chi^{i+}(y), i -> -inf.
ZAutomaton sweeper_relation_automaton(const BlockRule& chi);
// Tracks (y, z) with z != f(y).
ZAutomaton graph_mismatch_automaton(const LocalRule& f);

bool is_function(const ZAutomaton& A);
bool is_slider_rule_for(const BlockRule& chi, const LocalRule& f);
bool sweeper_defines_function(const BlockRule& chi);

}  // namespace casweep
