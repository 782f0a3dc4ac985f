#include <doctest.h>

#include <map>

#include "casweep/mealy.hpp"
#include "casweep/synthesis.hpp"
#include "oracles.hpp"

using namespace casweep;

namespace {

// Good states seen along lasso sequences ... p p p u (u at the right end): the
// tail evaluations delta*(e_-i, e_-i+1 .. e_0) for i deep inside the periodic part.
std::set<Index> lasso_good(const MealyAutomaton& M, std::size_t max_u, std::size_t max_p) {
    const auto Q = static_cast<unsigned>(M.states);
    std::set<Index> good;
    for (std::size_t pl = 1; pl <= max_p; ++pl)
        for (Index pi = 0; pi < ipow(Q, static_cast<unsigned>(pl)); ++pi)
            for (std::size_t ul = 0; ul <= max_u; ++ul)
                for (Index ui = 0; ui < ipow(Q, static_cast<unsigned>(ul)); ++ui) {
                    const Word p = word_of_index(pi, Q, pl), u = word_of_index(ui, Q, ul);
                    // sequence read right to left: u reversed, then p reversed repeatedly
                    Word seq(u.rbegin(), u.rend());
                    while (seq.size() < ul + 400) seq.insert(seq.end(), p.rbegin(), p.rend());
                    // T[s] = delta*(s, e_-i+1 .. e_0), built by prepending letters
                    std::vector<Index> T(Q);
                    for (Index s = 0; s < Q; ++s) T[s] = s;
                    for (std::size_t i = 0; i < seq.size(); ++i) {
                        if (i >= ul + 200) good.insert(T[seq[i]]);
                        std::vector<Index> T2(Q);
                        for (Index s = 0; s < Q; ++s) T2[s] = T[M.delta(s, seq[i])];
                        T = std::move(T2);
                    }
                }
    return good;
}

std::set<Index> as_set(const GoodStates& g) {
    std::set<Index> s;
    for (Index k = 0; k < g.good.size(); ++k)
        if (g.good[k]) s.insert(k);
    return s;
}

BlockRule random_table(Rng& rng, unsigned q, unsigned m, bool bijective) {
    std::vector<std::uint32_t> t(ipow(q, m));
    for (std::uint32_t k = 0; k < t.size(); ++k) t[k] = bijective ? k : static_cast<std::uint32_t>(draw(rng, t.size()));
    if (bijective) std::shuffle(t.begin(), t.end(), rng);
    return BlockRule(q, m, t);
}

EpConfig constant_limit(unsigned q, Symbol l, Pos from, Symbol r) { return EpConfig(q, {l}, {}, from, {r}); }

}  // namespace

TEST_CASE("mealy table splits the sweep") {
    const BlockRule swap(2, 2, {0, 2, 1, 3});
    const MealyAutomaton M = mealy_from_block(swap);
    CHECK(M.states == 4);
    CHECK(M.is_bijective());
    Rng rng(2);
    for (Index s = 0; s < 4; ++s)
        for (Index a = 0; a < 4; ++a) {
            Word qa = word_of_index(s, 2, 2), aw = word_of_index(a, 2, 2);
            qa.insert(qa.end(), aw.begin(), aw.end());
            const oracle::Window w =
                oracle::forward_sweep(swap, EpConfig(2, {0}, qa, 0, {0}), 0, 2, 0);
            CHECK(M.output[s * 4 + a] == word_index(Word(w.cells.begin(), w.cells.begin() + 2), 2));
            CHECK(M.delta(s, a) == word_index(Word(w.cells.begin() + 2, w.cells.begin() + 4), 2));
        }
}

TEST_CASE("good states match lasso search") {
    Rng rng(31);
    for (int t = 0; t < 30; ++t) {
        const MealyAutomaton M = mealy_from_block(random_table(rng, 2, t % 2 ? 2 : 1, false));
        CHECK(as_set(good_states(M)) == lasso_good(M, 2, M.states <= 2 ? 4 : 3));
    }
    for (const Word& tb : {Word{0, 0, 0, 0}, Word{2, 0, 0, 0}, Word{0, 2, 0, 0}, Word{2, 2, 0, 0}}) {
        const MealyAutomaton M = mealy_from_block(BlockRule(2, 2, {tb[0], tb[1], tb[2], tb[3]}));
        const auto g = as_set(good_states(M));
        CHECK(g == lasso_good(M, 2, 3));
        CHECK(g.size() < 4);
    }
}

TEST_CASE("constant transitions have a single good state") {
    MealyAutomaton M;
    M.states = 3;
    M.output.assign(9, 1);
    M.next.assign(9, 2);
    CHECK(as_set(good_states(M)) == std::set<Index>{2});
}

TEST_CASE("bijective rules have only good states") {
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        const BlockRule chi = random_table(rng, 2, 1 + static_cast<unsigned>(t % 3), true);
        const MealyAutomaton M = mealy_from_block(chi);
        CHECK(M.is_bijective());
        const GoodStates g = good_states(M);
        CHECK(std::count(g.good.begin(), g.good.end(), 1) == static_cast<long>(M.states));
    }
    CHECK(as_set(good_states(mealy_from_block(BlockRule::identity(2, 2)))).size() == 4);
}

TEST_CASE("goodness is forward closed") {
    Rng rng(8);
    for (int t = 0; t < 30; ++t) {
        const MealyAutomaton M = mealy_from_block(random_table(rng, 2, 2, t % 3 == 0));
        const GoodStates g = good_states(M);
        for (Index s = 0; s < M.states; ++s)
            if (g.good[s])
                for (Index a = 0; a < M.states; ++a) CHECK(g.good[M.delta(s, a)]);
    }
}

TEST_CASE("transformation cap") {
    Rng rng(9);
    CHECK_THROWS_AS(good_states(mealy_from_block(random_table(rng, 2, 3, true)), 2), ResourceError);
}

TEST_CASE("sweeper limits match the finite sweeps") {
    Rng rng(10);
    for (int t = 0; t < 120; ++t) {
        const unsigned m = 1 + static_cast<unsigned>(t % 3);
        const BlockRule chi = random_table(rng, 2, m, t % 2 == 0);
        const EpConfig y = random_config(rng, 2, 3, 5, 3);
        const SweepOutcome o = sweeper_eval(chi, y);
        const Pos lo = y.center_start - 12, hi = y.center_end() + 12;
        std::set<Word> want;
        for (const auto& z : o.limits) want.insert(z.cells(lo, hi));
        // anchors deep in the left tail, across many periods
        CHECK(oracle::sweep_window_family(chi, y, lo - 150, 120, lo, hi) == want);
        CHECK(o.converges == (o.limits.size() == 1));
    }
}

TEST_CASE("a non-closed sweeper") {
    const BlockRule chi(4, 2, {0, 8, 2, 3, 4, 5, 6, 7, 1, 9, 10, 11, 12, 13, 14, 15});
    for (Pos n = 1; n <= 6; ++n) {
        const EpConfig y(4, {0}, Word(static_cast<std::size_t>(n), 1), -n, {1});
        const SweepOutcome o = sweeper_eval(chi, y);
        REQUIRE(o.converges);
        CHECK(ep_equal(o.limits[0], constant_limit(4, 0, -n - 1, 2)));
        CHECK(oracle::sweep_window_family(chi, y, -60, 20, -n - 8, 8) ==
              std::set<Word>{o.limits[0].cells(-n - 8, 8)});
    }
    const SweepOutcome ones = sweeper_eval(chi, EpConfig::constant(4, 1));
    REQUIRE(ones.converges);
    CHECK(ep_equal(ones.limits[0], EpConfig::constant(4, 1)));
}

TEST_CASE("a toggling sweeper diverges") {
    const SweepOutcome o = sweeper_eval(BlockRule(2, 2, {1, 1, 2, 2}), EpConfig::constant(2, 0));
    CHECK_FALSE(o.converges);
    REQUIRE(o.limits.size() == 2);
    const bool a = ep_equal(o.limits[0], EpConfig::periodic(2, {1, 0}));
    CHECK(ep_equal(o.limits[a ? 1 : 0], EpConfig::periodic(2, {0, 1})));
    // a single-cell flip converges: every cell is flipped exactly once
    const SweepOutcome flip = sweeper_eval(BlockRule(2, 1, {1, 0}), EpConfig::constant(2, 0));
    CHECK(flip.converges);
    CHECK(ep_equal(flip.limits[0], EpConfig::constant(2, 1)));
}

TEST_CASE("sweepers and sliders agree") {
    const BlockRule swap(2, 2, {0, 2, 1, 3});
    CHECK(slider_sweeper_agree(swap, LocalRule::shift(2), 100, 3));
    CHECK(sweeper_matches(swap, LocalRule::shift(2), 100, 3));
    CHECK(slider_sweeper_agree(swap, LocalRule::identity(2), 100, 3));
    CHECK_FALSE(sweeper_matches(swap, LocalRule::identity(2), 100, 3));
    const Synthesis s = synthesize(named_rule("ca102"));
    CHECK(slider_sweeper_agree(s.rule, named_rule("ca102"), 100, 4));
    CHECK(sweeper_matches(s.rule, named_rule("ca102"), 100, 4));
    CHECK_THROWS_AS(slider_sweeper_agree(BlockRule(2, 2, {0, 0, 0, 0}), LocalRule::identity(2), 10, 1),
                    std::domain_error);
}
