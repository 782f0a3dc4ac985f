// One PASS/FAIL line per acceptance criterion. All comparisons are exact
// (integers, rationals, booleans, cell-wise equality); there are no tolerances.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "casweep/cli.hpp"
#include "casweep/closing.hpp"
#include "casweep/hierarchy.hpp"
#include "casweep/io.hpp"
#include "casweep/mealy.hpp"
#include "casweep/synthesis.hpp"
#include "casweep/zeta.hpp"

using namespace casweep;
namespace fs = std::filesystem;

namespace {

std::string data(const std::string& rel) { return (fs::path(CASWEEP_DATA_DIR) / rel).string(); }

// cell-wise comparison over [lo, hi)
bool cells_equal(const EpConfig& a, const EpConfig& b, Pos lo, Pos hi) {
    for (Pos i = lo; i < hi; ++i)
        if (a.cell(i) != b.cell(i)) return false;
    return true;
}

// span covering both centers plus three periods of every tail
std::pair<Pos, Pos> three_periods(const EpConfig& a, const EpConfig& b) {
    const auto L = static_cast<Pos>(lcm64(a.left_period.size(), b.left_period.size()));
    const auto R = static_cast<Pos>(lcm64(a.right_period.size(), b.right_period.size()));
    return {std::min(a.center_start, b.center_start) - 3 * L, std::max(a.center_end(), b.center_end()) + 3 * R};
}

struct Check {
    bool ok = true;
    std::ostringstream why;
    void expect(bool c, const std::string& what) {
        if (!c) {
            if (!ok) why << "; ";
            why << what;
            ok = false;
        }
    }
};

Check c1() {
    Check k;
    const LocalRule f = named_rule("sigma2_x_sigma3inv");
    const StairSet s = enumerate_stairs(f, 1);
    k.expect(s.cardinality == 324, "|Psi_3| = " + std::to_string(s.cardinality));
    const SliderReport r = slider_exists(f);
    k.expect(!r.exists, "reported a slider");
    k.expect(r.violating_primes == std::vector<std::uint64_t>{3}, "violating primes differ from {3}");
    return k;
}

Check c2() {
    Check k;
    const LocalRule f = named_rule("xor_left");
    k.expect(f.anchor == -1 && f.width == 2, "xor_left neighborhood is not {-1,0}");
    k.expect(lambda(f).vp(2) == 1, "v_2(lambda) = " + std::to_string(lambda(f).vp(2)));
    k.expect(!slider_exists(f).exists, "reported a slider");
    return k;
}

Check c3() {
    Check k;
    const BlockRule chi = BlockRule::from_function(2, 2, [](const Word& w) { return Word{(w[0] + w[1]) % 2, w[1]}; });
    k.expect(is_slider_rule_for(chi, named_rule("ca102")), "(a,b)->(a+b,b) is not a slider for CA 102");
    const SliderReport r = slider_exists(named_rule("ca102"));
    k.expect(r.exists, "CA 102 has no slider");
    k.expect(r.lambda && *r.lambda == ValuedRational(1), "lambda(CA 102) != 1");
    return k;
}

Check c4() {
    Check k;
    const BlockRule swap(2, 2, {0, 2, 1, 3});
    k.expect(is_slider_rule_for(swap, LocalRule::shift(2)), "swap is not a slider for the shift");
    // x = (sigma y on cells < 0) s (y on cells >= 1); both sweeps start at 0
    Rng rng(4);
    for (int t = 0; t < 20; ++t) {
        const EpConfig y = random_config(rng, 2, 3, 6, 4);
        const Pos hi = std::max<Pos>(1, y.center_end());
        Word mid{static_cast<Symbol>(t % 2)};
        const Word tail = y.cells(1, hi);
        mid.insert(mid.end(), tail.begin(), tail.end());
        const EpConfig x = splice(y.shifted(1), 0, mid, y.cells(hi, hi + static_cast<Pos>(y.right_period.size())));
        const auto [yy, zz] = representation_eval(swap, {x, 0});
        const EpConfig sy = y.shifted(1);
        auto [lo, hi2] = three_periods(y, sy);
        k.expect(cells_equal(yy, y, lo, hi2) && cells_equal(zz, sy, lo, hi2), "representation is not (y, sigma y)");
    }
    return k;
}

Check c5() {
    Check k;
    for (const char* name : {"identity", "shift", "ca102"}) {
        const LocalRule f = named_rule(name);
        const Synthesis s = synthesize(f);
        Rng rng(5);
        for (int t = 0; t < 5; ++t) {
            const EpConfig y = random_config(rng, f.q, 3, 6, 4);
            for (Pos i = -2; i <= 2; ++i) {
                const Index N = count_representations(s.rule, f, y, i);
                k.expect(N * s.psi == ipow(f.q, s.n), std::string(name) + ": N*|Psi| != q^n");
            }
        }
    }
    return k;
}

Check c6() {
    Check k;
    const fs::path dir = fs::path(CASWEEP_SCRATCH_DIR) / "acceptance";
    fs::create_directories(dir);
    for (const char* name : {"identity", "shift", "ca102"}) {
        const Synthesis s = synthesize(named_rule(name));
        k.expect(s.rule.is_bijective(), std::string(name) + ": not bijective");
        k.expect(s.rule.m() == 3 * s.m + 1, std::string(name) + ": block length != 3m+1");
        const std::string out = (dir / (std::string(name) + ".json")).string();
        io::save_json(out, io::to_json(s.rule));
        std::ostringstream o, e;
        const int code = cli::run({"verify", "--exact", out, data(std::string("rules/") + name + ".json")}, o, e);
        k.expect(code == 0, std::string(name) + ": verify --exact exit " + std::to_string(code));
    }
    return k;
}

Check c7() {
    Check k;
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        const unsigned n = 1 + static_cast<unsigned>(t % 3);
        std::vector<std::uint32_t> tb(ipow(2, n));
        for (std::uint32_t a = 0; a < tb.size(); ++a) tb[a] = a;
        std::shuffle(tb.begin(), tb.end(), rng);
        const MealyAutomaton M = mealy_from_block(BlockRule(2, n, tb));
        const GoodStates g = good_states(M);
        k.expect(std::count(g.good.begin(), g.good.end(), 1) == static_cast<long>(M.states),
                 "rule " + std::to_string(t) + " has bad states");
    }
    return k;
}

Check c8() {
    Check k;
    const BlockRule chi = io::block_from_json(io::load_json(data("blocks/notclosed.json")));
    // symbol 2a+b is the pair (a,b): 0 = (0,0), 1 = (0,1), 2 = (1,0)
    for (Pos n = 0; n <= 8; ++n) {
        const EpConfig y(4, {0}, Word(static_cast<std::size_t>(n), 1), -n, {1});
        const SweepOutcome o = sweeper_eval(chi, y);
        const EpConfig want(4, {0}, {}, -n - 1, {2});
        if (!o.converges) {
            k.expect(false, "diverges for n = " + std::to_string(n));
            continue;
        }
        auto [lo, hi] = three_periods(o.limits[0], want);
        k.expect(cells_equal(o.limits[0], want, lo, hi), "limit differs for n = " + std::to_string(n));
        // far from the fixed point only near the origin, yet the images stay apart
        k.expect(o.limits[0].cell(0) == 2, "image at 0 is not (1,0)");
    }
    const EpConfig fixed = EpConfig::constant(4, 1);
    const SweepOutcome o = sweeper_eval(chi, fixed);
    k.expect(o.converges && cells_equal(o.limits[0], fixed, -6, 6), "(0,1)^Z is not fixed");
    return k;
}

Check c9() {
    Check k;
    std::vector<std::pair<std::string, BlockRule>> blocks;
    for (const char* b : {"swap", "xor_block", "identity_block"})
        blocks.emplace_back(b, io::block_from_json(io::load_json(data(std::string("blocks/") + b + ".json"))));
    for (const char* name : {"identity", "shift", "ca102"}) blocks.emplace_back(std::string("synth_") + name, synthesize(named_rule(name)).rule);
    for (const auto& [bn, chi] : blocks)
        for (const char* rn : {"identity", "shift", "shift_inv", "ca102", "xor_left", "and_rule"}) {
            const LocalRule f = named_rule(rn);
            const bool exact = is_slider_rule_for(chi, f);
            const bool agree = slider_sweeper_agree(chi, f, 100, 9);
            const bool sweeps = sweeper_matches(chi, f, 100, 9);
            k.expect(agree && sweeps == exact, bn + " vs " + rn);
        }
    return k;
}

Check c10() {
    Check k;
    const LocalRule f = named_rule("and_rule");
    const ClosingVerdict v = left_closing_decide(f);
    k.expect(!v.closing, "AND reported left-closing");
    if (!v.closing && v.witness_a && v.witness_b) {
        const EpConfig &a = *v.witness_a, &b = *v.witness_b;
        auto [lo, hi] = three_periods(a, b);
        lo -= 4;
        hi += 4;
        k.expect(!cells_equal(a, b, lo, hi), "witnesses are equal");
        const Pos R = static_cast<Pos>(lcm64(a.right_period.size(), b.right_period.size()));
        k.expect(cells_equal(a, b, hi, hi + 3 * R), "witnesses are not right-asymptotic");
        const EpConfig fa = apply_ep(f, a), fb = apply_ep(f, b);
        // images straight from the table
        bool same = true;
        for (Pos i = lo; i < hi; ++i) {
            Index wa = 0, wb = 0;
            for (unsigned d = 0; d < f.width; ++d) {
                wa = wa * 2 + a.cell(i + f.anchor + d);
                wb = wb * 2 + b.cell(i + f.anchor + d);
            }
            same = same && f.table[wa] == f.table[wb] && fa.cell(i) == f.table[wa] && fb.cell(i) == f.table[wb];
        }
        k.expect(same, "images differ");
    } else if (!v.closing) {
        k.expect(false, "no witness returned");
    }
    return k;
}

Check c11() {
    Check k;
    for (unsigned q : {2u, 3u}) {
        k.expect(lambda(LocalRule::identity(q)) == ValuedRational(1), "lambda(id) != 1");
        k.expect(lambda(LocalRule::shift(q)) == ValuedRational(1, q), "lambda(sigma) != 1/q");
        k.expect(lambda(LocalRule::shift(q, -1)) == ValuedRational(q), "lambda(sigma^-1) != q");
    }
    return k;
}

Check c12() {
    Check k;
    for (const char* name : {"shift", "ca102"}) {
        const LocalRule f = named_rule(name);
        const Decomposition d = decompose_biclosing(f);
        k.expect(verify_decomposition(d, 100, 12), std::string(name) + ": decomposition fails");
        Rng rng(12);
        for (int t = 0; t < 100; ++t) {
            const EpConfig y = random_config(rng, 2);
            const auto z = evaluate(d, y);
            const EpConfig fy = apply_ep(f, y);
            auto [lo, hi] = three_periods(y, fy);
            k.expect(z && cells_equal(*z, fy, lo - 4, hi + 4), std::string(name) + ": sample differs");
        }
    }
    return k;
}

Check c13() {
    Check k;
    const std::vector<std::pair<std::string, LocalRule>> targets{
        {"swap", LocalRule::shift(2)}, {"xor_block", named_rule("ca102")}, {"identity_block", LocalRule::identity(2)},
        {"notclosed", LocalRule::identity(4)}, {"toggle", LocalRule::identity(2)}};
    for (const auto& [name, f] : targets) {
        const BlockRule chi = io::block_from_json(io::load_json(data("blocks/" + name + ".json")));
        Rng rng(13);
        const unsigned q = chi.q();
        if (chi.is_bijective()) {
            const ZAutomaton S = slider_relation_automaton(chi);
            const bool known = name != "notclosed";  // the others are sliders of f
            for (int t = 0; t < 200; ++t) {
                const Representation rep{random_config(rng, q, 3, 6, 4), static_cast<Pos>(draw(rng, 9)) - 4};
                const auto [y, z] = representation_eval(chi, rep);
                k.expect(member(S, {y, z}), name + ": represented pair rejected");
                if (known) {
                    const EpConfig z2 = overwrite(z, static_cast<Pos>(draw(rng, 9)) - 4, {static_cast<Symbol>(draw(rng, q))});
                    k.expect(member(S, {y, z2}) == ep_equal(z2, apply_ep(f, y)), name + ": perturbed pair misjudged");
                }
            }
        }
        const ZAutomaton W = sweeper_relation_automaton(chi);
        for (int t = 0; t < 200; ++t) {
            const EpConfig y = random_config(rng, q, 3, 6, 4);
            const SweepOutcome o = sweeper_eval(chi, y);
            const EpConfig& z = o.limits[draw(rng, o.limits.size())];
            k.expect(member(W, {y, z}), name + ": sweeper limit rejected");
            const EpConfig z2 = overwrite(z, static_cast<Pos>(draw(rng, 9)) - 4, {static_cast<Symbol>(draw(rng, q))});
            bool is_limit = false;
            for (const auto& l : o.limits) is_limit = is_limit || ep_equal(l, z2);
            k.expect(member(W, {y, z2}) == is_limit, name + ": perturbed limit misjudged");
        }
    }
    return k;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
        {"stair count 324 and prime 3 for sigma2 x sigma3^-1", c1},
        {"left XOR: v_2(lambda) = 1, no slider", c2},
        {"right XOR block rule is a slider for CA 102, lambda = 1", c3},
        {"swap is a slider for the shift; representations give (y, sigma y)", c4},
        {"N * |Psi_n| = q^n at 5 anchors x 5 configurations", c5},
        {"synthesized rules are bijective, length 3m+1, pass verify --exact", c6},
        {"20 random bijective rules have only good Mealy states", c7},
        {"non-closed sweeper limit family and fixed point", c8},
        {"sampled slider/sweeper agreement matches the exact decision", c9},
        {"AND rule non-closing witness re-validates", c10},
        {"lambda ladder for identity and shifts, q = 2, 3", c11},
        {"two-stage decomposition of sigma and CA 102 on 100 samples", c12},
        {"automaton membership matches evaluation on 200 probes", c13},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Check k;
        try {
            k = criteria[i].second();
        } catch (const std::exception& e) {
            k.ok = false;
            k.why << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (k.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " [exact, "
                  << secs << "s]";
        if (!k.ok) std::cout << " -- " << k.why.str();
        std::cout << std::endl;
        failed += !k.ok;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed ? 1 : 0;
}
