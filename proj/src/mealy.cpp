#include "casweep/mealy.hpp"

#include <map>
#include <unordered_map>
#include <unordered_set>

#include "casweep/graph.hpp"
#include "casweep/synthesis.hpp"

namespace casweep {

bool MealyAutomaton::is_bijective() const {
    std::vector<char> hit(states * states, 0);
    for (Index i = 0; i < states * states; ++i) {
        const Index img = Index{output[i]} * states + next[i];
        if (hit[img]) return false;
        hit[img] = 1;
    }
    return true;
}

MealyAutomaton mealy_from_block(const BlockRule& chi) {
    const unsigned q = chi.q(), n = chi.m();
    const Index Q = ipow(q, n);
    if (Q * Q > (Index{1} << 28)) throw ResourceError("Mealy table too large");
    MealyAutomaton M;
    M.states = Q;
    M.output.resize(Q * Q);
    M.next.resize(Q * Q);
    for (Index s = 0; s < Q; ++s) {
        Word w = word_of_index(s, q, n);
        for (Index a = 0; a < Q; ++a) {
            Word qa = w;
            const Word aw = word_of_index(a, q, n);
            qa.insert(qa.end(), aw.begin(), aw.end());
            for (unsigned p = 0; p < n; ++p) {
                const Word img = chi.apply(Word(qa.begin() + p, qa.begin() + p + n));
                std::copy(img.begin(), img.end(), qa.begin() + p);
            }
            M.output[s * Q + a] = static_cast<std::uint32_t>(word_index(Word(qa.begin(), qa.begin() + n), q));
            M.next[s * Q + a] = static_cast<std::uint32_t>(word_index(Word(qa.begin() + n, qa.end()), q));
        }
    }
    return M;
}

namespace {
struct VecHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};
}  // namespace

GoodStates good_states(const MealyAutomaton& M, std::size_t cap) {
    // Node T stands for the tails (e_{-i+1} .. e_0) through T(s) = delta*(s e_{-i+1} .. e_0);
    // prepending e gives T'(s) = T(delta(s, e)) and the tail starting at e evaluates to T(e).
    const auto Q = static_cast<std::uint32_t>(M.states);
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VecHash> id;
    std::vector<std::vector<std::uint32_t>> nodes;
    graph::Adjacency adj;
    std::vector<std::uint32_t> ident(Q);
    for (std::uint32_t s = 0; s < Q; ++s) ident[s] = s;
    id.emplace(ident, 0);
    nodes.push_back(ident);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        adj.emplace_back();
        for (std::uint32_t e = 0; e < Q; ++e) {
            std::vector<std::uint32_t> t(Q);
            for (std::uint32_t s = 0; s < Q; ++s) t[s] = nodes[k][M.delta(s, e)];
            auto [it, fresh] = id.emplace(t, static_cast<std::uint32_t>(nodes.size()));
            if (fresh) {
                if (nodes.size() >= cap)
                    throw ResourceError("transformation graph exceeds " + std::to_string(cap) + " nodes");
                nodes.push_back(std::move(t));
            }
            adj[k].push_back(it->second);
        }
    }
    const graph::Sccs scc = graph::tarjan(adj);
    GoodStates g;
    g.good.assign(Q, 0);
    g.transformations = nodes.size();
    for (std::size_t k = 0; k < nodes.size(); ++k)
        for (std::uint32_t e = 0; e < Q; ++e)
            if (scc.comp[adj[k][e]] == scc.comp[k] && scc.nontrivial[scc.comp[k]]) g.good[nodes[k][e]] = 1;
    return g;
}

SweepOutcome sweeper_eval(const BlockRule& chi, const EpConfig& y) {
    if (y.q != chi.q()) throw std::domain_error("configuration and block rule alphabets differ");
    const unsigned q = chi.q();
    const auto m = static_cast<Pos>(chi.m());
    const auto L = static_cast<Pos>(y.left_period.size());
    const Pos cs = y.center_start;
    // Reference position B: the carry there occupies [B, B+m-1) and every input
    // consumed before it lies in the left periodic zone.
    const Pos B = cs - m + 1;
    auto T = [&](Index c) { return run_carry(chi, c, y, cs - L, cs); };

    // a start i = B - rho - jL reaches B with carry T^j(s_rho)
    std::map<Index, Index> cycle_len;
    for (Pos rho = 0; rho < L; ++rho) {
        const Pos i = B - rho;
        Index c = run_carry(chi, word_index(y.cells(i, i + m - 1), q), y, i + m - 1, cs);
        std::unordered_map<Index, std::size_t> seen;
        std::vector<Index> orbit;
        while (!seen.count(c)) {
            seen.emplace(c, orbit.size());
            orbit.push_back(c);
            c = T(c);
        }
        const std::size_t from = seen.at(c);
        for (std::size_t k = from; k < orbit.size(); ++k) cycle_len[orbit[k]] = orbit.size() - from;
    }

    SweepOutcome out;
    out.cycle_states = cycle_len.size();
    for (const auto& [c, len] : cycle_len) {
        const Pos span = static_cast<Pos>(len) * L;
        // the recurring run arrives at B with carry c after a full cycle from c
        Word left;
        Index carry = c;
        for (Pos k = cs - span; k < cs; ++k) {
            auto [o, nxt] = chi.step(carry, y.cell(k));
            left.push_back(o);
            carry = nxt;
        }
        if (carry != c) throw IntegrityError("sweeper cycle did not close");
        const RightRun run = run_right(chi, c, y, B);
        EpConfig z = EpConfig(q, left, run.prefix, B, run.period).normalized();
        bool dup = false;
        for (const auto& seen : out.limits) dup = dup || ep_equal(seen, z);
        if (!dup) out.limits.push_back(std::move(z));
    }
    out.converges = out.limits.size() == 1;
    return out;
}

bool sweeper_matches(const BlockRule& chi, const LocalRule& f, std::size_t samples, std::uint64_t seed) {
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        const EpConfig y = random_config(rng, chi.q(), 3, 2 * chi.m() + 6);
        const SweepOutcome o = sweeper_eval(chi, y);
        if (!o.converges || !ep_equal(o.limits[0], apply_ep(f, y))) return false;
    }
    return true;
}

bool slider_sweeper_agree(const BlockRule& chi, const LocalRule& f, std::size_t samples, std::uint64_t seed) {
    if (!chi.is_bijective()) throw std::domain_error("slider_sweeper_agree requires a bijective block rule");
    return sweeper_matches(chi, f, samples, seed) == verify_slider(chi, f, samples, seed);
}

}  // namespace casweep
