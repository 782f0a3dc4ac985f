#include "casweep/closing.hpp"

#include <bit>
#include <deque>
#include <unordered_map>

#include "casweep/kernels.hpp"

namespace casweep {

std::string reason_name(RadiusCheck::Reason r) {
    switch (r) {
        case RadiusCheck::Holds: return "holds";
        case RadiusCheck::BelowTwiceRadius: return "below_twice_radius";
        case RadiusCheck::NotUnique: return "not_unique";
        case RadiusCheck::NoExtension: return "no_extension";
    }
    return "?";
}

int working_radius(const LocalRule& f) { return std::max(1, f.radius()); }

RadiusCheck is_strong_left_closing_radius(const LocalRule& f, unsigned m) {
    RadiusCheck res;
    res.m = m;
    res.r = working_radius(f);
    if (m < 2 * static_cast<unsigned>(res.r)) {
        res.reason = RadiusCheck::BelowTwiceRadius;
        return res;
    }
    const LocalRule fr = f.radius_form(res.r);
    const auto masks = kernels::strong_masks_parallel(fr, m);
    const unsigned q = f.q;
    for (std::size_t st = 0; st < masks.size() / q; ++st) {
        std::uint64_t any = 0;
        for (unsigned b = 0; b < q; ++b) any |= masks[st * q + b];
        if (!any) continue;  // (s, t) never occurs
        for (unsigned b = 0; b < q; ++b) {
            const int c = std::popcount(masks[st * q + b]);
            if (c == 1) continue;
            res.reason = c == 0 ? RadiusCheck::NoExtension : RadiusCheck::NotUnique;
            return res;
        }
    }
    res.holds = true;
    return res;
}

namespace {

// Pairs of (w-1)-windows; an edge (c, c') exists where both windows extend to equal images.
struct PairGraph {
    unsigned q = 2;
    unsigned k = 0;  // window length w - 1
    Index side = 1;  // q^k
    struct Edge {
        Index to;
        Symbol c, c2;
    };
    std::vector<std::vector<Edge>> out;
    std::vector<std::vector<std::pair<Index, std::size_t>>> in;  // (source, index in out[source])

    explicit PairGraph(const LocalRule& f) : q(f.q), k(f.width - 1), side(ipow(f.q, f.width - 1)) {
        const Index V = side * side;
        out.resize(V);
        in.resize(V);
        for (Index v = 0; v < V; ++v) {
            const Index u = v / side, u2 = v % side;
            for (Symbol c = 0; c < q; ++c)
                for (Symbol c2 = 0; c2 < q; ++c2) {
                    if (f.table[u * q + c] != f.table[u2 * q + c2]) continue;
                    const Index t = ((u * q + c) % side) * side + (u2 * q + c2) % side;
                    in[t].emplace_back(v, out[v].size());
                    out[v].push_back({t, c, c2});
                }
        }
    }
    bool diagonal(Index v) const { return v / side == v % side; }
};

}  // namespace

std::optional<std::pair<EpConfig, EpConfig>> left_nonclosing_witness(const LocalRule& f0) {
    const LocalRule f = f0.canonical();
    const PairGraph g(f);
    const Index V = g.out.size();

    // vertices with an infinite backward path
    std::vector<char> cyc(V, 1);
    std::vector<std::size_t> indeg(V, 0);
    for (Index v = 0; v < V; ++v) indeg[v] = g.in[v].size();
    std::deque<Index> work;
    for (Index v = 0; v < V; ++v)
        if (!indeg[v]) work.push_back(v);
    while (!work.empty()) {
        const Index v = work.front();
        work.pop_front();
        if (!cyc[v]) continue;
        cyc[v] = 0;
        for (const auto& e : g.out[v])
            if (cyc[e.to] && --indeg[e.to] == 0) work.push_back(e.to);
    }
    // vertices that reach the diagonal
    std::vector<char> reach(V, 0);
    for (Index v = 0; v < V; ++v)
        if (g.diagonal(v)) {
            reach[v] = 1;
            work.push_back(v);
        }
    while (!work.empty()) {
        const Index v = work.front();
        work.pop_front();
        for (const auto& [s, idx] : g.in[v])
            if (!reach[s]) {
                reach[s] = 1;
                work.push_back(s);
            }
    }

    for (Index v1 = 0; v1 < V; ++v1) {
        if (!cyc[v1]) continue;
        for (const auto& e : g.out[v1]) {
            if (e.c == e.c2 || !reach[e.to]) continue;

            // walk backward inside the surviving set until a vertex repeats
            std::vector<const PairGraph::Edge*> back;
            std::vector<Index> verts{v1};
            std::unordered_map<Index, std::size_t> at{{v1, 0}};
            Index cur = v1;
            std::size_t loop_at = 0;
            for (;;) {
                const PairGraph::Edge* pick = nullptr;
                Index src = 0;
                for (const auto& [s, idx] : g.in[cur])
                    if (cyc[s]) {
                        pick = &g.out[s][idx];
                        src = s;
                        break;
                    }
                if (!pick) throw IntegrityError("pair graph pruning left a vertex without predecessor");
                back.push_back(pick);
                cur = src;
                if (auto it = at.find(cur); it != at.end()) {
                    loop_at = it->second;
                    break;
                }
                at.emplace(cur, verts.size());
                verts.push_back(cur);
            }
            // verts[j] --back[j]--> verts[j-1]; the loop is back[loop_at .. end)
            Word la, lb, ca, cb;
            for (std::size_t j = back.size(); j-- > loop_at;) {
                la.push_back(back[j]->c);
                lb.push_back(back[j]->c2);
            }
            for (std::size_t j = loop_at; j-- > 0;) {
                ca.push_back(back[j]->c);
                cb.push_back(back[j]->c2);
            }
            ca.push_back(e.c);
            cb.push_back(e.c2);

            // forward to the diagonal
            std::unordered_map<Index, std::pair<Index, const PairGraph::Edge*>> prev;
            std::deque<Index> bfs{e.to};
            prev[e.to] = {e.to, nullptr};
            Index hit = e.to;
            while (!g.diagonal(hit)) {
                if (bfs.empty()) throw IntegrityError("diagonal unreachable in pair graph");
                const Index v = bfs.front();
                bfs.pop_front();
                if (g.diagonal(v)) {
                    hit = v;
                    break;
                }
                for (const auto& oe : g.out[v])
                    if (!prev.count(oe.to)) {
                        prev[oe.to] = {v, &oe};
                        bfs.push_back(oe.to);
                    }
            }
            Word ta, tb;
            for (Index v = hit; prev[v].second; v = prev[v].first) {
                ta.push_back(prev[v].second->c);
                tb.push_back(prev[v].second->c2);
            }
            ca.insert(ca.end(), ta.rbegin(), ta.rend());
            cb.insert(cb.end(), tb.rbegin(), tb.rend());

            EpConfig a(f.q, la, ca, 0, {0}), b(f.q, lb, cb, 0, {0});
            return std::make_pair(a.normalized(), b.normalized());
        }
    }
    return std::nullopt;
}

ClosingVerdict left_closing_decide(const LocalRule& f, unsigned max_radius) {
    ClosingVerdict v;
    if (auto w = left_nonclosing_witness(f)) {
        v.witness_a = w->first;
        v.witness_b = w->second;
        return v;
    }
    // left-closing, so some strong radius exists; climb to it
    const unsigned r = static_cast<unsigned>(working_radius(f));
    for (unsigned m = 2 * r; m <= std::max(max_radius, 2 * r); ++m)
        if (is_strong_left_closing_radius(f, m).holds) {
            v.closing = true;
            v.radius = m;
            return v;
        }
    throw ResourceError("no strong left-closing radius up to " + std::to_string(max_radius));
}

ClosingVerdict right_closing_decide(const LocalRule& f, unsigned max_radius) {
    ClosingVerdict v = left_closing_decide(mirror(f), max_radius);
    if (v.witness_a) {
        v.witness_a = v.witness_a->reversed().normalized();
        v.witness_b = v.witness_b->reversed().normalized();
    }
    return v;
}

bool right_asymptotic(const EpConfig& a, const EpConfig& b) {
    const Pos H = std::max(a.center_end(), b.center_end());
    const auto p = static_cast<Pos>(lcm64(a.right_period.size(), b.right_period.size()));
    return a.cells(H, H + p) == b.cells(H, H + p);
}

bool left_asymptotic(const EpConfig& a, const EpConfig& b) {
    return right_asymptotic(a.reversed(), b.reversed());
}

bool validates_left_witness(const LocalRule& f, const EpConfig& a, const EpConfig& b) {
    return right_asymptotic(a, b) && !ep_equal(a, b) && ep_equal(apply_ep(f, a), apply_ep(f, b));
}

bool validates_right_witness(const LocalRule& f, const EpConfig& a, const EpConfig& b) {
    return left_asymptotic(a, b) && !ep_equal(a, b) && ep_equal(apply_ep(f, a), apply_ep(f, b));
}

}  // namespace casweep
