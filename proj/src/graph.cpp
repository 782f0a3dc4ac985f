#include "casweep/graph.hpp"

#include <algorithm>

namespace casweep::graph {

Sccs tarjan(const Adjacency& adj) {
    const auto n = static_cast<std::uint32_t>(adj.size());
    constexpr std::uint32_t unset = UINT32_MAX;
    std::vector<std::uint32_t> index(n, unset), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<std::uint32_t> stack;
    struct Frame {
        std::uint32_t v;
        std::size_t next;
    };
    std::vector<Frame> call;
    Sccs out;
    out.comp.assign(n, 0);
    std::uint32_t counter = 0;

    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != unset) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& fr = call.back();
            const std::uint32_t v = fr.v;
            if (fr.next < adj[v].size()) {
                const std::uint32_t w = adj[v][fr.next++];
                if (index[w] == unset) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                const auto id = static_cast<std::uint32_t>(out.count++);
                std::size_t size = 0;
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    out.comp[w] = id;
                    ++size;
                } while (w != v);
                bool cyc = size > 1 || std::find(adj[v].begin(), adj[v].end(), v) != adj[v].end();
                out.nontrivial.push_back(cyc);
            }
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        }
    }
    return out;
}

Adjacency reverse(const Adjacency& adj) {
    Adjacency r(adj.size());
    for (std::uint32_t v = 0; v < adj.size(); ++v)
        for (auto w : adj[v]) r[w].push_back(v);
    return r;
}

std::vector<char> reach(const Adjacency& adj, const std::vector<char>& seeds) {
    std::vector<char> seen = seeds;
    std::vector<std::uint32_t> work;
    for (std::uint32_t v = 0; v < adj.size(); ++v)
        if (seen[v]) work.push_back(v);
    while (!work.empty()) {
        const auto v = work.back();
        work.pop_back();
        for (auto w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                work.push_back(w);
            }
    }
    return seen;
}

std::vector<char> on_marked_cycle(const Adjacency& adj, const Sccs& s, const std::vector<char>& mark) {
    std::vector<char> good_comp(s.count, 0);
    for (std::size_t v = 0; v < adj.size(); ++v)
        if (mark[v] && s.nontrivial[s.comp[v]]) good_comp[s.comp[v]] = 1;
    std::vector<char> out(adj.size(), 0);
    for (std::size_t v = 0; v < adj.size(); ++v) out[v] = good_comp[s.comp[v]];
    return out;
}

}  // namespace casweep::graph
