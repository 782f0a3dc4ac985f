#pragma once

#include <cstdint>
#include <vector>

namespace casweep::graph {

using Adjacency = std::vector<std::vector<std::uint32_t>>;

struct Sccs {
    std::vector<std::uint32_t> comp;  // component id per vertex
    std::vector<char> nontrivial;     // per component: contains a cycle
    std::size_t count = 0;
};

Sccs tarjan(const Adjacency& adj);

Adjacency reverse(const Adjacency& adj);

// Vertices reachable from any seed (seeds included).
std::vector<char> reach(const Adjacency& adj, const std::vector<char>& seeds);

// Vertices lying in a nontrivial SCC that also contains a vertex with mark set.
std::vector<char> on_marked_cycle(const Adjacency& adj, const Sccs& s, const std::vector<char>& mark);

}  // namespace casweep::graph
