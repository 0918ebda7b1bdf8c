#pragma once

// Test-side oracles and corpus helpers. Everything here is deliberately
// independent of the library code paths it cross-checks: girth oracles work
// by edge removal / path enumeration, and the random corpus generator only
// uses the public splitmix stream.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "girthguard/generators.hpp"
#include "girthguard/graph.hpp"

namespace testsupport {

namespace gg = girthguard;

/// Shortest cycle length by brute force: every cycle uses some edge (u,v),
/// and without that edge its remainder is a shortest u-v path. O(m * bfs).
inline std::optional<int> shortest_cycle_by_edge_removal(const gg::Graph& g) {
    std::optional<int> best;
    for (const auto& [u, v] : g.edges()) {
        // BFS from u to v avoiding the edge (u,v) itself.
        std::vector<int> dist(static_cast<size_t>(g.n()), -1);
        std::vector<int> queue{u};
        dist[static_cast<size_t>(u)] = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            for (int y : g.neighbors(x)) {
                if (x == u && y == v) continue;
                if (x == v && y == u) continue;
                if (dist[static_cast<size_t>(y)] != -1) continue;
                dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
                queue.push_back(y);
            }
        }
        if (dist[static_cast<size_t>(v)] != -1) {
            int cycle = dist[static_cast<size_t>(v)] + 1;
            if (!best || cycle < *best) best = cycle;
        }
    }
    return best;
}

/// Enumerates simple cycles of length exactly k (closed walks with distinct
/// interior vertices, anchored at their smallest vertex). Exponential; for
/// tiny k and n only.
inline int count_cycles_of_length(const gg::Graph& g, int k) {
    int count = 0;
    std::vector<int> path;
    std::vector<char> used(static_cast<size_t>(g.n()), 0);

    auto dfs = [&](auto&& self, int v) -> void {
        if (static_cast<int>(path.size()) == k) {
            if (g.has_edge(v, path.front())) ++count;
            return;
        }
        for (int w : g.neighbors(v)) {
            if (used[static_cast<size_t>(w)] || w < path.front()) continue;
            used[static_cast<size_t>(w)] = 1;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            used[static_cast<size_t>(w)] = 0;
        }
    };
    for (int root = 0; root < g.n(); ++root) {
        used.assign(static_cast<size_t>(g.n()), 0);
        used[static_cast<size_t>(root)] = 1;
        path = {root};
        dfs(dfs, root);
    }
    // Each cycle is found twice from its anchor (once per direction).
    return count / 2;
}

/// Seeded connected graph of mixed density: a random spanning tree plus a
/// density-dependent batch of extra edges, drawn from the splitmix stream.
inline gg::Graph random_connected_graph(int n, uint64_t seed) {
    gg::SplitMix64 rng(seed);
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(order[static_cast<size_t>(i)],
                  order[rng.next_below(static_cast<uint64_t>(i) + 1)]);

    std::vector<gg::Edge> edges;
    for (int i = 1; i < n; ++i) {
        int parent = order[rng.next_below(static_cast<uint64_t>(i))];
        edges.push_back(gg::make_edge(order[static_cast<size_t>(i)], parent));
    }

    std::vector<gg::Edge> rest;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::find(edges.begin(), edges.end(), gg::Edge{u, v}) == edges.end())
                rest.push_back({u, v});
    for (size_t i = rest.size(); i > 1; --i)
        std::swap(rest[i - 1], rest[rng.next_below(static_cast<uint64_t>(i))]);

    // density tiers: sparse / medium / dense
    size_t extra = 0;
    switch (seed % 3) {
        case 0: extra = 0; break;
        case 1: extra = rest.size() / 4; break;
        default: extra = (3 * rest.size()) / 4; break;
    }
    edges.insert(edges.end(), rest.begin(), rest.begin() + static_cast<long>(extra));
    return gg::Graph::from_edges(n, std::move(edges));
}

}  // namespace testsupport
