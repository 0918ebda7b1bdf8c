#include "girthguard/domination.hpp"

#include <algorithm>
#include <numeric>

#include "girthguard/bounds.hpp"
#include "detail_bits.hpp"

namespace girthguard {

namespace {

void check_ids(const Graph& g, const std::vector<int>& s) {
    for (int v : s)
        if (!g.has_vertex(v))
            throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
}

std::vector<detail::Bits> closed_neighborhoods(const Graph& g) {
    std::vector<detail::Bits> closed(static_cast<size_t>(g.n()), detail::Bits(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        closed[static_cast<size_t>(v)].set(v);
        for (int u : g.neighbors(v)) closed[static_cast<size_t>(v)].set(u);
    }
    return closed;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

bool is_dominating(const Graph& g, const std::vector<int>& s) {
    check_ids(g, s);
    std::vector<char> covered(static_cast<size_t>(g.n()), 0);
    for (int v : s) {
        covered[static_cast<size_t>(v)] = 1;
        for (int u : g.neighbors(v)) covered[static_cast<size_t>(u)] = 1;
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

DominationCertificate greedy_upper_bound(const Graph& g) {
    const int n = g.n();
    std::vector<char> covered(static_cast<size_t>(n), 0);
    int uncovered = n;
    DominationCertificate cert;
    while (uncovered > 0) {
        int best_v = -1, best_gain = -1;
        for (int v = 0; v < n; ++v) {
            int gain = covered[static_cast<size_t>(v)] ? 0 : 1;
            for (int u : g.neighbors(v)) gain += covered[static_cast<size_t>(u)] ? 0 : 1;
            if (gain > best_gain) {
                best_gain = gain;
                best_v = v;
            }
        }
        cert.members.push_back(best_v);
        if (!covered[static_cast<size_t>(best_v)]) {
            covered[static_cast<size_t>(best_v)] = 1;
            --uncovered;
        }
        for (int u : g.neighbors(best_v)) {
            if (!covered[static_cast<size_t>(u)]) {
                covered[static_cast<size_t>(u)] = 1;
                --uncovered;
            }
        }
    }
    std::sort(cert.members.begin(), cert.members.end());
    return cert;
}

DominationCertificate gamma_brute(const Graph& g, int size_cap, int max_n) {
    const int n = g.n();
    if (n > std::min(max_n, 64))
        throw std::invalid_argument("gamma_brute: n = " + std::to_string(n) +
                                    " exceeds the guard of " + std::to_string(std::min(max_n, 64)));
    if (n > 0 && size_cap < 1) throw std::invalid_argument("gamma_brute: size_cap must be >= 1");
    if (n == 0) return DominationCertificate{{}, true};

    // Closed neighborhoods as plain machine words; the guard keeps n <= 64.
    std::vector<uint64_t> closed(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        closed[static_cast<size_t>(v)] |= uint64_t{1} << v;
        for (int u : g.neighbors(v)) closed[static_cast<size_t>(v)] |= uint64_t{1} << u;
    }
    const uint64_t full = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;

    std::vector<int> pick;
    for (int k = 1; k <= std::min(size_cap, n); ++k) {
        // Standard lexicographic k-combination walk over ids 0..n-1.
        pick.assign(static_cast<size_t>(k), 0);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            uint64_t covered = 0;
            for (int v : pick) covered |= closed[static_cast<size_t>(v)];
            if (covered == full) return DominationCertificate{pick, true};

            int i = k - 1;
            while (i >= 0 && pick[static_cast<size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++pick[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
        }
    }
    throw std::runtime_error("gamma_brute: no dominating set of size <= " +
                             std::to_string(size_cap));
}

DominationCertificate gamma_brute(const Graph& g) {
    return gamma_brute(g, std::max(1, greedy_upper_bound(g).size()));
}

namespace {

struct BranchAndBound {
    const Graph& g;
    int n;
    int coverage;  // max closed-neighborhood size = max_degree + 1
    std::vector<detail::Bits> closed;
    std::vector<std::vector<int>> closed_list;  // N[v] sorted ascending
    std::vector<int> best;

    explicit BranchAndBound(const Graph& graph)
        : g(graph), n(graph.n()), coverage(1), closed(closed_neighborhoods(graph)) {
        closed_list.resize(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            coverage = std::max(coverage, g.degree(v) + 1);
            auto& lst = closed_list[static_cast<size_t>(v)];
            lst = g.neighbors(v);
            lst.insert(std::lower_bound(lst.begin(), lst.end(), v), v);
        }
        best = greedy_upper_bound(g).members;
    }

    void dfs(const detail::Bits& dominated, std::vector<int>& partial) {
        int undominated = n - dominated.count();
        if (undominated == 0) {
            if (static_cast<int>(partial.size()) < static_cast<int>(best.size())) best = partial;
            return;
        }
        int lower = static_cast<int>(partial.size()) + ceil_div(undominated, coverage);
        if (lower >= static_cast<int>(best.size())) return;

        int v = dominated.first_zero();
        // Any dominating set extending `partial` uses a member of N[v].
        partial.push_back(-1);
        for (int w : closed_list[static_cast<size_t>(v)]) {
            partial.back() = w;
            auto child = dominated;
            child |= closed[static_cast<size_t>(w)];
            dfs(child, partial);
        }
        partial.pop_back();
    }
};

}  // namespace

DominationCertificate gamma_exact(const Graph& g) {
    if (g.n() == 0) return DominationCertificate{{}, true};
    BranchAndBound search(g);

    // Girth-based bounds apply to the whole graph only; their preconditions
    // (girth, connectivity, minimum degree) do not survive into subproblems.
    int root_lower = ceil_div(g.n(), search.coverage);
    auto report = evaluate_all(g);
    for (const BoundEntry* e : {&report.general_g7, &report.mindeg2_g7, &report.girth12,
                                &report.girth12_tf}) {
        if (e->applicable) root_lower = std::max(root_lower, *e->ceil_value);
    }

    if (root_lower < static_cast<int>(search.best.size())) {
        detail::Bits none(g.n());
        std::vector<int> partial;
        search.dfs(none, partial);
    }
    std::sort(search.best.begin(), search.best.end());
    return DominationCertificate{std::move(search.best), true};
}

}  // namespace girthguard
