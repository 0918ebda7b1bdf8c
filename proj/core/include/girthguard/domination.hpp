#pragma once

#include <vector>

#include "girthguard/graph.hpp"

namespace girthguard {

/// A dominating set together with how much we trust it. Certificates are
/// immutable value types; verified_minimum is set only by the exact solvers.
struct DominationCertificate {
    std::vector<int> members;  // sorted ascending
    bool verified_minimum = false;

    int size() const { return static_cast<int>(members.size()); }
    bool operator==(const DominationCertificate&) const = default;
};

/// True iff every vertex outside s is adjacent to a member of s.
/// Throws std::invalid_argument on out-of-range ids.
bool is_dominating(const Graph& g, const std::vector<int>& s);

/// Greedy cover: repeatedly take the vertex whose closed neighborhood covers
/// the most still-undominated vertices, ties to the lowest id. Result is a
/// valid dominating set, not necessarily minimum.
DominationCertificate greedy_upper_bound(const Graph& g);

/// Exhaustive minimum dominating set: subsets enumerated by increasing
/// cardinality, lexicographically within one cardinality; the first
/// dominating subset found is returned. Hard-guarded to n <= max_n.
/// Throws std::invalid_argument when the guard trips or size_cap < 1 (with
/// n > 0), std::runtime_error when no dominating set exists within size_cap.
DominationCertificate gamma_brute(const Graph& g, int size_cap, int max_n = 20);

/// size_cap defaults to the greedy bound, which guarantees a hit.
DominationCertificate gamma_brute(const Graph& g);

/// Branch and bound, deterministic: branch on the lowest-id undominated
/// vertex over its closed neighborhood in ascending id order; prune with
/// ceil(undominated / (max_degree + 1)) plus, at the root only, every
/// applicable girth-based lower bound; the greedy set seeds the incumbent
/// and incumbent updates are strict improvements. Matches gamma_brute
/// wherever both run.
DominationCertificate gamma_exact(const Graph& g);

}  // namespace girthguard
