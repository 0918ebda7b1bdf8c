#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "girthguard/domination.hpp"
#include "girthguard/graph.hpp"

namespace girthguard {

enum class VertexColor : uint8_t { Red, Green };

struct Move {
    int vertex;
    int from;  // subset index
    int to;
    bool operator==(const Move&) const = default;
};

/// Disjoint cover of V into one subset per seed vertex. Subset i was seeded
/// with center_of[i]; every member equals or neighbors its center; green
/// vertices were moved once from another subset. Immutable once built.
struct Partition {
    std::vector<std::vector<int>> subsets;  // sorted members, disjoint cover
    std::vector<int> center_of;             // one seed vertex per subset
    std::vector<VertexColor> color;         // per vertex
    std::vector<Move> move_trace;

    int subset_count() const { return static_cast<int>(subsets.size()); }
    /// subset index per vertex; -1 where the partition does not cover v.
    std::vector<int> membership(int n) const;
};

/// Witness that the claimed-minimum input set was not minimum: a strictly
/// smaller dominating set plus the move that exposed it.
struct SmallerSetCertificate {
    enum class Reason : uint8_t { CenterMove, GreenMove };
    DominationCertificate certificate;  // verified_minimum stays false
    int witness_vertex = -1;
    int from_subset = -1;
    int to_subset = -1;
    Reason reason = Reason::CenterMove;
};

using PartitionOutcome = std::variant<Partition, SmallerSetCertificate>;

/// Partitions V around the dominating set d (sorted; subset i is seeded with
/// the i-th smallest member). Deterministic rendering of the move loop:
/// uncovered vertices are assigned ascending to the adjacent seed of lowest
/// index; then vertices are scanned ascending, target subsets ascending, the
/// first applicable move (v adjacent to every vertex of another subset)
/// fires, v turns green, and the scan restarts. A move of a seed vertex or a
/// second move of a green vertex would contradict minimality of d, so either
/// returns a SmallerSetCertificate instead of looping. Throws
/// std::invalid_argument when d has duplicates or does not dominate.
PartitionOutcome build_partition(const Graph& g, const std::vector<int>& d);

/// Lowest-id vertex outside s adjacent to every member of s, or nullopt.
/// Throws std::invalid_argument when s is empty or holds invalid ids.
std::optional<int> is_outer_dominated(const Graph& g, const std::vector<int>& s);

enum class ViolationKind : uint8_t {
    NotCovered,        // vertex in no subset
    Overlap,           // vertex in two subsets
    CenterMissing,     // center not a member of its subset
    ForeignCenter,     // subset holds another subset's center
    CenterAdjacency,   // member neither equals nor neighbors its center
    OuterDominated,    // some outside vertex is adjacent to the whole subset
    NonStarSubset,     // edge between two non-center members (girth >= 4)
    IntraPairExceeded  // two subsets joined by more than one edge (girth >= 7)
};

struct Violation {
    ViolationKind kind;
    std::string detail;
};

/// Structural checks: disjoint cover, exactly one seed per subset, center
/// adjacency, no outer-dominated subset; when girth >= 4 each induced subset
/// must be a star on its center, and when girth >= 7 each subset pair may be
/// joined by at most one edge. Malformed partitions come back as violations,
/// not exceptions; only out-of-range ids throw.
std::vector<Violation> validate_partition(const Graph& g, const Partition& p);

/// Edges inside one subset (inner) vs. edges between subsets (intra);
/// together they exhaust the edge set.
struct EdgeSplit {
    std::vector<Edge> inner;
    std::vector<Edge> intra;
};
EdgeSplit split_edges(const Graph& g, const Partition& p);

/// Graph on one representative per subset, adjacent when some intra-edge
/// joins the two subsets.
struct QuotientGraph {
    Graph graph;
    int edge_count() const { return graph.m(); }
    int degree(int subset) const { return graph.degree(subset); }
};
QuotientGraph quotient_graph(const Graph& g, const Partition& p);

/// One line per subset "i: center=<u> members=<ids> greens=<ids>" (1-based
/// subset indices, comma-separated sorted ids) followed by "move v: i->j"
/// lines in execution order.
std::string serialize_partition(const Partition& p);

/// Measured edge-count chain for one (graph, partition) pair. Each check
/// compares integer quantities exactly; `applies` marks whether the gate
/// (connectivity, girth, minimum degree) held at all.
struct ChainCheck {
    std::string name;
    bool applies = false;
    bool ok = true;
    long long lhs = 0;  // measured quantity
    long long rhs = 0;  // ceiling it must not exceed
};

struct ChainReport {
    int gamma = 0;
    int inner_edges = 0;
    int intra_edges = 0;
    int max_subset_size = 0;
    int quotient_edges = 0;
    Girth quotient_girth = Girth::acyclic();
    std::optional<int> l;  // floor(girth/3) when girth is finite and >= 12
    std::vector<ChainCheck> checks;

    bool all_ok() const;
};

/// Evaluates the inequality chain the partition is supposed to satisfy:
///   girth >= 7, connected, non-star: |I1| <= n - gamma,
///     |I2| <= gamma(gamma-1)/2, m <= n - gamma + gamma(gamma-1)/2;
///   additionally min degree >= 2: n <= gamma^2, max|S_i| <= gamma,
///     |I1| <= 2 E(H), 2m <= 3 gamma^2;
///   additionally finite girth >= 12: (l-1) E(H) <= gamma(gamma-1),
///     m <= 3 E(H), (l-1) m <= 3 gamma^2, girth(H) >= l.
ChainReport check_partition_chains(const Graph& g, const Partition& p);

}  // namespace girthguard
