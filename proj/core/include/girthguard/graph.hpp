#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace girthguard {

/// Undirected edge, stored with the smaller endpoint first.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Thrown on malformed edge-list input; the message carries the line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Simple undirected graph with dense vertex ids 0..n-1.
///
/// Immutable after construction and safe to share between threads. Edges are
/// kept canonical (u < v, lexicographically sorted) and adjacency lists are
/// sorted ascending, so every iteration order downstream is deterministic.
class Graph {
public:
    Graph() = default;

    /// Validates and canonicalizes the edge list. Throws std::invalid_argument
    /// on self-loops, duplicate edges, or endpoints outside [0, n).
    static Graph from_edges(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_vertex(int v) const { return v >= 0 && v < n_; }
    bool has_edge(int u, int v) const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Girth: length of a shortest cycle, or Acyclic for forests. Acyclic compares
/// greater than every finite value, so "girth at least g" is monotone and
/// holds vacuously on forests.
class Girth {
public:
    static Girth finite(int length) { return Girth(length); }
    static Girth acyclic() { return Girth(); }

    bool is_acyclic() const { return !value_.has_value(); }
    bool is_finite() const { return value_.has_value(); }
    /// Finite value; throws if acyclic.
    int value() const;
    bool at_least(int g) const { return is_acyclic() || *value_ >= g; }
    std::string to_string() const;

    friend bool operator==(const Girth&, const Girth&) = default;
    friend std::strong_ordering operator<=>(const Girth& a, const Girth& b) {
        if (a.is_acyclic() && b.is_acyclic()) return std::strong_ordering::equal;
        if (a.is_acyclic()) return std::strong_ordering::greater;
        if (b.is_acyclic()) return std::strong_ordering::less;
        return *a.value_ <=> *b.value_;
    }

private:
    Girth() = default;
    explicit Girth(int v) : value_(v) {}
    std::optional<int> value_;
};

struct StructureSummary {
    int min_degree = 0;
    int max_degree = 0;
    bool connected = false;
    bool has_universal_vertex = false;
};

/// Edge-list text format:
///   line 1: "<n> <m>", then m lines "<u> <v>" with 0 <= u,v < n and u != v.
///   '#' begins a comment line; any whitespace run separates tokens.
/// Throws ParseError with the offending line number.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

/// Canonical form: single spaces, u < v per line, lexicographic edge order,
/// trailing newline. parse(emit(g)) == g, and emit(parse(t)) == t for
/// canonical t.
std::string emit_edge_list(const Graph& g);
void emit_edge_list(const Graph& g, std::ostream& out);

/// Exact girth: per-root BFS, minimizing depth(u) + depth(v) + 1 over the
/// non-tree edges (u, v) seen from each root. The minimum over all roots is
/// the exact shortest cycle length; forests report Acyclic.
Girth girth(const Graph& g);

/// Degree range, connectivity (one BFS sweep), universal vertex (degree n-1).
/// Graphs with n <= 1 count as connected.
StructureSummary structure_summary(const Graph& g);

/// Marker for vertices unreachable from the BFS source.
inline constexpr int kUnreachable = -1;

/// Unweighted shortest-path hop counts from source; kUnreachable where no
/// path exists. Throws std::invalid_argument if source is out of range.
std::vector<int> distances_from(const Graph& g, int source);

}  // namespace girthguard
