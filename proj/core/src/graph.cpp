#include "girthguard/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>

namespace girthguard {

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("endpoint out of range [0, " + std::to_string(n) + ")");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");

    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<size_t>(n), {});
    for (const auto& [u, v] : edges) {
        g.adj_[static_cast<size_t>(u)].push_back(v);
        g.adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    g.edges_ = std::move(edges);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& nbrs = adj_[static_cast<size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Girth::value() const {
    if (!value_) throw std::logic_error("girth is acyclic, no finite value");
    return *value_;
}

std::string Girth::to_string() const {
    return value_ ? std::to_string(*value_) : std::string("acyclic");
}

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '#';
    }
    return true;  // blank
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

long long parse_int(const std::string& tok, int line_no) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line_no, "expected an integer, got \"" + tok + "\"");
    return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        auto toks = tokenize(line);
        if (toks.size() != 2) throw ParseError(line_no, "header must be \"<n> <m>\"");
        n = parse_int(toks[0], line_no);
        m = parse_int(toks[1], line_no);
        if (n < 0 || m < 0) throw ParseError(line_no, "header counts must be non-negative");
        if (n > std::numeric_limits<int>::max() || m > 4'000'000'000LL)
            throw ParseError(line_no, "header counts out of supported range");
        break;
    }
    if (n < 0) throw ParseError(line_no == 0 ? 1 : line_no, "missing header line");

    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    while (static_cast<long long>(edges.size()) < m && std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        auto toks = tokenize(line);
        if (toks.size() != 2) throw ParseError(line_no, "edge line must be \"<u> <v>\"");
        long long u = parse_int(toks[0], line_no);
        long long v = parse_int(toks[1], line_no);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(line_no, "endpoint out of range [0, " + std::to_string(n) + ")");
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        edges.push_back(make_edge(static_cast<int>(u), static_cast<int>(v)));
    }
    if (static_cast<long long>(edges.size()) < m)
        throw ParseError(line_no, "expected " + std::to_string(m) + " edges, got " +
                                      std::to_string(edges.size()));
    while (std::getline(in, line)) {
        ++line_no;
        if (!is_comment_or_blank(line))
            throw ParseError(line_no, "unexpected content after the edge list");
    }

    {
        auto sorted = edges;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end())
            throw ParseError(line_no, "duplicate edge " + std::to_string(dup->first) + " " +
                                          std::to_string(dup->second));
    }
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

void emit_edge_list(const Graph& g, std::ostream& out) {
    out << g.n() << ' ' << g.m() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    emit_edge_list(g, out);
    return out.str();
}

Girth girth(const Graph& g) {
    const int n = g.n();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<size_t>(n));
    std::vector<int> parent(static_cast<size_t>(n));
    std::vector<int> queue(static_cast<size_t>(n));

    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<size_t>(root)] = 0;
        parent[static_cast<size_t>(root)] = -1;
        int head = 0, tail = 0;
        queue[tail++] = root;
        while (head < tail) {
            int u = queue[head++];
            // Candidates found from u are >= 2*depth(u); deeper ones only grow.
            if (2 * dist[static_cast<size_t>(u)] >= best) break;
            for (int v : g.neighbors(u)) {
                if (dist[static_cast<size_t>(v)] < 0) {
                    dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                    parent[static_cast<size_t>(v)] = u;
                    queue[tail++] = v;
                } else if (v != parent[static_cast<size_t>(u)]) {
                    best = std::min(best, dist[static_cast<size_t>(u)] + dist[static_cast<size_t>(v)] + 1);
                }
            }
        }
        if (best == 3) break;  // cannot improve on a triangle
    }
    return best == std::numeric_limits<int>::max() ? Girth::acyclic() : Girth::finite(best);
}

StructureSummary structure_summary(const Graph& g) {
    StructureSummary s;
    const int n = g.n();
    if (n == 0) {
        s.connected = true;
        return s;
    }
    s.min_degree = std::numeric_limits<int>::max();
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        s.min_degree = std::min(s.min_degree, d);
        s.max_degree = std::max(s.max_degree, d);
        if (d == n - 1) s.has_universal_vertex = true;
    }
    auto dist = distances_from(g, 0);
    s.connected = std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
    return s;
}

std::vector<int> distances_from(const Graph& g, int source) {
    if (!g.has_vertex(source))
        throw std::invalid_argument("source vertex " + std::to_string(source) + " out of range");
    std::vector<int> dist(static_cast<size_t>(g.n()), kUnreachable);
    dist[static_cast<size_t>(source)] = 0;
    std::queue<int> q;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (dist[static_cast<size_t>(v)] == kUnreachable) {
                dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

}  // namespace girthguard
