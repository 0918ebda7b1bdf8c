#include "girthguard/partition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace girthguard {

std::vector<int> Partition::membership(int n) const {
    std::vector<int> where(static_cast<size_t>(n), -1);
    for (int i = 0; i < subset_count(); ++i)
        for (int v : subsets[static_cast<size_t>(i)])
            if (v >= 0 && v < n) where[static_cast<size_t>(v)] = i;
    return where;
}

namespace {

bool adjacent_to_all(const Graph& g, int v, const std::vector<int>& subset) {
    for (int u : subset)
        if (!g.has_edge(v, u)) return false;
    return true;
}

std::vector<int> without(std::vector<int> sorted_set, std::initializer_list<int> removed) {
    for (int r : removed)
        sorted_set.erase(std::remove(sorted_set.begin(), sorted_set.end(), r), sorted_set.end());
    return sorted_set;
}

}  // namespace

PartitionOutcome build_partition(const Graph& g, const std::vector<int>& d) {
    std::vector<int> centers(d);
    std::sort(centers.begin(), centers.end());
    if (std::adjacent_find(centers.begin(), centers.end()) != centers.end())
        throw std::invalid_argument("build_partition: duplicate ids in the dominating set");
    if (!is_dominating(g, centers))
        throw std::invalid_argument("build_partition: the seed set does not dominate the graph");

    const int n = g.n();
    const int k = static_cast<int>(centers.size());
    Partition p;
    p.subsets.assign(static_cast<size_t>(k), {});
    p.center_of = centers;
    p.color.assign(static_cast<size_t>(n), VertexColor::Red);

    std::vector<int> where(static_cast<size_t>(n), -1);
    for (int i = 0; i < k; ++i) {
        p.subsets[static_cast<size_t>(i)] = {centers[static_cast<size_t>(i)]};
        where[static_cast<size_t>(centers[static_cast<size_t>(i)])] = i;
    }
    // Every uncovered vertex joins the adjacent seed of lowest index.
    for (int v = 0; v < n; ++v) {
        if (where[static_cast<size_t>(v)] != -1) continue;
        for (int i = 0; i < k; ++i) {
            if (g.has_edge(v, centers[static_cast<size_t>(i)])) {
                auto& s = p.subsets[static_cast<size_t>(i)];
                s.insert(std::lower_bound(s.begin(), s.end(), v), v);
                where[static_cast<size_t>(v)] = i;
                break;
            }
        }
    }

    std::vector<char> is_center(static_cast<size_t>(n), 0);
    for (int c : centers) is_center[static_cast<size_t>(c)] = 1;

    // Move loop: first applicable (vertex, target) in ascending order fires,
    // then the scan restarts. A forbidden move certifies d was not minimum.
    for (bool moved = true; moved;) {
        moved = false;
        for (int v = 0; v < n && !moved; ++v) {
            int i = where[static_cast<size_t>(v)];
            for (int j = 0; j < k; ++j) {
                if (j == i) continue;
                if (!adjacent_to_all(g, v, p.subsets[static_cast<size_t>(j)])) continue;

                if (is_center[static_cast<size_t>(v)]) {
                    // v dominates S_j entirely, so its seed u_j is redundant.
                    SmallerSetCertificate out;
                    out.certificate.members = without(centers, {centers[static_cast<size_t>(j)]});
                    out.witness_vertex = v;
                    out.from_subset = i;
                    out.to_subset = j;
                    out.reason = SmallerSetCertificate::Reason::CenterMove;
                    if (!is_dominating(g, out.certificate.members))
                        throw std::logic_error("build_partition: refutation certificate invalid");
                    return out;
                }
                if (p.color[static_cast<size_t>(v)] == VertexColor::Green) {
                    // A green vertex dominates all of S_i and now all of S_j,
                    // so it can replace both seeds.
                    SmallerSetCertificate out;
                    auto members = without(
                        centers, {centers[static_cast<size_t>(i)], centers[static_cast<size_t>(j)]});
                    members.insert(std::lower_bound(members.begin(), members.end(), v), v);
                    out.certificate.members = std::move(members);
                    out.witness_vertex = v;
                    out.from_subset = i;
                    out.to_subset = j;
                    out.reason = SmallerSetCertificate::Reason::GreenMove;
                    if (!is_dominating(g, out.certificate.members))
                        throw std::logic_error("build_partition: refutation certificate invalid");
                    return out;
                }

                auto& from = p.subsets[static_cast<size_t>(i)];
                from.erase(std::find(from.begin(), from.end(), v));
                auto& to = p.subsets[static_cast<size_t>(j)];
                to.insert(std::lower_bound(to.begin(), to.end(), v), v);
                where[static_cast<size_t>(v)] = j;
                p.color[static_cast<size_t>(v)] = VertexColor::Green;
                p.move_trace.push_back(Move{v, i, j});
                moved = true;
                break;
            }
        }
    }
    return p;
}

std::optional<int> is_outer_dominated(const Graph& g, const std::vector<int>& s) {
    if (s.empty()) throw std::invalid_argument("is_outer_dominated: subset is empty");
    for (int v : s)
        if (!g.has_vertex(v))
            throw std::invalid_argument("is_outer_dominated: vertex id out of range");
    std::vector<char> in_s(static_cast<size_t>(g.n()), 0);
    for (int v : s) in_s[static_cast<size_t>(v)] = 1;
    for (int u = 0; u < g.n(); ++u) {
        if (in_s[static_cast<size_t>(u)]) continue;
        if (adjacent_to_all(g, u, s)) return u;
    }
    return std::nullopt;
}

namespace {

std::string subset_name(int i) { return "S" + std::to_string(i + 1); }

}  // namespace

std::vector<Violation> validate_partition(const Graph& g, const Partition& p) {
    const int n = g.n();
    const int k = p.subset_count();
    for (const auto& s : p.subsets)
        for (int v : s)
            if (!g.has_vertex(v))
                throw std::invalid_argument("validate_partition: vertex id out of range");

    std::vector<Violation> out;
    std::vector<int> seen(static_cast<size_t>(n), 0);
    for (const auto& s : p.subsets)
        for (int v : s) ++seen[static_cast<size_t>(v)];
    for (int v = 0; v < n; ++v) {
        if (seen[static_cast<size_t>(v)] == 0)
            out.push_back({ViolationKind::NotCovered,
                           "vertex " + std::to_string(v) + " is in no subset"});
        else if (seen[static_cast<size_t>(v)] > 1)
            out.push_back({ViolationKind::Overlap,
                           "vertex " + std::to_string(v) + " appears in " +
                               std::to_string(seen[static_cast<size_t>(v)]) + " subsets"});
    }

    std::set<int> center_set(p.center_of.begin(), p.center_of.end());
    for (int i = 0; i < k; ++i) {
        const auto& s = p.subsets[static_cast<size_t>(i)];
        int center = i < static_cast<int>(p.center_of.size()) ? p.center_of[static_cast<size_t>(i)] : -1;
        if (std::find(s.begin(), s.end(), center) == s.end()) {
            out.push_back({ViolationKind::CenterMissing,
                           subset_name(i) + " does not contain its center " +
                               std::to_string(center)});
            continue;
        }
        for (int v : s) {
            if (v != center && center_set.count(v))
                out.push_back({ViolationKind::ForeignCenter,
                               subset_name(i) + " contains foreign seed vertex " +
                                   std::to_string(v)});
            if (v != center && !g.has_edge(v, center))
                out.push_back({ViolationKind::CenterAdjacency,
                               "vertex " + std::to_string(v) + " in " + subset_name(i) +
                                   " is not adjacent to center " + std::to_string(center)});
        }
        if (!s.empty() && static_cast<int>(s.size()) < n) {
            if (auto w = is_outer_dominated(g, s))
                out.push_back({ViolationKind::OuterDominated,
                               subset_name(i) + " is outer-dominated by vertex " +
                                   std::to_string(*w)});
        }
    }

    Girth gi = girth(g);
    auto where = p.membership(n);
    if (gi.at_least(4)) {
        // Triangle-freeness forces each induced subset to be a star on its
        // center; an edge between two non-center members breaks it.
        for (const auto& [u, v] : g.edges()) {
            int iu = where[static_cast<size_t>(u)], iv = where[static_cast<size_t>(v)];
            if (iu != iv || iu < 0) continue;
            int center = p.center_of[static_cast<size_t>(iu)];
            if (u != center && v != center)
                out.push_back({ViolationKind::NonStarSubset,
                               subset_name(iu) + " has non-center edge " + std::to_string(u) +
                                   "-" + std::to_string(v)});
        }
    }
    if (gi.at_least(7)) {
        std::map<std::pair<int, int>, int> pair_count;
        for (const auto& [u, v] : g.edges()) {
            int iu = where[static_cast<size_t>(u)], iv = where[static_cast<size_t>(v)];
            if (iu == iv || iu < 0 || iv < 0) continue;
            ++pair_count[{std::min(iu, iv), std::max(iu, iv)}];
        }
        for (const auto& [pair, count] : pair_count) {
            if (count > 1)
                out.push_back({ViolationKind::IntraPairExceeded,
                               subset_name(pair.first) + " and " + subset_name(pair.second) +
                                   " are joined by " + std::to_string(count) + " edges"});
        }
    }
    return out;
}

EdgeSplit split_edges(const Graph& g, const Partition& p) {
    auto where = p.membership(g.n());
    for (int v = 0; v < g.n(); ++v)
        if (where[static_cast<size_t>(v)] < 0)
            throw std::invalid_argument("split_edges: partition does not cover vertex " +
                                        std::to_string(v));
    EdgeSplit split;
    for (const auto& e : g.edges()) {
        if (where[static_cast<size_t>(e.first)] == where[static_cast<size_t>(e.second)])
            split.inner.push_back(e);
        else
            split.intra.push_back(e);
    }
    return split;
}

QuotientGraph quotient_graph(const Graph& g, const Partition& p) {
    auto where = p.membership(g.n());
    for (int v = 0; v < g.n(); ++v)
        if (where[static_cast<size_t>(v)] < 0)
            throw std::invalid_argument("quotient_graph: partition does not cover vertex " +
                                        std::to_string(v));
    std::set<Edge> quotient_edges;
    for (const auto& e : g.edges()) {
        int i = where[static_cast<size_t>(e.first)], j = where[static_cast<size_t>(e.second)];
        if (i != j) quotient_edges.insert(make_edge(i, j));
    }
    return QuotientGraph{Graph::from_edges(
        p.subset_count(), std::vector<Edge>(quotient_edges.begin(), quotient_edges.end()))};
}

std::string serialize_partition(const Partition& p) {
    std::ostringstream out;
    for (int i = 0; i < p.subset_count(); ++i) {
        out << (i + 1) << ": center=" << p.center_of[static_cast<size_t>(i)] << " members=";
        const auto& s = p.subsets[static_cast<size_t>(i)];
        for (size_t t = 0; t < s.size(); ++t) out << (t ? "," : "") << s[t];
        out << " greens=";
        bool first = true;
        for (int v : s) {
            if (p.color[static_cast<size_t>(v)] != VertexColor::Green) continue;
            out << (first ? "" : ",") << v;
            first = false;
        }
        out << '\n';
    }
    for (const auto& mv : p.move_trace)
        out << "move " << mv.vertex << ": " << (mv.from + 1) << "->" << (mv.to + 1) << '\n';
    return out.str();
}

bool ChainReport::all_ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const ChainCheck& c) { return c.ok; });
}

ChainReport check_partition_chains(const Graph& g, const Partition& p) {
    ChainReport r;
    const long long n = g.n();
    const long long m = g.m();
    const long long gamma = p.subset_count();
    r.gamma = static_cast<int>(gamma);

    auto split = split_edges(g, p);
    r.inner_edges = static_cast<int>(split.inner.size());
    r.intra_edges = static_cast<int>(split.intra.size());
    for (const auto& s : p.subsets)
        r.max_subset_size = std::max(r.max_subset_size, static_cast<int>(s.size()));
    auto quotient = quotient_graph(g, p);
    r.quotient_edges = quotient.edge_count();
    r.quotient_girth = girth(quotient.graph);

    Girth gi = girth(g);
    auto s = structure_summary(g);
    bool is_star = s.connected && s.has_universal_vertex && m == n - 1;
    bool tier1 = s.connected && gi.at_least(7) && !is_star;
    bool tier2 = tier1 && s.min_degree >= 2;
    bool tier3 = tier2 && gi.is_finite() && gi.value() >= 12;
    long long l = tier3 ? gi.value() / 3 : 0;
    if (tier3) r.l = static_cast<int>(l);
    const long long eh = r.quotient_edges;

    auto add = [&r](const std::string& name, bool applies, long long lhs, long long rhs) {
        r.checks.push_back({name, applies, !applies || lhs <= rhs, lhs, rhs});
    };
    add("inner_le_n_minus_gamma", tier1, r.inner_edges, n - gamma);
    add("intra_le_gamma_pairs", tier1, r.intra_edges, gamma * (gamma - 1) / 2);
    add("m_le_inner_plus_intra_caps", tier1, m, n - gamma + gamma * (gamma - 1) / 2);
    add("n_le_gamma_squared", tier2, n, gamma * gamma);
    add("subset_size_le_gamma", tier2, r.max_subset_size, gamma);
    add("inner_le_twice_quotient_edges", tier2, r.inner_edges, 2 * eh);
    add("two_m_le_three_gamma_squared", tier2, 2 * m, 3 * gamma * gamma);
    add("quotient_edges_lemma1", tier3, (l - 1) * eh, gamma * (gamma - 1));
    add("m_le_three_quotient_edges", tier3, m, 3 * eh);
    add("m_scaled_le_three_gamma_squared", tier3, (l - 1) * m, 3 * gamma * gamma);
    // quotient girth >= floor(g/3); acyclic quotients pass vacuously
    r.checks.push_back({"quotient_girth_ge_l", tier3,
                        !tier3 || r.quotient_girth.at_least(static_cast<int>(l)),
                        r.quotient_girth.is_finite() ? r.quotient_girth.value() : -1, l});
    return r;
}

}  // namespace girthguard
