#include "girthguard/generators.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

namespace girthguard {

Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("gen_cycle: n must be at least 3");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("gen_path: n must be at least 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_star(int leaves) {
    if (leaves < 1) throw std::invalid_argument("gen_star: need at least 1 leaf");
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Graph::from_edges(leaves + 1, std::move(edges));
}

namespace {

// Hamiltonian cycle 0..n-1 plus one chord per vertex, offsets repeating.
Graph graph_from_lcf(int n, const std::vector<int>& offsets) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
    for (int i = 0; i < n; ++i) {
        int off = offsets[static_cast<size_t>(i) % offsets.size()];
        int j = ((i + off) % n + n) % n;
        Edge e = make_edge(i, j);
        if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph build_cage(CageName name) {
    switch (name) {
        case CageName::Petersen: {
            std::vector<Edge> edges;
            for (int i = 0; i < 5; ++i) {
                edges.push_back(make_edge(i, (i + 1) % 5));      // outer cycle
                edges.push_back(make_edge(i, i + 5));            // spokes
                edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));  // inner pentagram
            }
            return Graph::from_edges(10, std::move(edges));
        }
        case CageName::Heawood:
            return graph_from_lcf(14, {5, -5});
        case CageName::McGee:
            return graph_from_lcf(24, {12, 7, -7});
        case CageName::TutteCoxeter:
            return graph_from_lcf(30, {-13, -9, 7, -7, 9, 13});
    }
    throw std::invalid_argument("gen_cage: unknown cage");
}

struct CageSignature {
    int n;
    int m;
    int girth;
    int degree;
};

CageSignature cage_signature(CageName name) {
    switch (name) {
        case CageName::Petersen: return {10, 15, 5, 3};
        case CageName::Heawood: return {14, 21, 6, 3};
        case CageName::McGee: return {24, 36, 7, 3};
        case CageName::TutteCoxeter: return {30, 45, 8, 3};
    }
    throw std::invalid_argument("gen_cage: unknown cage");
}

}  // namespace

std::optional<CageName> cage_from_string(std::string_view name) {
    if (name == "petersen") return CageName::Petersen;
    if (name == "heawood") return CageName::Heawood;
    if (name == "mcgee") return CageName::McGee;
    if (name == "tutte_coxeter" || name == "tutte-coxeter") return CageName::TutteCoxeter;
    return std::nullopt;
}

std::string to_string(CageName name) {
    switch (name) {
        case CageName::Petersen: return "petersen";
        case CageName::Heawood: return "heawood";
        case CageName::McGee: return "mcgee";
        case CageName::TutteCoxeter: return "tutte_coxeter";
    }
    return "?";
}

Graph gen_cage(CageName name) {
    Graph g = build_cage(name);
    auto sig = cage_signature(name);
    bool regular = true;
    for (int v = 0; v < g.n(); ++v) regular = regular && g.degree(v) == sig.degree;
    Girth gi = girth(g);
    if (g.n() != sig.n || g.m() != sig.m || !regular || !gi.is_finite() ||
        gi.value() != sig.girth)
        throw std::logic_error("gen_cage: embedded " + to_string(name) +
                               " fails its signature check");
    return g;
}

Graph gen_cage(const std::string& name) {
    auto parsed = cage_from_string(name);
    if (!parsed)
        throw std::invalid_argument("gen_cage: unknown cage \"" + name +
                                    "\" (expected petersen|heawood|mcgee|tutte_coxeter)");
    return gen_cage(*parsed);
}

Graph gen_random_girth(int n_target, int g_min, uint64_t seed) {
    if (g_min < 3) throw std::invalid_argument("gen_random_girth: girth must be at least 3");
    if (n_target < g_min)
        throw std::invalid_argument("gen_random_girth: n_target must be at least the girth");

    SplitMix64 rng(seed);
    int n = g_min;
    std::vector<Edge> edges;
    for (int i = 0; i < g_min; ++i) edges.push_back(make_edge(i, (i + 1) % g_min));

    while (n < n_target) {
        Graph current = Graph::from_edges(n, edges);
        int u = static_cast<int>(rng.next_below(static_cast<uint64_t>(n)));
        int v = u;
        while (v == u) v = static_cast<int>(rng.next_below(static_cast<uint64_t>(n)));
        int dist = distances_from(current, u)[static_cast<size_t>(v)];
        int len_min = std::max(1, g_min - dist);
        int len = len_min + static_cast<int>(rng.next_below(static_cast<uint64_t>(g_min) + 1));
        // Ear of `len` edges through len-1 fresh vertices; any cycle through
        // it is at least dist(u,v) + len >= g_min long.
        int prev = u;
        for (int t = 0; t + 1 < len; ++t) {
            edges.push_back(make_edge(prev, n));
            prev = n;
            ++n;
        }
        edges.push_back(make_edge(prev, v));
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_subdivide(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("gen_subdivide: k must be at least 1");
    std::vector<Edge> edges;
    int next_id = g.n();
    for (const auto& [u, v] : g.edges()) {
        int prev = u;
        for (int t = 0; t < k; ++t) {
            edges.push_back(make_edge(prev, next_id));
            prev = next_id;
            ++next_id;
        }
        edges.push_back(make_edge(prev, v));
    }
    return Graph::from_edges(next_id, std::move(edges));
}

namespace {

long long parse_ll(const std::string& text, const std::string& key) {
    size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != text.size() || text.empty())
        throw std::invalid_argument("generator spec: " + key + " expects an integer, got \"" +
                                    text + "\"");
    return value;
}

// Splits "a=1,b=(x,y),c=2" on top-level commas only.
std::vector<std::pair<std::string, std::string>> split_params(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> params;
    int depth = 0;
    std::string current;
    auto flush = [&]() {
        if (current.empty()) return;
        auto eq = current.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("generator spec: expected key=value, got \"" + current +
                                        "\"");
        params.emplace_back(current.substr(0, eq), current.substr(eq + 1));
        current.clear();
    };
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            flush();
            continue;
        }
        current.push_back(c);
    }
    if (depth != 0) throw std::invalid_argument("generator spec: unbalanced parentheses");
    flush();
    return params;
}

}  // namespace

GeneratorSpec parse_generator_spec(const std::string& text) {
    auto colon = text.find(':');
    std::string kind = colon == std::string::npos ? text : text.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);

    GeneratorSpec spec;
    if (kind == "cycle") spec.kind = GeneratorSpec::Kind::Cycle;
    else if (kind == "path") spec.kind = GeneratorSpec::Kind::Path;
    else if (kind == "star") spec.kind = GeneratorSpec::Kind::Star;
    else if (kind == "cage") spec.kind = GeneratorSpec::Kind::Cage;
    else if (kind == "random-girth") spec.kind = GeneratorSpec::Kind::RandomGirth;
    else if (kind == "subdivide") spec.kind = GeneratorSpec::Kind::Subdivide;
    else throw std::invalid_argument("generator spec: unknown kind \"" + kind + "\"");

    for (const auto& [key, value] : split_params(rest)) {
        if (key == "n") spec.n = static_cast<int>(parse_ll(value, key));
        else if (key == "k") spec.leaves = static_cast<int>(parse_ll(value, key));
        else if (key == "name") spec.cage = value;
        else if (key == "girth") spec.girth = static_cast<int>(parse_ll(value, key));
        else if (key == "seed") spec.seed = static_cast<uint64_t>(parse_ll(value, key));
        else if (key == "times") spec.times = static_cast<int>(parse_ll(value, key));
        else if (key == "input") {
            if (value.size() >= 2 && value.front() == '(' && value.back() == ')')
                spec.input_spec = value.substr(1, value.size() - 2);
            else
                spec.input_path = value;
        } else {
            throw std::invalid_argument("generator spec: unknown key \"" + key + "\"");
        }
    }
    return spec;
}

std::string to_string(const GeneratorSpec& spec) {
    std::ostringstream out;
    switch (spec.kind) {
        case GeneratorSpec::Kind::Cycle: out << "cycle:n=" << spec.n; break;
        case GeneratorSpec::Kind::Path: out << "path:n=" << spec.n; break;
        case GeneratorSpec::Kind::Star: out << "star:k=" << spec.leaves; break;
        case GeneratorSpec::Kind::Cage: out << "cage:name=" << spec.cage; break;
        case GeneratorSpec::Kind::RandomGirth:
            out << "random-girth:n=" << spec.n << ",girth=" << spec.girth << ",seed=" << spec.seed;
            break;
        case GeneratorSpec::Kind::Subdivide:
            out << "subdivide:input=";
            if (!spec.input_spec.empty()) out << '(' << spec.input_spec << ')';
            else out << spec.input_path;
            out << ",times=" << spec.times;
            break;
    }
    return out.str();
}

Graph realize(const GeneratorSpec& spec) {
    switch (spec.kind) {
        case GeneratorSpec::Kind::Cycle: return gen_cycle(spec.n);
        case GeneratorSpec::Kind::Path: return gen_path(spec.n);
        case GeneratorSpec::Kind::Star: return gen_star(spec.leaves);
        case GeneratorSpec::Kind::Cage: return gen_cage(spec.cage);
        case GeneratorSpec::Kind::RandomGirth:
            return gen_random_girth(spec.n, spec.girth, spec.seed);
        case GeneratorSpec::Kind::Subdivide: {
            if (!spec.input_spec.empty())
                return gen_subdivide(realize(parse_generator_spec(spec.input_spec)), spec.times);
            if (spec.input_path.empty())
                throw std::invalid_argument("generator spec: subdivide needs input=");
            std::ifstream in(spec.input_path);
            if (!in) throw std::runtime_error("cannot open \"" + spec.input_path + "\"");
            return gen_subdivide(parse_edge_list(in), spec.times);
        }
    }
    throw std::invalid_argument("generator spec: unknown kind");
}

}  // namespace girthguard
