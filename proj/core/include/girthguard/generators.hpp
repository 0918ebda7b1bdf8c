#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "girthguard/graph.hpp"

namespace girthguard {

/// 64-bit splitmix stream. The exact update is part of the file-format
/// contract so other implementations can reproduce every generated corpus:
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; output z ^ (z >> 31)
/// Bounded draws reduce by plain modulo.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    uint64_t next_below(uint64_t bound) { return next() % bound; }

private:
    uint64_t state_;
};

Graph gen_cycle(int n);   // n >= 3
Graph gen_path(int n);    // n >= 1
Graph gen_star(int leaves);  // leaves >= 1, center is vertex 0

/// Hardcoded small cages; each construction is re-checked against its
/// (n, m, girth, regularity) signature on every call.
enum class CageName { Petersen, Heawood, McGee, TutteCoxeter };
std::optional<CageName> cage_from_string(std::string_view name);
std::string to_string(CageName name);
Graph gen_cage(CageName name);
Graph gen_cage(const std::string& name);  // throws on unknown name

/// Seeded girth-constrained graph grown by ear addition. Starts from a
/// g_min-cycle; each step draws two distinct existing vertices u, v and an
/// ear length l in [max(1, g_min - dist(u,v)), same + g_min], then attaches a
/// fresh path of l edges between them; stops once n >= n_target. The result
/// is connected with minimum degree >= 2 and girth exactly g_min (new cycles
/// are never shorter than g_min, and the seed cycle survives).
Graph gen_random_girth(int n_target, int g_min, uint64_t seed);

/// Replaces every edge by a path through k fresh interior vertices, numbered
/// n + k*edge_index + t with edges taken in canonical order. Multiplies any
/// finite girth by k+1.
Graph gen_subdivide(const Graph& g, int k);

/// Parsed form of a generator spec string:
///   cycle:n=7 | path:n=4 | star:k=5 | cage:name=mcgee
///   random-girth:n=30,girth=7,seed=42
///   subdivide:input=(cycle:n=5),times=2 | subdivide:input=FILE,times=1
struct GeneratorSpec {
    enum class Kind : uint8_t { Cycle, Path, Star, Cage, RandomGirth, Subdivide };
    Kind kind = Kind::Cycle;
    int n = 0;
    int leaves = 0;
    std::string cage;
    int girth = 0;
    uint64_t seed = 0;
    int times = 0;
    std::string input_spec;  // nested spec, subdivide only
    std::string input_path;  // edge-list file, subdivide only
};

GeneratorSpec parse_generator_spec(const std::string& text);
std::string to_string(const GeneratorSpec& spec);

/// Builds the graph a spec describes; file-backed subdivide inputs are read
/// from disk here.
Graph realize(const GeneratorSpec& spec);

}  // namespace girthguard
