#pragma once

#include <optional>
#include <string>

#include "girthguard/graph.hpp"

namespace girthguard {

/// Comparison tolerance for all bound arithmetic. Radicands are small
/// integers at this scale, so 1e-9 sits far below the 1-unit gaps between
/// consecutive domination numbers.
inline constexpr double kBoundTol = 1e-9;

/// Lower bound (3 + sqrt(8(m-n) + 9)) / 2 for connected non-star graphs of
/// girth at least 7. Pure formula over (n, m); throws std::invalid_argument
/// when the radicand is negative (impossible for connected inputs).
double bound_general_g7(int n, int m);

/// Lower bound max(sqrt(n), sqrt(2m/3)) for connected graphs of girth at
/// least 7 and minimum degree 2.
double bound_mindeg2_g7(int n, int m);

/// Edge-count ceiling for graphs of girth at least g (finite, g >= 3):
/// stated n^2/(g-1) and the tighter derived n(n-1)/(g-1).
struct Lemma1Edges {
    double stated = 0.0;
    double derived = 0.0;
};
Lemma1Edges lemma1_max_edges(int n, int g);

/// Lower bound max(sqrt(n), sqrt((l-1)m/3)) with l = floor(g/3), for
/// minimum degree 2 and finite girth g >= 12.
double bound_girth12(int n, int m, int g);

/// Triangle-free refinement max(sqrt(n), sqrt(4m/3)), valid exactly for
/// 12 <= g <= 14 where the quotient graph is triangle-free but l = 4.
double bound_girth12_triangle_free(int n, int m, int g);

/// Integer strengthening of a real lower bound: smallest integer >= value,
/// up to the shared tolerance.
int integer_strengthening(double value);

struct BoundEntry {
    bool applicable = false;
    std::optional<double> value;
    std::optional<int> ceil_value;
    std::optional<double> slack;  // gamma - value, when gamma is known
    std::optional<bool> valid;    // gamma >= value - kBoundTol
};

/// Lemma-1 entry validates the graph's own edge count against the girth
/// ceiling; for forests it is vacuous and reported as such.
struct Lemma1Entry {
    bool applicable = false;
    bool vacuous = false;
    std::optional<double> value;          // stated n^2/(g-1)
    std::optional<double> derived_value;  // n(n-1)/(g-1)
    std::optional<int> ceil_value;
    std::optional<double> slack;  // value - m
    std::optional<bool> valid;    // m <= value + kBoundTol
};

struct BoundReport {
    int n = 0;
    int m = 0;
    Girth girth = Girth::acyclic();
    int min_degree = 0;
    bool connected = false;
    bool is_star = false;
    bool has_universal_vertex = false;
    std::optional<int> l;  // floor(girth/3), finite girth only
    std::optional<int> gamma;

    BoundEntry general_g7;
    BoundEntry mindeg2_g7;
    BoundEntry girth12;
    BoundEntry girth12_tf;
    Lemma1Entry lemma1;
};

/// Evaluates every bound with its applicability predicate:
///   general_g7:  connected, girth >= 7 (vacuously for forests), not a star
///   mindeg2_g7:  connected, girth >= 7, min degree >= 2
///   girth12:     connected, min degree >= 2, finite girth >= 12
///   girth12_tf:  same with 12 <= girth <= 14
///   lemma1:      finite girth (vacuous for forests)
/// When gamma is supplied, slack and validity verdicts are filled in.
BoundReport evaluate_all(const Graph& g, std::optional<int> gamma = std::nullopt);

/// JSON object with fixed keys: n, m, girth (int or "acyclic"), min_degree,
/// connected, is_star, gamma, l, note, bounds.{general_g7, mindeg2_g7,
/// girth12, girth12_tf, lemma1}.
std::string bound_report_to_json(const BoundReport& r, int indent = 2);

}  // namespace girthguard
