#include "girthguard/bounds.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

namespace girthguard {

double bound_general_g7(int n, int m) {
    double radicand = 8.0 * (m - n) + 9.0;
    if (radicand < 0.0)
        throw std::invalid_argument("bound_general_g7: 8(m-n)+9 negative (m < n-1 by more than "
                                    "any connected graph allows)");
    return (3.0 + std::sqrt(radicand)) / 2.0;
}

double bound_mindeg2_g7(int n, int m) {
    return std::max(std::sqrt(static_cast<double>(n)), std::sqrt(2.0 * m / 3.0));
}

Lemma1Edges lemma1_max_edges(int n, int g) {
    if (g < 3) throw std::invalid_argument("lemma1_max_edges: girth must be at least 3");
    if (n < 1) throw std::invalid_argument("lemma1_max_edges: n must be at least 1");
    double dn = n;
    return Lemma1Edges{dn * dn / (g - 1), dn * (dn - 1.0) / (g - 1)};
}

double bound_girth12(int n, int m, int g) {
    if (g < 12) throw std::invalid_argument("bound_girth12: girth must be at least 12");
    int l = g / 3;
    return std::max(std::sqrt(static_cast<double>(n)), std::sqrt((l - 1) * static_cast<double>(m) / 3.0));
}

double bound_girth12_triangle_free(int n, int m, int g) {
    if (g < 12 || g > 14)
        throw std::invalid_argument("bound_girth12_triangle_free: girth must be in [12, 14]");
    return std::max(std::sqrt(static_cast<double>(n)), std::sqrt(4.0 * m / 3.0));
}

int integer_strengthening(double value) {
    return static_cast<int>(std::ceil(value - kBoundTol));
}

namespace {

void finish_entry(BoundEntry& e, double value, std::optional<int> gamma) {
    e.applicable = true;
    e.value = value;
    e.ceil_value = integer_strengthening(value);
    if (gamma) {
        e.slack = *gamma - value;
        e.valid = *gamma >= value - kBoundTol;
    }
}

}  // namespace

BoundReport evaluate_all(const Graph& g, std::optional<int> gamma) {
    BoundReport r;
    r.n = g.n();
    r.m = g.m();
    r.girth = girth(g);
    auto s = structure_summary(g);
    r.min_degree = s.min_degree;
    r.connected = s.connected;
    r.has_universal_vertex = s.has_universal_vertex;
    // A star is a tree whose center touches every other vertex; for the
    // triangle-free graphs the girth gates admit, it is exactly the gamma=1 case.
    r.is_star = s.connected && s.has_universal_vertex && r.m == r.n - 1;
    r.gamma = gamma;
    if (r.girth.is_finite()) r.l = r.girth.value() / 3;

    bool g7 = r.connected && r.girth.at_least(7);
    if (g7 && !r.is_star) finish_entry(r.general_g7, bound_general_g7(r.n, r.m), gamma);
    if (g7 && r.min_degree >= 2) finish_entry(r.mindeg2_g7, bound_mindeg2_g7(r.n, r.m), gamma);
    if (r.connected && r.min_degree >= 2 && r.girth.is_finite() && r.girth.value() >= 12) {
        finish_entry(r.girth12, bound_girth12(r.n, r.m, r.girth.value()), gamma);
        if (r.girth.value() <= 14)
            finish_entry(r.girth12_tf, bound_girth12_triangle_free(r.n, r.m, r.girth.value()), gamma);
    }

    if (r.girth.is_finite()) {
        auto lim = lemma1_max_edges(std::max(r.n, 1), r.girth.value());
        r.lemma1.applicable = true;
        r.lemma1.value = lim.stated;
        r.lemma1.derived_value = lim.derived;
        r.lemma1.ceil_value = integer_strengthening(lim.stated);
        r.lemma1.slack = lim.stated - r.m;
        r.lemma1.valid = r.m <= lim.stated + kBoundTol;
    } else {
        r.lemma1.vacuous = true;  // forests carry no cycle to constrain
        r.lemma1.valid = true;
    }
    return r;
}

namespace {

using nlohmann::ordered_json;

ordered_json entry_json(const BoundEntry& e) {
    ordered_json j;
    j["applicable"] = e.applicable;
    if (e.value) j["value"] = *e.value;
    if (e.ceil_value) j["ceil_value"] = *e.ceil_value;
    if (e.slack) j["slack"] = *e.slack;
    if (e.valid) j["valid"] = *e.valid;
    return j;
}

ordered_json lemma1_json(const Lemma1Entry& e) {
    ordered_json j;
    j["applicable"] = e.applicable;
    if (e.vacuous) j["vacuous"] = true;
    if (e.value) j["value"] = *e.value;
    if (e.derived_value) j["derived_value"] = *e.derived_value;
    if (e.ceil_value) j["ceil_value"] = *e.ceil_value;
    if (e.slack) j["slack"] = *e.slack;
    if (e.valid) j["valid"] = *e.valid;
    return j;
}

}  // namespace

std::string bound_report_to_json(const BoundReport& r, int indent) {
    ordered_json j;
    j["n"] = r.n;
    j["m"] = r.m;
    if (r.girth.is_finite())
        j["girth"] = r.girth.value();
    else
        j["girth"] = "acyclic";
    j["min_degree"] = r.min_degree;
    j["connected"] = r.connected;
    j["is_star"] = r.is_star;
    if (r.l) j["l"] = *r.l;
    if (r.gamma) j["gamma"] = *r.gamma;
    if (r.has_universal_vertex) j["note"] = "domination number is 1";
    j["bounds"] = ordered_json{{"general_g7", entry_json(r.general_g7)},
                               {"mindeg2_g7", entry_json(r.mindeg2_g7)},
                               {"girth12", entry_json(r.girth12)},
                               {"girth12_tf", entry_json(r.girth12_tf)},
                               {"lemma1", lemma1_json(r.lemma1)}};
    return j.dump(indent);
}

}  // namespace girthguard
