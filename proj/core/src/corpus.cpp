#include "girthguard/corpus.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

#include "girthguard/generators.hpp"

namespace girthguard {

std::string to_string(PartitionVerdict verdict) {
    switch (verdict) {
        case PartitionVerdict::Ok: return "ok";
        case PartitionVerdict::Violations: return "violations";
        case PartitionVerdict::Refuted: return "refuted";
        case PartitionVerdict::Skipped: return "skipped";
    }
    return "?";
}

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
        .count();
}

bool is_tight(const BoundEntry& e, std::optional<int> gamma) {
    return e.applicable && gamma && e.value && std::abs(*gamma - *e.value) <= kBoundTol;
}

struct BoundView {
    const char* name;
    const BoundEntry* entry;
};

std::vector<BoundView> gamma_bounds(const BoundReport& r) {
    return {{"general_g7", &r.general_g7},
            {"mindeg2_g7", &r.mindeg2_g7},
            {"girth12", &r.girth12},
            {"girth12_tf", &r.girth12_tf}};
}

}  // namespace

CorpusReport run_corpus(const std::vector<std::pair<std::string, Graph>>& inputs,
                        const CorpusOptions& options) {
    CorpusReport report;
    report.per_bound = {{"general_g7", {}},
                        {"mindeg2_g7", {}},
                        {"girth12", {}},
                        {"girth12_tf", {}},
                        {"lemma1", {}}};
    auto& agg = report.per_bound;

    for (const auto& [id, graph] : inputs) {
        CorpusRecord rec;
        rec.id = id;
        rec.n = graph.n();
        rec.m = graph.m();
        rec.girth = girth(graph);
        auto summary = structure_summary(graph);
        rec.min_degree = summary.min_degree;
        rec.connected = summary.connected;

        auto t0 = std::chrono::steady_clock::now();
        SolveMethod method = options.solve.method;
        if (method == SolveMethod::Auto) {
            if (rec.n <= options.solve.brute_max_n) method = SolveMethod::Brute;
            else if (rec.n <= options.solve.bb_max_n) method = SolveMethod::BranchAndBound;
            else method = SolveMethod::Skip;
        }
        switch (method) {
            case SolveMethod::Brute:
                rec.gamma = gamma_brute(graph, std::max(1, greedy_upper_bound(graph).size()),
                                        options.solve.brute_guard);
                rec.gamma_method = "brute";
                break;
            case SolveMethod::BranchAndBound:
                rec.gamma = gamma_exact(graph);
                rec.gamma_method = "bb";
                break;
            default:
                rec.gamma_method = "skip";
                break;
        }
        rec.timings.solve_ms = elapsed_ms(t0);

        t0 = std::chrono::steady_clock::now();
        std::optional<int> gamma_size;
        if (rec.gamma) gamma_size = rec.gamma->size();
        rec.bounds = evaluate_all(graph, gamma_size);
        rec.timings.bounds_ms = elapsed_ms(t0);

        for (const auto& [name, entry] : gamma_bounds(rec.bounds)) {
            for (auto& [agg_name, counts] : agg) {
                if (agg_name != name) continue;
                if (entry->applicable) {
                    ++counts.applicable;
                    if (entry->valid && *entry->valid) ++counts.valid;
                    if (is_tight(*entry, gamma_size)) ++counts.tight;
                    if (entry->valid && !*entry->valid)
                        rec.problems.push_back("bound " + std::string(name) +
                                               " violated: gamma < value");
                }
            }
        }
        if (rec.bounds.lemma1.applicable) {
            auto& counts = agg[4].second;
            ++counts.applicable;
            if (rec.bounds.lemma1.valid && *rec.bounds.lemma1.valid) ++counts.valid;
            else rec.problems.push_back("lemma1 edge bound violated: m > n^2/(g-1)");
            if (rec.bounds.lemma1.value &&
                std::abs(*rec.bounds.lemma1.value - rec.m) <= kBoundTol)
                ++counts.tight;
        }

        t0 = std::chrono::steady_clock::now();
        if (options.check_partition && rec.gamma) {
            auto outcome = build_partition(graph, rec.gamma->members);
            if (auto* smaller = std::get_if<SmallerSetCertificate>(&outcome)) {
                rec.partition_verdict = PartitionVerdict::Refuted;
                rec.smaller_set = smaller->certificate.members;
                if (rec.gamma->verified_minimum)
                    rec.problems.push_back(
                        "partition refuted a verified-minimum certificate (size " +
                        std::to_string(smaller->certificate.size()) + " found)");
            } else {
                const auto& partition = std::get<Partition>(outcome);
                auto violations = validate_partition(graph, partition);
                rec.chain = check_partition_chains(graph, partition);
                for (const auto& v : violations) rec.problems.push_back("partition: " + v.detail);
                for (const auto& c : rec.chain->checks)
                    if (c.applies && !c.ok)
                        rec.problems.push_back("chain: " + c.name + " failed (" +
                                               std::to_string(c.lhs) + " vs " +
                                               std::to_string(c.rhs) + ")");
                rec.partition_verdict = violations.empty() && rec.chain->all_ok()
                                            ? PartitionVerdict::Ok
                                            : PartitionVerdict::Violations;
            }
        }
        rec.timings.partition_ms = elapsed_ms(t0);

        report.violation_count += static_cast<int>(rec.problems.size());
        report.records.push_back(std::move(rec));
    }
    report.ok = report.violation_count == 0;
    return report;
}

namespace {

using nlohmann::ordered_json;

ordered_json certificate_json(const DominationCertificate& c, const std::string& method) {
    ordered_json j;
    j["size"] = c.size();
    j["method"] = method;
    j["verified_minimum"] = c.verified_minimum;
    j["members"] = c.members;
    return j;
}

ordered_json chain_json(const ChainReport& chain) {
    ordered_json j;
    j["gamma"] = chain.gamma;
    j["inner_edges"] = chain.inner_edges;
    j["intra_edges"] = chain.intra_edges;
    j["max_subset_size"] = chain.max_subset_size;
    j["quotient_edges"] = chain.quotient_edges;
    j["quotient_girth"] = chain.quotient_girth.is_finite()
                              ? ordered_json(chain.quotient_girth.value())
                              : ordered_json("acyclic");
    if (chain.l) j["l"] = *chain.l;
    ordered_json checks = ordered_json::array();
    for (const auto& c : chain.checks) {
        if (!c.applies) continue;
        checks.push_back({{"name", c.name}, {"ok", c.ok}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    }
    j["checks"] = checks;
    return j;
}

}  // namespace

std::string corpus_report_to_json(const CorpusReport& report, const CorpusOptions& options,
                                  const std::optional<std::string>& timestamp, int indent) {
    ordered_json j;
    j["schema_version"] = 1;
    if (timestamp) j["timestamp"] = *timestamp;
    j["options"] = {{"solve", to_string(options.solve.method)},
                    {"brute_max_n", options.solve.brute_max_n},
                    {"bb_max_n", options.solve.bb_max_n},
                    {"check_partition", options.check_partition}};

    ordered_json graphs = ordered_json::array();
    for (const auto& rec : report.records) {
        ordered_json r;
        r["id"] = rec.id;
        r["n"] = rec.n;
        r["m"] = rec.m;
        r["girth"] = rec.girth.is_finite() ? ordered_json(rec.girth.value())
                                           : ordered_json("acyclic");
        r["min_degree"] = rec.min_degree;
        r["connected"] = rec.connected;
        if (rec.gamma) r["gamma"] = certificate_json(*rec.gamma, rec.gamma_method);
        else r["gamma"] = nullptr;
        r["bounds"] = ordered_json::parse(bound_report_to_json(rec.bounds, indent));
        r["partition"] = to_string(rec.partition_verdict);
        if (!rec.smaller_set.empty()) r["smaller_set"] = rec.smaller_set;
        if (rec.chain) r["chain"] = chain_json(*rec.chain);
        if (!rec.problems.empty()) r["problems"] = rec.problems;
        if (options.include_timings)
            r["timings_ms"] = {{"solve", rec.timings.solve_ms},
                               {"bounds", rec.timings.bounds_ms},
                               {"partition", rec.timings.partition_ms}};
        graphs.push_back(std::move(r));
    }
    j["graphs"] = std::move(graphs);

    ordered_json per_bound;
    for (const auto& [name, counts] : report.per_bound)
        per_bound[name] = {{"applicable", counts.applicable},
                           {"valid", counts.valid},
                           {"tight", counts.tight}};
    j["aggregates"] = {{"graphs", report.records.size()},
                       {"violations", report.violation_count},
                       {"bounds", per_bound}};
    j["ok"] = report.ok;
    return j.dump(indent) + "\n";
}

namespace {

std::string csv_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void csv_bound_row(std::string& out, const CorpusRecord& rec, const std::string& bound,
                   const BoundEntry& e, std::optional<int> gamma) {
    out += rec.id + "," + std::to_string(rec.n) + "," + std::to_string(rec.m) + "," +
           rec.girth.to_string() + "," + std::to_string(rec.min_degree) + "," +
           (rec.connected ? "true" : "false") + ",";
    out += gamma ? std::to_string(*gamma) : "";
    out += "," + bound + "," + (e.applicable ? "true" : "false") + ",";
    out += e.value ? csv_double(*e.value) : "";
    out += ",";
    out += e.ceil_value ? std::to_string(*e.ceil_value) : "";
    out += ",";
    out += e.slack ? csv_double(*e.slack) : "";
    out += ",";
    out += e.valid ? (*e.valid ? "true" : "false") : "";
    out += ",";
    out += is_tight(e, gamma) ? "true" : "false";
    out += "\n";
}

}  // namespace

std::string corpus_report_to_csv(const CorpusReport& report) {
    std::string out =
        "id,n,m,girth,min_degree,connected,gamma,bound,applicable,value,ceil_value,slack,"
        "valid,tight\n";
    for (const auto& rec : report.records) {
        std::optional<int> gamma;
        if (rec.gamma) gamma = rec.gamma->size();
        for (const auto& [name, entry] : gamma_bounds(rec.bounds))
            csv_bound_row(out, rec, name, *entry, gamma);
        BoundEntry lemma;
        lemma.applicable = rec.bounds.lemma1.applicable;
        lemma.value = rec.bounds.lemma1.value;
        lemma.ceil_value = rec.bounds.lemma1.ceil_value;
        lemma.slack = rec.bounds.lemma1.slack;
        lemma.valid = rec.bounds.lemma1.valid;
        csv_bound_row(out, rec, "lemma1", lemma, gamma);
    }
    return out;
}

std::vector<SharpHit> search_sharp(int girth_target, int n_max, std::optional<int> m_max) {
    if (girth_target < 7)
        throw std::invalid_argument("search_sharp: girth_target must be at least 7");
    if (n_max > 20)
        throw std::invalid_argument("search_sharp: n_max must stay <= 20 for exact solving");
    const int m_cap = m_max.value_or(n_max * (n_max - 1) / 2);

    auto sized_spec = [](GeneratorSpec::Kind kind, int n) {
        GeneratorSpec spec;
        spec.kind = kind;
        spec.n = n;
        return spec;
    };
    std::vector<std::pair<std::string, Graph>> sweep;
    for (int k = girth_target; k <= n_max; ++k)
        sweep.emplace_back(to_string(sized_spec(GeneratorSpec::Kind::Cycle, k)), gen_cycle(k));
    for (int k = 2; k <= n_max; ++k)
        sweep.emplace_back(to_string(sized_spec(GeneratorSpec::Kind::Path, k)), gen_path(k));
    for (CageName cage : {CageName::Petersen, CageName::Heawood, CageName::McGee,
                          CageName::TutteCoxeter}) {
        Graph g = gen_cage(cage);
        Girth gi = girth(g);
        if (g.n() <= n_max && gi.is_finite() && gi.value() >= girth_target) {
            GeneratorSpec spec;
            spec.kind = GeneratorSpec::Kind::Cage;
            spec.cage = to_string(cage);
            sweep.emplace_back(to_string(spec), std::move(g));
        }
    }
    // Documented seed schedule: seeds 1..5 per target size.
    for (int n_target = girth_target; n_target <= n_max; ++n_target) {
        for (uint64_t seed = 1; seed <= 5; ++seed) {
            Graph g = gen_random_girth(n_target, girth_target, seed);
            if (g.n() > n_max) continue;
            GeneratorSpec spec;
            spec.kind = GeneratorSpec::Kind::RandomGirth;
            spec.n = n_target;
            spec.girth = girth_target;
            spec.seed = seed;
            sweep.emplace_back(to_string(spec), std::move(g));
        }
    }

    std::vector<SharpHit> hits;
    for (const auto& [id, graph] : sweep) {
        if (graph.m() > m_cap) continue;
        auto cert = gamma_exact(graph);
        auto bounds = evaluate_all(graph, cert.size());
        for (const auto& [name, entry] : gamma_bounds(bounds)) {
            if (!is_tight(*entry, cert.size())) continue;
            hits.push_back(SharpHit{id, graph.n(), graph.m(), girth(graph), cert.size(), name,
                                    *entry->value});
        }
    }
    return hits;
}

}  // namespace girthguard
