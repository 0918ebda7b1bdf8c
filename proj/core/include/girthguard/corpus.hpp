#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "girthguard/bounds.hpp"
#include "girthguard/config.hpp"
#include "girthguard/domination.hpp"
#include "girthguard/graph.hpp"
#include "girthguard/partition.hpp"

namespace girthguard {

struct CorpusOptions {
    SolveConfig solve;
    bool check_partition = true;
    /// Wall times are measured either way; this flag decides whether they
    /// enter the JSON report (two equal runs stay byte-identical without
    /// them, timestamp aside).
    bool include_timings = false;
};

enum class PartitionVerdict : uint8_t { Ok, Violations, Refuted, Skipped };
std::string to_string(PartitionVerdict verdict);

struct StageTimings {
    double solve_ms = 0.0;
    double bounds_ms = 0.0;
    double partition_ms = 0.0;
};

struct CorpusRecord {
    std::string id;  // file path or generator spec string
    int n = 0;
    int m = 0;
    Girth girth = Girth::acyclic();
    int min_degree = 0;
    bool connected = false;
    std::optional<DominationCertificate> gamma;
    std::string gamma_method = "skip";  // brute | bb | skip
    BoundReport bounds;
    PartitionVerdict partition_verdict = PartitionVerdict::Skipped;
    std::optional<ChainReport> chain;
    std::vector<int> smaller_set;        // refutation members, if any
    std::vector<std::string> problems;   // everything that makes the run fail
    StageTimings timings;
};

struct BoundAggregate {
    int applicable = 0;
    int valid = 0;
    int tight = 0;
};

struct CorpusReport {
    std::vector<CorpusRecord> records;
    // aggregate order: general_g7, mindeg2_g7, girth12, girth12_tf, lemma1
    std::vector<std::pair<std::string, BoundAggregate>> per_bound;
    int violation_count = 0;
    bool ok = true;
};

/// Runs the full pipeline per graph, in input order: structure facts, exact
/// gamma by the configured method, every bound with validity verdicts, and
/// (when enabled and gamma was solved) the partition build, its validators,
/// and the measured edge-count chain. Any invalid bound, validator violation,
/// or refuted solver certificate lands in `problems` and flips ok to false.
CorpusReport run_corpus(const std::vector<std::pair<std::string, Graph>>& inputs,
                        const CorpusOptions& options);

/// JSON report; deterministic for fixed inputs except the timestamp argument
/// (pass nullopt to drop the field entirely).
std::string corpus_report_to_json(const CorpusReport& report, const CorpusOptions& options,
                                  const std::optional<std::string>& timestamp,
                                  int indent = 2);

/// One row per graph x bound; fixed header, "%.12g" floats.
std::string corpus_report_to_csv(const CorpusReport& report);

struct SharpHit {
    std::string id;
    int n = 0;
    int m = 0;
    Girth girth = Girth::acyclic();
    int gamma = 0;
    std::string bound;
    double value = 0.0;
};

/// Sweeps cycles, paths and the small cages that fit, plus a documented
/// seeded batch of girth-constrained random graphs (seeds 1..5 for every
/// n_target in [girth_target, n_max]), and reports every (instance, bound)
/// pair with |gamma - value| <= 1e-9. Requires girth_target >= 7 and
/// n_max <= 20 so exact solving stays trivial.
std::vector<SharpHit> search_sharp(int girth_target, int n_max,
                                   std::optional<int> m_max = std::nullopt);

}  // namespace girthguard
