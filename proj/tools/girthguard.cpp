// girthguard command line: girth/gamma/bounds/partition queries, generators,
// the corpus verifier, and the tight-instance search.
//
// Exit codes: 0 success, 1 usage error, 2 input format error,
// 3 precondition or verification failure.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "girthguard/config.hpp"
#include "girthguard/corpus.hpp"
#include "girthguard/generators.hpp"

namespace gg = girthguard;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFormat = 2;
constexpr int kExitVerification = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

gg::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open \"" + path + "\"");
    return gg::parse_edge_list(in);
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write \"" + out_path + "\"");
    out << text;
}

std::vector<int> parse_id_list(const std::string& text) {
    std::vector<int> ids;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad vertex id \"" + tok + "\"");
        ids.push_back(v);
    }
    return ids;
}

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

struct VerifyArgs {
    std::vector<std::string> files;
    std::vector<std::string> specs;
    std::string out_path;
    std::string csv_path;
    bool no_partition = false;
    bool timings = false;
    std::string solve;
    int brute_max_n = -1;
    int bb_max_n = -1;
    int brute_guard = -1;
};

gg::SolveConfig solve_config_from(const VerifyArgs& args) {
    gg::SolveOverrides cli;
    if (!args.solve.empty()) {
        auto method = gg::solve_method_from_string(args.solve);
        if (!method) throw std::invalid_argument("unknown solve method \"" + args.solve + "\"");
        cli.method = method;
    }
    if (args.brute_max_n >= 0) cli.brute_max_n = args.brute_max_n;
    if (args.bb_max_n >= 0) cli.bb_max_n = args.bb_max_n;
    if (args.brute_guard >= 0) cli.brute_guard = args.brute_guard;
    return gg::resolve_solve_config(cli);
}

int run(int argc, char** argv) {
    CLI::App app{"domination-number bounds toolkit for graphs without short cycles"};
    app.require_subcommand(1);

    std::string file;
    auto* girth_cmd = app.add_subcommand("girth", "print the girth of a graph");
    girth_cmd->add_option("file", file, "edge-list file")->required();

    std::string gamma_method = "auto";
    auto* gamma_cmd = app.add_subcommand("gamma", "print the domination number and a witness");
    gamma_cmd->add_option("file", file, "edge-list file")->required();
    gamma_cmd->add_option("--method", gamma_method, "auto|brute|bb")
        ->check(CLI::IsMember({"auto", "brute", "bb"}));

    bool bounds_gamma_exact = false;
    int bounds_gamma = -1;
    auto* bounds_cmd = app.add_subcommand("bounds", "print the bound report as JSON");
    bounds_cmd->add_option("file", file, "edge-list file")->required();
    auto* opt_exact = bounds_cmd->add_flag("--gamma-exact", bounds_gamma_exact,
                                           "solve gamma exactly and grade the bounds");
    bounds_cmd->add_option("--gamma", bounds_gamma, "take gamma as given")
        ->excludes(opt_exact);

    std::string dominating_set;
    auto* partition_cmd =
        app.add_subcommand("partition", "partition the graph around a dominating set");
    partition_cmd->add_option("file", file, "edge-list file")->required();
    partition_cmd->add_option("--dominating-set", dominating_set,
                              "comma-separated ids; defaults to a solved minimum set");

    std::string gen_kind, gen_name, gen_input, gen_out;
    int gen_n = 0, gen_k = 0, gen_girth = 0, gen_times = 1;
    uint64_t gen_seed = 0;
    auto* gen_cmd = app.add_subcommand("gen", "generate a graph and print its edge list");
    gen_cmd->add_option("kind", gen_kind, "cycle|path|star|cage|random-girth|subdivide")
        ->required()
        ->check(CLI::IsMember({"cycle", "path", "star", "cage", "random-girth", "subdivide"}));
    gen_cmd->add_option("--n", gen_n, "vertex count / target size");
    gen_cmd->add_option("--k", gen_k, "leaf count for star");
    gen_cmd->add_option("--name", gen_name, "cage name");
    gen_cmd->add_option("--girth", gen_girth, "girth floor for random-girth");
    gen_cmd->add_option("--seed", gen_seed, "stream seed for random-girth");
    gen_cmd->add_option("--input", gen_input, "edge-list file to subdivide");
    gen_cmd->add_option("--times", gen_times, "interior vertices per edge for subdivide");
    gen_cmd->add_option("-o,--out", gen_out, "write to file instead of stdout");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "run the full verification pipeline");
    verify_cmd->add_option("files", verify.files, "edge-list files");
    verify_cmd->add_option("--spec", verify.specs, "generator specs, e.g. cycle:n=7");
    verify_cmd->add_option("--out", verify.out_path, "write the JSON report here");
    verify_cmd->add_option("--csv", verify.csv_path, "also write a CSV projection");
    verify_cmd->add_flag("--no-partition", verify.no_partition, "skip partition checks");
    verify_cmd->add_flag("--timings", verify.timings, "include wall times in the report");
    verify_cmd->add_option("--solve", verify.solve, "auto|brute|bb|skip");
    verify_cmd->add_option("--brute-max-n", verify.brute_max_n,
                           "auto: largest n for the exhaustive solver");
    verify_cmd->add_option("--bb-max-n", verify.bb_max_n,
                           "auto: largest n for branch and bound");
    verify_cmd->add_option("--brute-guard", verify.brute_guard,
                           "hard ceiling for the exhaustive solver");

    int sharp_girth = 7, sharp_max_n = 0, sharp_max_m = -1;
    auto* sharp_cmd = app.add_subcommand("sharp", "search for tight bound instances");
    sharp_cmd->add_option("--girth", sharp_girth, "girth class to sweep")->required();
    sharp_cmd->add_option("--max-n", sharp_max_n, "largest vertex count")->required();
    sharp_cmd->add_option("--max-m", sharp_max_m, "largest edge count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (girth_cmd->parsed()) {
        std::cout << gg::girth(load_graph(file)).to_string() << "\n";
        return kExitOk;
    }

    if (gamma_cmd->parsed()) {
        gg::Graph g = load_graph(file);
        gg::SolveConfig config = gg::resolve_solve_config({});
        gg::DominationCertificate cert;
        if (gamma_method == "brute" ||
            (gamma_method == "auto" && g.n() <= config.brute_max_n))
            cert = gg::gamma_brute(g, std::max(1, gg::greedy_upper_bound(g).size()),
                                   config.brute_guard);
        else
            cert = gg::gamma_exact(g);
        std::cout << cert.size() << "\n";
        for (size_t i = 0; i < cert.members.size(); ++i)
            std::cout << cert.members[i] << (i + 1 < cert.members.size() ? " " : "");
        if (!cert.members.empty()) std::cout << "\n";
        return kExitOk;
    }

    if (bounds_cmd->parsed()) {
        gg::Graph g = load_graph(file);
        std::optional<int> gamma;
        if (bounds_gamma_exact) gamma = gg::gamma_exact(g).size();
        else if (bounds_gamma >= 0) gamma = bounds_gamma;
        std::cout << gg::bound_report_to_json(gg::evaluate_all(g, gamma)) << "\n";
        return kExitOk;
    }

    if (partition_cmd->parsed()) {
        gg::Graph g = load_graph(file);
        std::vector<int> seed_set;
        if (!dominating_set.empty()) seed_set = parse_id_list(dominating_set);
        else seed_set = gg::gamma_exact(g).members;
        auto outcome = gg::build_partition(g, seed_set);
        if (auto* smaller = std::get_if<gg::SmallerSetCertificate>(&outcome)) {
            std::cerr << "input set of size " << seed_set.size()
                      << " is not minimum; found a smaller dominating set\n";
            std::cout << "smaller_set=";
            for (size_t i = 0; i < smaller->certificate.members.size(); ++i)
                std::cout << (i ? "," : "") << smaller->certificate.members[i];
            std::cout << "\n";
            return kExitVerification;
        }
        std::cout << gg::serialize_partition(std::get<gg::Partition>(outcome));
        return kExitOk;
    }

    if (gen_cmd->parsed()) {
        gg::GeneratorSpec spec;
        if (gen_kind == "cycle") {
            spec.kind = gg::GeneratorSpec::Kind::Cycle;
            spec.n = gen_n;
        } else if (gen_kind == "path") {
            spec.kind = gg::GeneratorSpec::Kind::Path;
            spec.n = gen_n;
        } else if (gen_kind == "star") {
            spec.kind = gg::GeneratorSpec::Kind::Star;
            spec.leaves = gen_k;
        } else if (gen_kind == "cage") {
            spec.kind = gg::GeneratorSpec::Kind::Cage;
            spec.cage = gen_name;
        } else if (gen_kind == "random-girth") {
            spec.kind = gg::GeneratorSpec::Kind::RandomGirth;
            spec.n = gen_n;
            spec.girth = gen_girth;
            spec.seed = gen_seed;
        } else {
            spec.kind = gg::GeneratorSpec::Kind::Subdivide;
            spec.input_path = gen_input;
            spec.times = gen_times;
        }
        write_output(gg::emit_edge_list(gg::realize(spec)), gen_out);
        return kExitOk;
    }

    if (verify_cmd->parsed()) {
        gg::CorpusOptions options;
        options.solve = solve_config_from(verify);
        options.check_partition = !verify.no_partition;
        options.include_timings = verify.timings;

        std::vector<std::pair<std::string, gg::Graph>> inputs;
        for (const auto& path : verify.files) inputs.emplace_back(path, load_graph(path));
        for (const auto& text : verify.specs) {
            auto spec = gg::parse_generator_spec(text);
            inputs.emplace_back(gg::to_string(spec), gg::realize(spec));
        }

        auto report = gg::run_corpus(inputs, options);
        write_output(gg::corpus_report_to_json(report, options, iso_timestamp()),
                     verify.out_path);
        if (!verify.csv_path.empty())
            write_output(gg::corpus_report_to_csv(report), verify.csv_path);

        std::cerr << "verified " << report.records.size() << " graph(s), "
                  << report.violation_count << " violation(s)\n";
        return report.ok ? kExitOk : kExitVerification;
    }

    if (sharp_cmd->parsed()) {
        std::optional<int> m_cap;
        if (sharp_max_m >= 0) m_cap = sharp_max_m;
        auto hits = gg::search_sharp(sharp_girth, sharp_max_n, m_cap);
        for (const auto& hit : hits)
            std::cout << "TIGHT " << hit.id << " n=" << hit.n << " m=" << hit.m
                      << " girth=" << hit.girth.to_string() << " gamma=" << hit.gamma
                      << " bound=" << hit.bound << " value=" << hit.value << "\n";
        std::cerr << hits.size() << " tight instance(s)\n";
        return kExitOk;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gg::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitFormat;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitFormat;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
}
