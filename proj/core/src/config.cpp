#include "girthguard/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace girthguard {

std::optional<SolveMethod> solve_method_from_string(const std::string& name) {
    if (name == "auto") return SolveMethod::Auto;
    if (name == "brute") return SolveMethod::Brute;
    if (name == "bb") return SolveMethod::BranchAndBound;
    if (name == "skip") return SolveMethod::Skip;
    return std::nullopt;
}

std::string to_string(SolveMethod method) {
    switch (method) {
        case SolveMethod::Auto: return "auto";
        case SolveMethod::Brute: return "brute";
        case SolveMethod::BranchAndBound: return "bb";
        case SolveMethod::Skip: return "skip";
    }
    return "?";
}

SolveConfig parse_config_file(std::istream& in, SolveConfig base) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        auto end = line.find_last_not_of(" \t\r");
        line = line.substr(begin, end - begin + 1);

        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": expected key=value");
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t");
            auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));

        auto as_int = [&](const std::string& v) {
            size_t pos = 0;
            int parsed = 0;
            try {
                parsed = std::stoi(v, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != v.size() || v.empty() || parsed < 0)
                throw std::runtime_error("config line " + std::to_string(line_no) +
                                         ": expected a non-negative integer for " + key);
            return parsed;
        };

        if (key == "solve") {
            auto method = solve_method_from_string(value);
            if (!method)
                throw std::runtime_error("config line " + std::to_string(line_no) +
                                         ": unknown solve method \"" + value + "\"");
            base.method = *method;
        } else if (key == "brute_max_n") {
            base.brute_max_n = as_int(value);
        } else if (key == "bb_max_n") {
            base.bb_max_n = as_int(value);
        } else if (key == "brute_guard") {
            base.brute_guard = as_int(value);
        }
        // unknown keys are ignored so configs can be shared across versions
    }
    return base;
}

SolveConfig resolve_solve_config(const SolveOverrides& cli) {
    SolveConfig config;
    if (const char* path = std::getenv("GIRTHGUARD_CONFIG"); path && *path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error(std::string("cannot open config file \"") + path + "\"");
        config = parse_config_file(in, config);
    }
    if (cli.method) config.method = *cli.method;
    if (cli.brute_max_n) config.brute_max_n = *cli.brute_max_n;
    if (cli.bb_max_n) config.bb_max_n = *cli.bb_max_n;
    if (cli.brute_guard) config.brute_guard = *cli.brute_guard;
    return config;
}

}  // namespace girthguard
