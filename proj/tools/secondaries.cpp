// Command-line front end: parse a permutation group, run one of the
// computation pipelines, emit text or JSON.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specht/characters.hpp"
#include "specht/combinatorics.hpp"
#include "specht/engine.hpp"
#include "specht/errors.hpp"
#include "specht/multiplicity.hpp"
#include "specht/permgroup.hpp"
#include "specht/polynomial.hpp"
#include "specht/specht_poly.hpp"

namespace {

struct RunConfig {
    int degree = 0;
    std::string generators;
    std::optional<int> edge_group;
    std::string command = "secondaries";
    bool expand = false;
    bool verify = false;
    std::optional<std::string> strategy;
    int order = 20;
    int workers = 1;
    std::string cache_dir;
    std::string format = "text";
    bool timing = false;
};

std::vector<specht::Permutation> parse_generator_list(const std::string& text, int degree) {
    std::vector<specht::Permutation> gens;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        std::string piece =
            end == std::string::npos ? text.substr(start) : text.substr(start, end - start);
        bool blank = piece.find_first_not_of(" \t") == std::string::npos;
        if (!blank) gens.push_back(specht::parse_permutation(piece, degree));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return gens;
}

specht::PermutationGroup build_group(const RunConfig& config) {
    if (config.edge_group) return specht::edge_action_group(*config.edge_group);
    return specht::PermutationGroup(config.degree,
                                    parse_generator_list(config.generators, config.degree));
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    return out;
}

void print_series_json(std::ostream& out, const specht::UnivariateSeries& series) {
    out << "{\"variable\":\"z\",\"truncated\":" << (series.is_truncated() ? "true" : "false");
    if (series.is_truncated()) out << ",\"order\":" << series.order();
    out << ",\"coefficients\":[";
    for (std::size_t i = 0; i < series.coefficients().size(); ++i) {
        if (i) out << ',';
        out << '"' << series.coefficients()[i].get_str() << '"';
    }
    out << "]}";
}

void print_partition_json(std::ostream& out, const specht::Partition& p) {
    out << '[';
    for (int i = 0; i < p.length(); ++i) {
        if (i) out << ',';
        out << p.part(i);
    }
    out << ']';
}

void print_tableau_json(std::ostream& out, const specht::StandardTableau& t) {
    out << '[';
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        if (r) out << ',';
        out << '[';
        for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
            if (c) out << ',';
            out << t.rows()[r][c];
        }
        out << ']';
    }
    out << ']';
}

void print_polynomial_json(std::ostream& out, const specht::SparsePolynomial& p) {
    out << '[';
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) out << ',';
        first = false;
        out << "{\"coeff\":\"" << c.get_str() << "\",\"exponents\":[";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out << ',';
            out << e[i];
        }
        out << "]}";
    }
    out << ']';
}

int run_multiplicities(const RunConfig& config, const specht::PermutationGroup& group,
                       const specht::CharacterTableOptions& chartable_options) {
    auto table = specht::character_table(group.degree(), chartable_options);
    specht::MultiplicityTable mult = specht::multiplicity_table(group, *table);
    // Display order mirrors the reference output: [1^n] first.
    std::vector<std::pair<specht::Partition, std::int64_t>> display(mult.entries.rbegin(),
                                                                    mult.entries.rend());
    if (config.format == "json") {
        std::ostringstream out;
        out << "{\"degree\":" << group.degree() << ",\"group_order\":" << group.order()
            << ",\"multiplicities\":[";
        for (std::size_t i = 0; i < display.size(); ++i) {
            if (i) out << ',';
            out << "{\"partition\":";
            print_partition_json(out, display[i].first);
            out << ",\"multiplicity\":" << display[i].second << '}';
        }
        out << "]}";
        std::cout << out.str() << "\n";
    } else {
        std::ostringstream out;
        out << '{';
        for (std::size_t i = 0; i < display.size(); ++i) {
            if (i) out << ", ";
            out << display[i].first.to_string() << ": " << display[i].second;
        }
        out << '}';
        std::cout << out.str() << "\n";
    }
    return 0;
}

int run_numerator(const RunConfig& config, const specht::PermutationGroup& group,
                  const specht::CharacterTableOptions& chartable_options) {
    auto table = specht::character_table(group.degree(), chartable_options);
    specht::UnivariateSeries numerator = specht::secondary_degree_numerator(group, *table);
    if (config.format == "json") {
        std::ostringstream out;
        print_series_json(out, numerator);
        std::cout << out.str() << "\n";
    } else {
        std::cout << numerator.to_string() << "\n";
    }
    return 0;
}

int run_molien(const RunConfig& config, const specht::PermutationGroup& group) {
    specht::UnivariateSeries series = specht::molien_series(group, config.order);
    if (config.format == "json") {
        std::ostringstream out;
        print_series_json(out, series);
        std::cout << out.str() << "\n";
    } else {
        std::cout << series.to_string() << "\n";
    }
    return 0;
}

int run_chartable(const RunConfig& config, const specht::CharacterTableOptions& chartable_options) {
    auto table = specht::character_table(config.degree, chartable_options);
    if (config.format == "json") {
        std::ostringstream out;
        out << "{\"n\":" << table->n << ",\"partitions\":[";
        for (std::size_t i = 0; i < table->index.size(); ++i) {
            if (i) out << ',';
            print_partition_json(out, table->index[i]);
        }
        out << "],\"values\":[";
        for (std::size_t i = 0; i < table->values.size(); ++i) {
            if (i) out << ',';
            out << '[';
            for (std::size_t j = 0; j < table->values[i].size(); ++j) {
                if (j) out << ',';
                out << table->values[i][j];
            }
            out << ']';
        }
        out << "]}";
        std::cout << out.str() << "\n";
    } else {
        std::cout << "specht-chartable v1 n=" << table->n << "\n";
        for (const auto& row : table->values) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j) std::cout << ' ';
                std::cout << row[j];
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int run_specht_table(const RunConfig& config) {
    const int n = config.degree;
    std::ostringstream out;
    bool json = config.format == "json";
    if (json) out << '[';
    bool first = true;
    for (const auto& lambda : specht::partitions(n)) {
        const auto tableaux = specht::standard_tableaux(lambda);
        for (const auto& s : tableaux) {
            for (const auto& t : tableaux) {
                specht::SparsePolynomial mono(n);
                mono.add_term(specht::monomial(s, t), specht::Rational(1));
                specht::SparsePolynomial f = specht::higher_specht(s, t);
                if (json) {
                    if (!first) out << ',';
                    out << "{\"shape\":";
                    print_partition_json(out, lambda);
                    out << ",\"S\":";
                    print_tableau_json(out, s);
                    out << ",\"T\":";
                    print_tableau_json(out, t);
                    out << ",\"monomial\":\"" << json_escape(mono.to_string()) << "\",\"F\":";
                    print_polynomial_json(out, f);
                    out << '}';
                } else {
                    out << "S=" << s.to_string() << "  T=" << t.to_string()
                        << "  monomial=" << mono.to_string() << "  F=" << f.to_string() << "\n";
                }
                first = false;
            }
        }
    }
    if (json) out << ']';
    std::cout << out.str();
    if (json) std::cout << "\n";
    return 0;
}

int run_secondaries(const RunConfig& config, const specht::PermutationGroup& group,
                    const specht::CharacterTableOptions& chartable_options) {
    specht::EngineOptions options;
    options.expand = config.expand;
    options.verify = config.verify;
    options.workers = config.workers;
    options.chartable = chartable_options;
    options.materialize = false; // serialization streams from the blocks
    if (config.strategy) {
        if (*config.strategy == "concrete") {
            options.strategy = specht::TranslationStrategy::concrete;
        } else if (*config.strategy == "seminormal-direct") {
            options.strategy = specht::TranslationStrategy::seminormal_direct;
        }
    }
    specht::EngineResult result = specht::secondary_invariants(group, options);
    if (config.format == "json") {
        specht::write_engine_result_json(std::cout, result, config.timing);
        std::cout << "\n";
    } else {
        std::cout << specht::engine_trace_text(result);
        if (config.timing) {
            std::cout << "TOTAL TIME (ms) :  " << result.report.elapsed_ms_total << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig config;
    const char* env_cache = std::getenv("SPECHT_CACHE_DIR");
    config.cache_dir = env_cache ? env_cache : ".specht-cache";

    CLI::App app{"Secondary invariants of permutation groups via symmetric group representations"};
    bool degree_given = false;
    app.add_option("--degree", config.degree, "degree n of the ambient symmetric group")
        ->check(CLI::PositiveNumber)
        ->each([&](const std::string&) { degree_given = true; });
    app.add_option("--generators", config.generators,
                   "generators in cycle notation, separated by ';' (empty = trivial group)");
    app.add_option("--edge-group", config.edge_group,
                   "use the action of S_m on unordered pairs; sets --degree to C(m,2)")
        ->check(CLI::Range(2, 1000));
    app.add_option("--command", config.command, "computation to run")
        ->check(CLI::IsMember(
            {"multiplicities", "numerator", "molien", "secondaries", "chartable", "specht-table"}));
    app.add_flag("--expand", config.expand, "expand secondary invariants as polynomials");
    app.add_flag("--verify", config.verify, "verify generator-fixedness exactly (implies --expand)");
    app.add_option("--strategy", config.strategy,
                   "translation strategy when expanding: concrete | seminormal-direct")
        ->check(CLI::IsMember({"concrete", "seminormal-direct"}));
    app.add_option("--order", config.order, "series truncation order")->check(CLI::NonNegativeNumber);
    app.add_option("--workers", config.workers, "parallel workers for per-shape jobs")
        ->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", config.cache_dir,
                   "character table cache directory ('' disables; env SPECHT_CACHE_DIR overrides "
                   "the default)");
    app.add_option("--format", config.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--timing", config.timing, "include timing in output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (config.edge_group) {
            int expected = (*config.edge_group * (*config.edge_group - 1)) / 2;
            if (degree_given && config.degree != expected) {
                throw std::invalid_argument("--degree conflicts with --edge-group (expected " +
                                            std::to_string(expected) + ")");
            }
            config.degree = expected;
            if (!config.generators.empty()) {
                throw std::invalid_argument("--generators cannot be combined with --edge-group");
            }
        } else if (!degree_given) {
            throw std::invalid_argument("missing required option --degree");
        }

        specht::CharacterTableOptions chartable_options;
        if (!config.cache_dir.empty()) chartable_options.cache_dir = config.cache_dir;

        if (config.command == "chartable") return run_chartable(config, chartable_options);
        if (config.command == "specht-table") return run_specht_table(config);

        specht::PermutationGroup group = build_group(config);
        if (config.command == "multiplicities") {
            return run_multiplicities(config, group, chartable_options);
        }
        if (config.command == "numerator") return run_numerator(config, group, chartable_options);
        if (config.command == "molien") return run_molien(config, group);
        return run_secondaries(config, group, chartable_options);
    } catch (const specht::consistency_error& e) {
        std::cout << "{\"error\":\"consistency\",\"detail\":\"" << json_escape(e.what()) << "\"}"
                  << std::endl;
        return 1;
    } catch (const specht::resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
