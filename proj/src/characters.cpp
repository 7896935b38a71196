#include "specht/characters.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "specht/errors.hpp"
#include "specht/rational.hpp"

namespace specht {

namespace {

// Beta-set of a partition: strictly decreasing first-column hook lengths.
std::vector<int> beta_set(const Partition& lambda) {
    std::vector<int> beta;
    const int r = lambda.length();
    for (int i = 0; i < r; ++i) beta.push_back(lambda.part(i) + (r - 1 - i));
    return beta;
}

Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    std::vector<int> parts;
    const int r = static_cast<int>(beta.size());
    for (int i = 0; i < r; ++i) {
        int part = beta[static_cast<std::size_t>(i)] - (r - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

std::int64_t mn_recursive(const Partition& lambda, const std::vector<int>& mu, std::size_t mu_pos,
                          std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t>& memo) {
    if (mu_pos == mu.size()) return 1; // both shapes exhausted
    std::vector<int> mu_rest(mu.begin() + static_cast<std::ptrdiff_t>(mu_pos), mu.end());
    auto key = std::make_pair(lambda.parts(), mu_rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int m = mu[mu_pos];
    std::vector<int> beta = beta_set(lambda);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - m;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        // Height of the removed border strip = number of beta values passed over.
        int height = 0;
        for (int b : beta) {
            if (b > target && b < beta[i]) ++height;
        }
        std::vector<int> nbeta = beta;
        nbeta[i] = target;
        std::int64_t sign = (height % 2 == 0) ? 1 : -1;
        total += sign * mn_recursive(partition_from_beta(std::move(nbeta)), mu, mu_pos + 1, memo);
    }
    memo.emplace(std::move(key), total);
    return total;
}

std::mutex g_memo_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> g_memo;

std::mutex g_table_mutex;
std::map<int, std::shared_ptr<const CharacterTable>> g_tables;

} // namespace

std::int64_t CharacterTable::at(const Partition& lambda, const Partition& mu) const {
    return values[static_cast<std::size_t>(position_of(lambda))]
                 [static_cast<std::size_t>(position_of(mu))];
}

int CharacterTable::position_of(const Partition& p) const {
    auto it = std::find(index.begin(), index.end(), p);
    if (it == index.end()) throw std::invalid_argument("partition not of degree " + std::to_string(n));
    return static_cast<int>(it - index.begin());
}

std::int64_t mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n()) {
        throw std::invalid_argument("mn_character: partitions must have equal size");
    }
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    return mn_recursive(lambda, mu.parts(), 0, g_memo);
}

std::uint64_t class_size(const Partition& mu) {
    Integer denom = 1;
    int run = 0;
    int prev = 0;
    for (int i = 0; i <= mu.length(); ++i) {
        int part = i < mu.length() ? mu.part(i) : 0;
        if (part == prev) {
            ++run;
        } else {
            if (prev > 0) {
                for (int j = 0; j < run; ++j) denom *= prev;
                denom *= factorial(static_cast<unsigned>(run));
            }
            prev = part;
            run = 1;
        }
    }
    Integer size = factorial(static_cast<unsigned>(mu.n())) / denom;
    return to_uint64(size, "class size");
}

std::filesystem::path character_table_cache_file(const std::filesystem::path& dir, int n) {
    return dir / ("chartable_n" + std::to_string(n) + ".txt");
}

void write_character_table(const CharacterTable& table, const std::filesystem::path& file) {
    std::filesystem::create_directories(file.parent_path());
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write character table cache: " + file.string());
    out << "specht-chartable v1 n=" << table.n << "\n";
    for (const auto& row : table.values) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << ' ';
            out << row[j];
        }
        out << "\n";
    }
}

std::optional<CharacterTable> read_character_table(int n, const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    std::string header;
    std::getline(in, header);
    if (header != "specht-chartable v1 n=" + std::to_string(n)) return std::nullopt;
    CharacterTable table;
    table.n = n;
    table.index = partitions(n);
    const std::size_t p = table.index.size();
    table.values.assign(p, std::vector<std::int64_t>(p, 0));
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
            if (!(in >> table.values[i][j])) return std::nullopt;
        }
    }
    return table;
}

std::shared_ptr<const CharacterTable> character_table(int n, const CharacterTableOptions& options) {
    if (n < 1) throw std::invalid_argument("character_table: n must be positive");
    if (n > options.degree_cap) {
        throw resource_limit_error("character table degree " + std::to_string(n) +
                                   " exceeds the configured cap " +
                                   std::to_string(options.degree_cap));
    }
    {
        std::lock_guard<std::mutex> lock(g_table_mutex);
        if (auto it = g_tables.find(n); it != g_tables.end()) return it->second;
    }

    std::shared_ptr<CharacterTable> table;
    if (options.cache_dir) {
        if (auto loaded = read_character_table(n, character_table_cache_file(*options.cache_dir, n))) {
            table = std::make_shared<CharacterTable>(std::move(*loaded));
        }
    }
    if (!table) {
        table = std::make_shared<CharacterTable>();
        table->n = n;
        table->index = partitions(n);
        const std::size_t p = table->index.size();
        table->values.assign(p, std::vector<std::int64_t>(p, 0));
        for (std::size_t i = 0; i < p; ++i) {
            for (std::size_t j = 0; j < p; ++j) {
                table->values[i][j] = mn_character(table->index[i], table->index[j]);
            }
        }
        if (options.cache_dir) {
            write_character_table(*table, character_table_cache_file(*options.cache_dir, n));
        }
    }

    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto [it, inserted] = g_tables.emplace(n, table);
    return it->second;
}

} // namespace specht
