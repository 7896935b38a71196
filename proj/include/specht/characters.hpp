#ifndef SPECHT_CHARACTERS_HPP
#define SPECHT_CHARACTERS_HPP

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "specht/combinatorics.hpp"

namespace specht {

// Character table of S_n on the canonical partition order: rows index
// irreducibles (lambda), columns index cycle types (mu), both [n] first.
// Convention: lambda=[n] is the trivial character, lambda=[1^n] the sign.
struct CharacterTable {
    int n = 0;
    std::vector<Partition> index;                   // shared row and column index
    std::vector<std::vector<std::int64_t>> values;  // values[row][col]

    std::int64_t at(const Partition& lambda, const Partition& mu) const;
    int position_of(const Partition& p) const;
};

struct CharacterTableOptions {
    int degree_cap = 20;
    std::optional<std::filesystem::path> cache_dir; // persist/load when set
};

// chi^lambda(mu) by recursive border-strip removal, memoized process-wide.
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

// Size of the S_n conjugacy class with cycle type mu.
std::uint64_t class_size(const Partition& mu);

// Full table for S_n; memoized in memory and, when a cache directory is
// configured, persisted to one file per degree.
std::shared_ptr<const CharacterTable> character_table(int n,
                                                      const CharacterTableOptions& options = {});

// Cache file naming and round-trip, exposed for the CLI and tests.
std::filesystem::path character_table_cache_file(const std::filesystem::path& dir, int n);
void write_character_table(const CharacterTable& table, const std::filesystem::path& file);
std::optional<CharacterTable> read_character_table(int n, const std::filesystem::path& file);

} // namespace specht

#endif
