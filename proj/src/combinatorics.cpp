#include "specht/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "specht/errors.hpp"
#include "specht/rational.hpp"

namespace specht {

namespace {

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        out << v[i];
    }
    out << ']';
    return out.str();
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i - 1] < parts_[i]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        n_ += parts_[i];
    }
}

std::string Partition::to_string() const { return join_ints(parts_); }

StandardTableau::StandardTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (rows_.size() != static_cast<std::size_t>(shape_.length())) {
        throw std::invalid_argument("tableau row count does not match shape");
    }
    std::vector<char> seen(static_cast<std::size_t>(shape_.n()) + 1, 0);
    for (int r = 0; r < shape_.length(); ++r) {
        const auto& row = rows_[static_cast<std::size_t>(r)];
        if (static_cast<int>(row.size()) != shape_.part(r)) {
            throw std::invalid_argument("tableau row length does not match shape");
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            int v = row[c];
            if (v < 1 || v > shape_.n() || seen[static_cast<std::size_t>(v)]) {
                throw std::invalid_argument("tableau entries must be 1..n, each once");
            }
            seen[static_cast<std::size_t>(v)] = 1;
            if (c > 0 && row[c - 1] >= v) {
                throw std::invalid_argument("tableau rows must increase left to right");
            }
            if (r > 0 && rows_[static_cast<std::size_t>(r - 1)][c] >= v) {
                throw std::invalid_argument("tableau columns must increase with row index");
            }
        }
    }
}

std::pair<int, int> StandardTableau::position_of(int entry) const {
    for (int r = 0; r < shape_.length(); ++r) {
        const auto& row = rows_[static_cast<std::size_t>(r)];
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] == entry) return {r, static_cast<int>(c)};
        }
    }
    throw std::invalid_argument("entry not present in tableau");
}

std::string StandardTableau::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) out << ", ";
        out << join_ints(rows_[r]);
    }
    out << ']';
    return out.str();
}

int IndexTableau::entry_sum() const {
    int total = 0;
    for (const auto& row : rows) total += std::accumulate(row.begin(), row.end(), 0);
    return total;
}

std::string IndexTableau::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) out << ", ";
        out << join_ints(rows[r]);
    }
    out << ']';
    return out.str();
}

std::vector<Partition> partitions(int n) {
    if (n < 1) throw std::invalid_argument("partitions: n must be positive");
    std::vector<Partition> out;
    std::vector<int> current;
    // Largest-first recursion yields reverse-lexicographic order directly.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> parts;
    if (lambda.length() == 0) return Partition{};
    for (int j = 1; j <= lambda.part(0); ++j) {
        int count = 0;
        for (int i = 0; i < lambda.length(); ++i) {
            if (lambda.part(i) >= j) ++count;
        }
        parts.push_back(count);
    }
    return Partition(parts);
}

std::vector<StandardTableau> standard_tableaux(const Partition& lambda) {
    const int n = lambda.n();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.length()));
    std::vector<StandardTableau> out;
    // Place 1..n in turn at every cell keeping the partial filling a
    // left-justified partition shape; this enumerates exactly the standard
    // fillings.
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            out.emplace_back(lambda, rows);
            return;
        }
        for (int r = 0; r < lambda.length(); ++r) {
            auto& row = rows[static_cast<std::size_t>(r)];
            int len = static_cast<int>(row.size());
            if (len >= lambda.part(r)) continue;
            if (r > 0 && static_cast<int>(rows[static_cast<std::size_t>(r - 1)].size()) <= len) continue;
            row.push_back(next);
            self(self, next + 1);
            row.pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
        return column_word(a) < column_word(b);
    });
    return out;
}

std::uint64_t hook_length_count(const Partition& lambda) {
    const Partition conj = conjugate(lambda);
    Integer hooks = 1;
    for (int r = 0; r < lambda.length(); ++r) {
        for (int c = 0; c < lambda.part(r); ++c) {
            int arm = lambda.part(r) - c - 1;
            int leg = conj.part(c) - r - 1;
            hooks *= (1 + arm + leg);
        }
    }
    Integer f = factorial(static_cast<unsigned>(lambda.n())) / hooks;
    return to_uint64(f, "hook length count");
}

std::vector<int> column_word(const StandardTableau& t) {
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(t.size()));
    const auto& rows = t.rows();
    const int ncols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (int c = 0; c < ncols; ++c) {
        for (int r = static_cast<int>(rows.size()) - 1; r >= 0; --r) {
            const auto& row = rows[static_cast<std::size_t>(r)];
            if (c < static_cast<int>(row.size())) word.push_back(row[static_cast<std::size_t>(c)]);
        }
    }
    return word;
}

std::vector<std::pair<int, int>> index_word(const StandardTableau& s) {
    const std::vector<int> word = column_word(s);
    const int n = s.size();
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(word[static_cast<std::size_t>(i)])] = i;
    std::vector<int> index(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 1; k < n; ++k) {
        int bump = pos[static_cast<std::size_t>(k + 1)] < pos[static_cast<std::size_t>(k)] ? 1 : 0;
        index[static_cast<std::size_t>(k + 1)] = index[static_cast<std::size_t>(k)] + bump;
    }
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int entry = word[static_cast<std::size_t>(i)];
        out.emplace_back(entry, index[static_cast<std::size_t>(entry)]);
    }
    return out;
}

IndexTableau index_tableau(const StandardTableau& s) {
    std::vector<int> index(static_cast<std::size_t>(s.size()) + 1, 0);
    for (const auto& [entry, idx] : index_word(s)) index[static_cast<std::size_t>(entry)] = idx;
    IndexTableau out;
    out.shape = s.shape();
    out.rows.resize(s.rows().size());
    for (std::size_t r = 0; r < s.rows().size(); ++r) {
        const auto& row = s.rows()[r];
        out.rows[r].reserve(row.size());
        for (int entry : row) out.rows[r].push_back(index[static_cast<std::size_t>(entry)]);
    }
    return out;
}

int cocharge(const StandardTableau& s) { return index_tableau(s).entry_sum(); }

ExponentVector monomial(const StandardTableau& s, const StandardTableau& t) {
    if (s.shape() != t.shape()) {
        throw std::invalid_argument("monomial: tableaux must have the same shape");
    }
    const IndexTableau is = index_tableau(s);
    ExponentVector exps(static_cast<std::size_t>(s.size()), 0);
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        const auto& row = t.rows()[r];
        for (std::size_t c = 0; c < row.size(); ++c) {
            exps[static_cast<std::size_t>(row[c] - 1)] = is.rows[r][c];
        }
    }
    return exps;
}

} // namespace specht
