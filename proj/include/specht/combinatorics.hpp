#ifndef SPECHT_COMBINATORICS_HPP
#define SPECHT_COMBINATORICS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace specht {

// Weakly decreasing positive parts summing to n. Indexes both the irreducible
// representations and the conjugacy classes of the symmetric group.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts); // validates monotonicity/positivity

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }

    auto operator<=>(const Partition&) const = default;

    // "[4, 3, 2, 1]"
    std::string to_string() const;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// Standard filling of a partition shape. Row 0 is the longest row; entries
// increase left to right in each row and with increasing row index in each
// column (rows[j][c] < rows[j+1][c]).
class StandardTableau {
public:
    StandardTableau() = default;
    StandardTableau(Partition shape, std::vector<std::vector<int>> rows); // validates

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int size() const { return shape_.n(); }
    int entry(int row, int col) const { return rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]; }

    // (row, col) of a given entry.
    std::pair<int, int> position_of(int entry) const;

    auto operator<=>(const StandardTableau&) const = default;

    // "[[1, 2, 4], [3, 5]]"
    std::string to_string() const;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

// Nonnegative filling of a tableau shape; houses the index tableau i(S).
struct IndexTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    int entry_sum() const;
    std::string to_string() const;
};

// exponents[k-1] = exponent of variable x_k.
using ExponentVector = std::vector<int>;

// All partitions of n in reverse-lexicographic order: [n] first, [1^n] last.
// This is the canonical enumeration shared by every module.
std::vector<Partition> partitions(int n);

// Transposed Young diagram.
Partition conjugate(const Partition& lambda);

// All standard tableaux of shape lambda, ordered lexicographically by their
// column reading word. Defines the basis indexing used by the representation
// matrices; must never be reordered.
std::vector<StandardTableau> standard_tableaux(const Partition& lambda);

// f^lambda = n! / prod(hooks). Equals standard_tableaux(lambda).size().
std::uint64_t hook_length_count(const Partition& lambda);

// Column reading word: columns left to right, each read from its top cell
// (highest row index) down to row 0.
std::vector<int> column_word(const StandardTableau& t);

// The word w(S) as (entry, index) pairs in word order. Entry 1 has index 0;
// the index increments exactly when the next entry sits strictly left of the
// previous one in the word.
std::vector<std::pair<int, int>> index_word(const StandardTableau& s);

// i(S): the cell holding entry k in S receives the index of k in w(S).
IndexTableau index_tableau(const StandardTableau& s);

// Sum of the entries of index_tableau(s); the degree carried by s.
int cocharge(const StandardTableau& s);

// Exponent vector of x_T^{i(S)}: the cell of T holding value v contributes
// exponent i(S) at that cell to variable x_v. Shapes must match.
ExponentVector monomial(const StandardTableau& s, const StandardTableau& t);

} // namespace specht

#endif
