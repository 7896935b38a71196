#ifndef SPECHT_LINALG_HPP
#define SPECHT_LINALG_HPP

#include <span>
#include <vector>

#include "specht/rational.hpp"

namespace specht {

using RationalVector = std::vector<Rational>;

// Dense exact rational matrix; every entry stays in lowest terms.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    RationalVector row(int i) const;

    bool operator==(const RationalMatrix&) const = default;

    RationalMatrix transposed() const;
    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix operator-(const RationalMatrix& rhs) const;
    RationalVector apply(const RationalVector& v) const; // M * v

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult {
    RationalMatrix matrix;
    std::vector<int> pivot_columns;
    int rank = 0;
};

// Canonical reduced row echelon form (pivots 1, zeros above and below, pivot
// columns strictly increasing, zero rows dropped to the bottom).
RrefResult rref(RationalMatrix m);

// Linear subspace of Q^ambient, held as an RREF basis (rows).
class Subspace {
public:
    Subspace() = default;
    // Rows of `spanning` may be any spanning set; the stored basis is their RREF.
    Subspace(int ambient_dim, RationalMatrix spanning);

    static Subspace full(int ambient_dim);
    static Subspace zero(int ambient_dim);

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return basis_.rows(); }
    const RationalMatrix& basis() const { return basis_; }

    bool contains(const RationalVector& v) const;
    bool operator==(const Subspace&) const = default;

private:
    int ambient_dim_ = 0;
    RationalMatrix basis_; // RREF, one basis vector per row
};

// Basis of {v : M v = 0}.
Subspace nullspace(const RationalMatrix& m);

// A intersect B, canonical independent of the computation route.
Subspace intersect(const Subspace& a, const Subspace& b);

// Common fixed space of square matrices: intersection of nullspace(M_i - I).
// Empty input yields the full space of the given ambient dimension.
Subspace fixed_space(std::span<const RationalMatrix> mats, int ambient_dim);

} // namespace specht

#endif
