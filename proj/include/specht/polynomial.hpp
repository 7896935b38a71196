#ifndef SPECHT_POLYNOMIAL_HPP
#define SPECHT_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "specht/combinatorics.hpp"
#include "specht/permgroup.hpp"
#include "specht/rational.hpp"

namespace specht {

// Canonical term order: total degree descending, then exponent vectors
// compared from the last variable down (x_n weighs heaviest), descending.
// Matches the printed form "2*x3 - 2*x1".
struct TermOrder {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

// Multivariate polynomial over exact rationals, keyed by exponent vectors.
// Zero coefficients are never stored; iteration follows the canonical order.
class SparsePolynomial {
public:
    SparsePolynomial() = default;
    explicit SparsePolynomial(int nvars) : nvars_(nvars) {}

    static SparsePolynomial constant(int nvars, Rational value);
    static SparsePolynomial variable(int nvars, int k); // x_k, 1-based
    // Elementary symmetric polynomial e_k in nvars variables.
    static SparsePolynomial elementary_symmetric(int nvars, int k);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<ExponentVector, Rational, TermOrder>& terms() const { return terms_; }

    Rational coefficient(const ExponentVector& e) const;
    void add_term(const ExponentVector& e, const Rational& c);

    SparsePolynomial& operator+=(const SparsePolynomial& rhs);
    SparsePolynomial& operator-=(const SparsePolynomial& rhs);
    SparsePolynomial operator+(const SparsePolynomial& rhs) const;
    SparsePolynomial operator-(const SparsePolynomial& rhs) const;
    SparsePolynomial operator*(const SparsePolynomial& rhs) const;
    SparsePolynomial& scale(const Rational& factor);

    bool operator==(const SparsePolynomial&) const = default;

    int total_degree() const; // -1 for the zero polynomial
    bool is_homogeneous() const;

    // "2*x3 - 2*x1", "0" for zero.
    std::string to_string() const;

private:
    int nvars_ = 0;
    std::map<ExponentVector, Rational, TermOrder> terms_;
};

// sigma . p with x_k -> x_{sigma(k)} in every term; a left action under the
// composition convention (a o b)(k) = a(b(k)).
SparsePolynomial permute_variables(const SparsePolynomial& p, const Permutation& sigma);

} // namespace specht

#endif
