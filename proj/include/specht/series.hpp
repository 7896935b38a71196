#ifndef SPECHT_SERIES_HPP
#define SPECHT_SERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "specht/rational.hpp"

namespace specht {

// Univariate power series in z with exact rational coefficients: either a
// polynomial (exact, coeffs.size() = degree + 1) or a series truncated at a
// recorded order. Arithmetic never extends past the recorded truncation.
class UnivariateSeries {
public:
    UnivariateSeries() = default;

    static UnivariateSeries polynomial(std::vector<Rational> coeffs);
    static UnivariateSeries truncated(std::vector<Rational> coeffs, int order);
    static UnivariateSeries zero_polynomial();
    static UnivariateSeries monomial(int degree, Rational coeff = Rational(1));

    bool is_truncated() const { return truncated_; }
    // Polynomial: the degree. Truncated: the truncation order.
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(int degree) const;

    UnivariateSeries& operator+=(const UnivariateSeries& rhs);
    UnivariateSeries& scale(const Rational& factor);
    // Multiply by 1 / (1 - z^k) within the truncation order.
    UnivariateSeries& divide_one_minus_pow(int k);
    UnivariateSeries truncate_to(int order) const;

    Rational value_at_one() const; // polynomials only

    bool operator==(const UnivariateSeries&) const = default;

    // "1 + 2*z^2 + 2*z^4 + z^6"
    std::string to_string(const std::string& variable = "z") const;

private:
    bool truncated_ = false;
    std::vector<Rational> coeffs_{Rational(0)};
};

} // namespace specht

#endif
