#include "specht/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace specht {

UnivariateSeries UnivariateSeries::polynomial(std::vector<Rational> coeffs) {
    while (coeffs.size() > 1 && sgn(coeffs.back()) == 0) coeffs.pop_back();
    if (coeffs.empty()) coeffs.push_back(Rational(0));
    UnivariateSeries s;
    s.truncated_ = false;
    s.coeffs_ = std::move(coeffs);
    return s;
}

UnivariateSeries UnivariateSeries::truncated(std::vector<Rational> coeffs, int order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    coeffs.resize(static_cast<std::size_t>(order) + 1, Rational(0));
    UnivariateSeries s;
    s.truncated_ = true;
    s.coeffs_ = std::move(coeffs);
    return s;
}

UnivariateSeries UnivariateSeries::zero_polynomial() { return polynomial({Rational(0)}); }

UnivariateSeries UnivariateSeries::monomial(int degree, Rational coeff) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1, Rational(0));
    coeffs.back() = std::move(coeff);
    return polynomial(std::move(coeffs));
}

Rational UnivariateSeries::coefficient(int degree) const {
    if (degree < 0) return Rational(0);
    if (degree >= static_cast<int>(coeffs_.size())) {
        if (truncated_) {
            throw std::invalid_argument("coefficient beyond the truncation order");
        }
        return Rational(0);
    }
    return coeffs_[static_cast<std::size_t>(degree)];
}

UnivariateSeries& UnivariateSeries::operator+=(const UnivariateSeries& rhs) {
    if (truncated_ || rhs.truncated_) {
        // Sum is only known through the smaller truncation order.
        int order = std::min(truncated_ ? this->order() : rhs.order(),
                             rhs.truncated_ ? rhs.order() : this->order());
        std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1, Rational(0));
        for (int d = 0; d <= order; ++d) {
            Rational a = d < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(d)]
                                                              : Rational(0);
            Rational b = d < static_cast<int>(rhs.coeffs_.size())
                             ? rhs.coeffs_[static_cast<std::size_t>(d)]
                             : Rational(0);
            coeffs[static_cast<std::size_t>(d)] = a + b;
        }
        truncated_ = true;
        coeffs_ = std::move(coeffs);
        return *this;
    }
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t d = 0; d < rhs.coeffs_.size(); ++d) coeffs_[d] += rhs.coeffs_[d];
    while (coeffs_.size() > 1 && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
    return *this;
}

UnivariateSeries& UnivariateSeries::scale(const Rational& factor) {
    for (auto& c : coeffs_) c *= factor;
    if (!truncated_) {
        while (coeffs_.size() > 1 && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
    }
    return *this;
}

UnivariateSeries& UnivariateSeries::divide_one_minus_pow(int k) {
    if (k < 1) throw std::invalid_argument("divide_one_minus_pow: k must be positive");
    if (!truncated_) {
        throw std::invalid_argument("series division requires a truncated series");
    }
    for (std::size_t d = static_cast<std::size_t>(k); d < coeffs_.size(); ++d) {
        coeffs_[d] += coeffs_[d - static_cast<std::size_t>(k)];
    }
    return *this;
}

UnivariateSeries UnivariateSeries::truncate_to(int order) const {
    if (truncated_ && order > this->order()) {
        throw std::invalid_argument("cannot extend a truncated series");
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1, Rational(0));
    for (int d = 0; d <= order && d < static_cast<int>(coeffs_.size()); ++d) {
        coeffs[static_cast<std::size_t>(d)] = coeffs_[static_cast<std::size_t>(d)];
    }
    return truncated(std::move(coeffs), order);
}

Rational UnivariateSeries::value_at_one() const {
    if (truncated_) throw std::invalid_argument("value_at_one is defined for polynomials only");
    Rational total(0);
    for (const auto& c : coeffs_) total += c;
    return total;
}

std::string UnivariateSeries::to_string(const std::string& variable) const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        const Rational& c = coeffs_[d];
        if (sgn(c) == 0) continue;
        Rational abs_c = abs(c);
        if (first) {
            if (sgn(c) < 0) out << '-';
            first = false;
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        const bool unit = abs_c == 1;
        if (d == 0) {
            out << abs_c.get_str();
        } else {
            if (!unit) out << abs_c.get_str() << '*';
            out << variable;
            if (d > 1) out << '^' << d;
        }
    }
    if (first) out << '0';
    if (truncated_) out << " + O(" << variable << '^' << coeffs_.size() << ')';
    return out.str();
}

} // namespace specht
