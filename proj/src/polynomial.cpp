#include "specht/polynomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace specht {

bool TermOrder::operator()(const ExponentVector& a, const ExponentVector& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

SparsePolynomial SparsePolynomial::constant(int nvars, Rational value) {
    SparsePolynomial p(nvars);
    p.add_term(ExponentVector(static_cast<std::size_t>(nvars), 0), value);
    return p;
}

SparsePolynomial SparsePolynomial::variable(int nvars, int k) {
    if (k < 1 || k > nvars) throw std::invalid_argument("variable index out of range");
    SparsePolynomial p(nvars);
    ExponentVector e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(k - 1)] = 1;
    p.add_term(e, Rational(1));
    return p;
}

SparsePolynomial SparsePolynomial::elementary_symmetric(int nvars, int k) {
    if (k < 0 || k > nvars) throw std::invalid_argument("elementary symmetric index out of range");
    SparsePolynomial p(nvars);
    // Iterate k-subsets of {0..nvars-1}.
    std::vector<int> subset(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i;
    while (true) {
        ExponentVector e(static_cast<std::size_t>(nvars), 0);
        for (int i : subset) e[static_cast<std::size_t>(i)] = 1;
        p.add_term(e, Rational(1));
        if (k == 0) break;
        int i = k - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == nvars - k + i) --i;
        if (i < 0) break;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return p;
}

Rational SparsePolynomial::coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePolynomial::add_term(const ExponentVector& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) {
        throw std::invalid_argument("exponent vector length must equal the variable count");
    }
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& rhs) {
    if (nvars_ != rhs.nvars_) throw std::invalid_argument("polynomial sum: variable count mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& rhs) {
    if (nvars_ != rhs.nvars_) throw std::invalid_argument("polynomial sum: variable count mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& rhs) const {
    SparsePolynomial out = *this;
    out += rhs;
    return out;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& rhs) const {
    SparsePolynomial out = *this;
    out -= rhs;
    return out;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& rhs) const {
    if (nvars_ != rhs.nvars_) throw std::invalid_argument("polynomial product: variable count mismatch");
    SparsePolynomial out(nvars_);
    ExponentVector e(static_cast<std::size_t>(nvars_));
    Rational c;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            c = ca * cb;
            out.add_term(e, c);
        }
    }
    return out;
}

SparsePolynomial& SparsePolynomial::scale(const Rational& factor) {
    if (sgn(factor) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= factor;
    return *this;
}

int SparsePolynomial::total_degree() const {
    if (terms_.empty()) return -1;
    // Terms are degree-descending, so the first term carries the degree.
    const auto& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

bool SparsePolynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree();
    for (const auto& [e, c] : terms_) {
        if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
    }
    return true;
}

std::string SparsePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational abs_c = abs(c);
        if (first) {
            if (sgn(c) < 0) out << '-';
            first = false;
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        bool has_vars = false;
        std::ostringstream vars;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (has_vars) vars << '*';
            vars << 'x' << (i + 1);
            if (e[i] > 1) vars << '^' << e[i];
            has_vars = true;
        }
        if (!has_vars) {
            out << abs_c.get_str();
        } else if (abs_c == 1) {
            out << vars.str();
        } else {
            out << abs_c.get_str() << '*' << vars.str();
        }
    }
    return out.str();
}

SparsePolynomial permute_variables(const SparsePolynomial& p, const Permutation& sigma) {
    if (sigma.degree() != p.nvars()) {
        throw std::invalid_argument("permute_variables: degree does not match the variable count");
    }
    SparsePolynomial out(p.nvars());
    ExponentVector moved(static_cast<std::size_t>(p.nvars()));
    for (const auto& [e, c] : p.terms()) {
        for (int k = 1; k <= p.nvars(); ++k) {
            moved[static_cast<std::size_t>(sigma(k) - 1)] = e[static_cast<std::size_t>(k - 1)];
        }
        out.add_term(moved, c);
    }
    return out;
}

} // namespace specht
