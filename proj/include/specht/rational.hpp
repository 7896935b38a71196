#ifndef SPECHT_RATIONAL_HPP
#define SPECHT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "specht/errors.hpp"

namespace specht {

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator. gmp only guarantees that for canonicalized values, so every
// construction from a numerator/denominator pair must go through
// make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// "p" or "p/q" in lowest terms, matching mpq_get_str.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) {
        throw parse_error("invalid rational literal '" + text + "'", 0);
    }
    r.canonicalize();
    return r;
}

// Bit size of the larger of |numerator| and denominator; used for pivot
// selection in exact elimination.
inline std::size_t bit_size(const Rational& r) {
    std::size_t n = mpz_sizeinbase(r.get_num().get_mpz_t(), 2);
    std::size_t d = mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
    return n > d ? n : d;
}

inline Integer factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline std::uint64_t to_uint64(const Integer& v, const char* what) {
    if (v < 0 || !v.fits_ulong_p()) {
        // 32-bit long would be a porting problem; this codebase assumes LP64.
        if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 63) {
            throw consistency_error(std::string(what) + " does not fit in 64 bits: " + v.get_str());
        }
    }
    return static_cast<std::uint64_t>(mpz_get_ui(v.get_mpz_t()));
}

} // namespace specht

#endif
