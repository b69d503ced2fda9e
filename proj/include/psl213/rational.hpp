#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace psl213 {

// Exact arbitrary-precision arithmetic. mpq_class keeps values canonical
// (lowest terms, positive denominator), which is what every equality test
// in this library relies on.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline Integer ipow(Integer base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Rational rpow(const Rational& base, long e) {
    if (e == 0) return rat(1);
    Rational out;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), a);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), a);
    if (e < 0) {
        if (is_zero(base)) throw std::domain_error("0^negative");
        out = Rational(out.get_den(), out.get_num());
        out.canonicalize();
    }
    return out;
}

// "n" or "n/d", canonical.
inline std::string rat_str(const Rational& r) {
    return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
}

inline Rational rat_parse(const std::string& s) {
    Rational r(s);
    r.canonicalize();
    return r;
}

}  // namespace psl213
