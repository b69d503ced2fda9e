#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "psl213/rational.hpp"

namespace psl213 {

// Reduction data for Q(zeta_n), computed once per order and cached.
//
// Elements are stored in the power basis 1, zeta, ..., zeta^(deg-1) with
// deg = phi(n), reduced modulo the n-th cyclotomic polynomial. Canonical
// coordinates make equality a coefficient comparison.
class CycloField {
public:
    explicit CycloField(long order);

    long order() const { return n_; }
    long degree() const { return deg_; }

    // x^k mod Phi_n for deg <= k < n (integer rows; Phi_n is monic integral).
    const std::vector<Integer>& reduction_row(long k) const { return rows_[k - deg_]; }

    const std::vector<Integer>& phi_coeffs() const { return phi_; }

    static const CycloField& get(long order);

private:
    long n_;
    long deg_;
    std::vector<Integer> phi_;               // Phi_n, degree deg_, monic
    std::vector<std::vector<Integer>> rows_; // rows_[k-deg_]: x^k mod Phi_n, length deg_
};

class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeffs_() {}  // zero of Q(zeta_1) = Q

    static Cyclotomic zero(long order);
    static Cyclotomic one(long order) { return constant(order, rat(1)); }
    static Cyclotomic constant(long order, const Rational& c);
    static Cyclotomic zeta(long order, long exponent = 1);
    // Canonical reduction of sum c_i * zeta^(e_i); exponents arbitrary integers.
    static Cyclotomic from_terms(long order, std::span<const std::pair<long, Rational>> terms);

    long order() const { return order_; }
    // Canonical power-basis coordinates, length phi(order).
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { *this = *this + o; return *this; }
    Cyclotomic& operator-=(const Cyclotomic& o) { *this = *this - o; return *this; }
    Cyclotomic& operator*=(const Cyclotomic& o) { *this = *this * o; return *this; }
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    Cyclotomic scaled(const Rational& r) const;
    Cyclotomic inverse() const;  // throws on zero

    // Ring automorphism zeta -> zeta^k, gcd(k, order) = 1.
    Cyclotomic galois(long k) const;

    // Compact canonical serialization; equal values serialize identically.
    std::string key() const;
    std::string to_string() const;  // human-readable "a + b*z^k + ..."

private:
    explicit Cyclotomic(long order) : order_(order), coeffs_(CycloField::get(order).degree(), rat(0)) {}
    static Cyclotomic reduce_raw(long order, std::vector<Rational> raw);  // raw indexed by exponent mod n

    long order_;
    std::vector<Rational> coeffs_;
};

inline Cyclotomic operator*(const Rational& r, const Cyclotomic& a) { return a.scaled(r); }

// Gauss sum sum_k (k|p) zeta_p^k; squares to p for p = 1 mod 4 and embeds
// to the positive square root.
Cyclotomic gauss_sqrt(long p);
inline Cyclotomic sqrt13() { return gauss_sqrt(13); }
inline Cyclotomic sqrt5() { return gauss_sqrt(5); }

// The four cubic-residue periods of Q(zeta_13): theta1 = z+z^3+z^9 and its
// multiplicative translates by 2, 4, 8.
struct PeriodSet {
    Cyclotomic theta1, theta2, theta3, theta4;
};
PeriodSet periods();

}  // namespace psl213
