#pragma once

#include <cstdint>
#include <vector>

#include "psl213/cyclotomic.hpp"

namespace psl213 {

// Smallest prime above 2^60 that is 1 mod 1560 = lcm(120, 312); the residue
// condition admits elements of multiplicative order 5, 8, 13, 104 and 120
// simultaneously. Found by direct search, revalidated in tests.
inline constexpr std::uint64_t kDefaultTestPrime = 1152921504606864721ULL;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);
bool is_prime_u64(std::uint64_t n);  // deterministic Miller-Rabin for 64-bit
// smallest prime > floor, congruent to 1 mod modulus
std::uint64_t next_prime_1mod(std::uint64_t floor, std::uint64_t modulus);

// Prime-field element with a process-wide modulus (set once per run/config;
// tests switch it with ScopedFpModulus). Keeping the modulus out of each
// element lets Fp64 serve as a plain coefficient type for MultiPoly.
class Fp64 {
public:
    Fp64() : v_(0) {}
    explicit Fp64(std::uint64_t v) : v_(v % modulus()) {}
    static Fp64 from_int(long long x) {
        long long m = static_cast<long long>(modulus());
        long long r = x % m;
        if (r < 0) r += m;
        return Fp64(static_cast<std::uint64_t>(r));
    }
    static Fp64 from_rational(const Rational& r);

    std::uint64_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Fp64 operator+(Fp64 o) const {
        std::uint64_t s = v_ + o.v_;
        if (s >= modulus() || s < v_) s -= modulus();
        return raw(s);
    }
    Fp64 operator-(Fp64 o) const { return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + modulus() - o.v_); }
    Fp64 operator-() const { return raw(v_ == 0 ? 0 : modulus() - v_); }
    Fp64 operator*(Fp64 o) const { return raw(mulmod_u64(v_, o.v_, modulus())); }
    Fp64& operator+=(Fp64 o) { *this = *this + o; return *this; }
    Fp64& operator-=(Fp64 o) { *this = *this - o; return *this; }
    Fp64& operator*=(Fp64 o) { *this = *this * o; return *this; }
    bool operator==(Fp64 o) const { return v_ == o.v_; }
    bool operator!=(Fp64 o) const { return v_ != o.v_; }

    Fp64 pow(std::uint64_t e) const { return raw(powmod_u64(v_, e, modulus())); }
    Fp64 inverse() const;

    static std::uint64_t modulus() { return modulus_; }
    static void set_modulus(std::uint64_t p);

private:
    static Fp64 raw(std::uint64_t v) { Fp64 x; x.v_ = v; return x; }
    static std::uint64_t modulus_;
    std::uint64_t v_;
};

struct ScopedFpModulus {
    explicit ScopedFpModulus(std::uint64_t p) : saved(Fp64::modulus()) { Fp64::set_modulus(p); }
    ~ScopedFpModulus() { Fp64::set_modulus(saved); }
    std::uint64_t saved;
};

// element of exact multiplicative order m in F_p
Fp64 element_of_order(std::uint64_t m);

// Ring homomorphism Q(zeta_n) -> F_p determined by zeta_n -> omega with
// omega of exact order n (denominators must be invertible mod p; everything
// used here has denominator a power of 13 or small integers).
class CycloToFp {
public:
    explicit CycloToFp(long order);
    CycloToFp(long order, Fp64 zeta_image);  // caller-chosen image of exact order
    long order() const { return order_; }
    Fp64 zeta_image() const { return pow_[1 % order_]; }
    Fp64 map(const Cyclotomic& a) const;

private:
    long order_;
    std::vector<Fp64> pow_;
};

// Evaluation point for probabilistic identity testing.
struct PrimeFieldPoint {
    std::uint64_t modulus;
    std::vector<Fp64> values;   // one residue per variable
    Fp64 zeta_image;            // order-13 image backing the coefficient map
};


// Deterministic point stream from a seeded splitmix64 generator with
// rejection sampling; identical across platforms and standard libraries.
class PointSource {
public:
    explicit PointSource(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    Fp64 next_fp();  // uniform in [0, p) by rejection
    std::vector<Fp64> next_point(int nvars);

private:
    std::uint64_t state_;
};

// draws a point from the stream under the current modulus, which must be
// 1 mod 312 so that images of every needed root of unity exist
PrimeFieldPoint make_prime_field_point(PointSource& src, int nvars);

}  // namespace psl213
