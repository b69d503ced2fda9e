#include "psl213/fp.hpp"

namespace psl213 {

std::uint64_t Fp64::modulus_ = kDefaultTestPrime;

void Fp64::set_modulus(std::uint64_t p) {
    if (p < 2) throw std::invalid_argument("modulus must be >= 2");
    modulus_ = p;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
        if (n % p == 0) return n == p;
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    // deterministic witness set for all 64-bit integers
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t next_prime_1mod(std::uint64_t floor, std::uint64_t modulus) {
    std::uint64_t c = floor + 1;
    std::uint64_t rem = c % modulus;
    if (rem != 1) c += (rem <= 1 ? 1 - rem : modulus + 1 - rem);
    while (!is_prime_u64(c)) c += modulus;
    return c;
}

Fp64 Fp64::from_rational(const Rational& r) {
    Integer p(static_cast<unsigned long>(modulus()));
    Integer num = r.get_num() % p;
    if (num < 0) num += p;
    Integer den = r.get_den() % p;
    Fp64 n(num.get_ui());
    Fp64 d(den.get_ui());
    if (d.is_zero()) throw std::domain_error("denominator not invertible mod p");
    return n * d.inverse();
}

Fp64 Fp64::inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero mod p");
    return pow(modulus() - 2);
}

Fp64 element_of_order(std::uint64_t m) {
    std::uint64_t p = Fp64::modulus();
    if ((p - 1) % m != 0) throw std::invalid_argument("order does not divide p-1");
    std::vector<std::uint64_t> prime_factors;
    std::uint64_t mm = m;
    for (std::uint64_t d = 2; d * d <= mm; ++d)
        while (mm % d == 0) {
            if (prime_factors.empty() || prime_factors.back() != d) prime_factors.push_back(d);
            mm /= d;
        }
    if (mm > 1) prime_factors.push_back(mm);
    for (std::uint64_t g = 2;; ++g) {
        Fp64 h = Fp64(g).pow((p - 1) / m);
        if (h.value() == 1) continue;
        bool exact = true;
        for (std::uint64_t q : prime_factors)
            if (h.pow(m / q).value() == 1) { exact = false; break; }
        if (exact) return h;
    }
}

CycloToFp::CycloToFp(long order) : CycloToFp(order, element_of_order(static_cast<std::uint64_t>(order))) {}

CycloToFp::CycloToFp(long order, Fp64 zeta_image) : order_(order) {
    Fp64 check = zeta_image.pow(static_cast<std::uint64_t>(order));
    if (check.value() != 1)
        throw std::invalid_argument("zeta image is not a root of unity of the requested order");
    pow_.resize(order);
    pow_[0] = Fp64(1);
    for (long i = 1; i < order; ++i) pow_[i] = pow_[i - 1] * zeta_image;
    if (order > 1 && pow_[1].value() == 1)
        throw std::invalid_argument("zeta image is trivial");
}

Fp64 CycloToFp::map(const Cyclotomic& a) const {
    if (a.order() != order_) throw std::invalid_argument("cyclotomic order mismatch in F_p image");
    Fp64 acc;
    for (long i = 0; i < static_cast<long>(a.coeffs().size()); ++i) {
        const Rational& c = a.coeffs()[i];
        if (is_zero(c)) continue;
        acc += Fp64::from_rational(c) * pow_[i];
    }
    return acc;
}

PrimeFieldPoint make_prime_field_point(PointSource& src, int nvars) {
    if (Fp64::modulus() % 312 != 1)
        throw std::domain_error("modulus must be 1 mod 312 for the coefficient images");
    PrimeFieldPoint pt;
    pt.modulus = Fp64::modulus();
    pt.values = src.next_point(nvars);
    pt.zeta_image = element_of_order(13);
    return pt;
}

std::uint64_t PointSource::next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Fp64 PointSource::next_fp() {
    const std::uint64_t p = Fp64::modulus();
    const std::uint64_t limit = p * (UINT64_MAX / p);
    for (;;) {
        std::uint64_t x = next_u64();
        if (x < limit) return Fp64(x % p);
    }
}

std::vector<Fp64> PointSource::next_point(int nvars) {
    std::vector<Fp64> v;
    v.reserve(nvars);
    for (int i = 0; i < nvars; ++i) v.push_back(next_fp());
    return v;
}

}  // namespace psl213
