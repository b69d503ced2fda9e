#include "psl213/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace psl213 {

namespace {

// integer polynomial helpers (dense, index = exponent)
using IPoly = std::vector<Integer>;

long ideg(const IPoly& p) {
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

// exact division q = a / b for monic-ish integral divisors (remainder must vanish)
IPoly idiv_exact(IPoly a, const IPoly& b) {
    long db = ideg(b);
    long da = ideg(a);
    if (db < 0) throw std::invalid_argument("division by zero polynomial");
    IPoly q(std::max<long>(da - db + 1, 1), Integer(0));
    while (da >= db) {
        Integer c = a[da] / b[db];
        if (c * b[db] != a[da]) throw std::logic_error("non-exact polynomial division");
        q[da - db] = c;
        for (long i = 0; i <= db; ++i) a[da - db + i] -= c * b[i];
        da = ideg(a);
    }
    if (da >= 0) throw std::logic_error("nonzero remainder in cyclotomic factor division");
    return q;
}

IPoly cyclotomic_poly(long n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    IPoly num(n + 1, Integer(0));
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d == 0) num = idiv_exact(std::move(num), cyclotomic_poly(d));
    }
    return num;
}

}  // namespace

CycloField::CycloField(long order) : n_(order) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    phi_ = cyclotomic_poly(order);
    deg_ = ideg(phi_);
    phi_.resize(deg_ + 1);
    // rows for x^k mod Phi_n, deg <= k < n
    rows_.reserve(std::max<long>(n_ - deg_, 0));
    std::vector<Integer> cur(deg_, Integer(0));
    // x^deg = -(phi_[0] + ... + phi_[deg-1] x^(deg-1))  (Phi monic)
    for (long i = 0; i < deg_; ++i) cur[i] = -phi_[i];
    for (long k = deg_; k < n_; ++k) {
        rows_.push_back(cur);
        // multiply by x and reduce the overflowing top coefficient
        Integer top = cur[deg_ - 1];
        for (long i = deg_ - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (long i = 0; i < deg_; ++i) cur[i] += top * rows_[0][i];
    }
}

const CycloField& CycloField::get(long order) {
    static std::mutex mu;
    static std::map<long, std::unique_ptr<CycloField>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(order);
    if (it == cache.end())
        it = cache.emplace(order, std::make_unique<CycloField>(order)).first;
    return *it->second;
}

Cyclotomic Cyclotomic::zero(long order) { return Cyclotomic(order); }

Cyclotomic Cyclotomic::constant(long order, const Rational& c) {
    Cyclotomic out(order);
    out.coeffs_[0] = c;
    return out;
}

Cyclotomic Cyclotomic::zeta(long order, long exponent) {
    std::pair<long, Rational> t{exponent, rat(1)};
    return from_terms(order, std::span<const std::pair<long, Rational>>(&t, 1));
}

Cyclotomic Cyclotomic::reduce_raw(long order, std::vector<Rational> raw) {
    const CycloField& F = CycloField::get(order);
    Cyclotomic out(order);
    for (long k = 0; k < F.degree(); ++k) out.coeffs_[k] = std::move(raw[k]);
    for (long k = F.degree(); k < order; ++k) {
        if (psl213::is_zero(raw[k])) continue;
        const auto& row = F.reduction_row(k);
        for (long i = 0; i < F.degree(); ++i)
            if (row[i] != 0) out.coeffs_[i] += raw[k] * row[i];
    }
    return out;
}

Cyclotomic Cyclotomic::from_terms(long order, std::span<const std::pair<long, Rational>> terms) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    std::vector<Rational> raw(order, rat(0));
    for (const auto& [e, c] : terms) {
        long r = e % order;
        if (r < 0) r += order;
        raw[r] += c;
    }
    return reduce_raw(order, std::move(raw));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (!psl213::is_zero(c)) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!psl213::is_zero(coeffs_[i])) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("not a rational value");
    return coeffs_.empty() ? rat(0) : coeffs_[0];
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    if (order_ != o.order_) throw std::invalid_argument("cyclotomic order mismatch");
    Cyclotomic out(*this);
    for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += o.coeffs_[i];
    return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    if (order_ != o.order_) throw std::invalid_argument("cyclotomic order mismatch");
    Cyclotomic out(*this);
    for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= o.coeffs_[i];
    return out;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (order_ != o.order_) throw std::invalid_argument("cyclotomic order mismatch");
    const long deg = static_cast<long>(coeffs_.size());
    // convolution, exponents folded mod n (zeta^n = 1), then row reduction
    std::vector<Rational> raw(order_, rat(0));
    for (long i = 0; i < deg; ++i) {
        if (psl213::is_zero(coeffs_[i])) continue;
        for (long j = 0; j < deg; ++j) {
            if (psl213::is_zero(o.coeffs_[j])) continue;
            raw[(i + j) % order_] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return reduce_raw(order_, std::move(raw));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    return order_ == o.order_ && coeffs_ == o.coeffs_;
}

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
    Cyclotomic out(*this);
    for (auto& c : out.coeffs_) c *= r;
    return out;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    // extended Euclid in Q[x] against Phi_n
    const CycloField& F = CycloField::get(order_);
    using QPoly = std::vector<Rational>;
    auto qdeg = [](const QPoly& p) {
        for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
            if (!psl213::is_zero(p[i])) return i;
        return -1L;
    };
    QPoly r0(F.degree() + 1);
    for (long i = 0; i <= F.degree(); ++i) r0[i] = Rational(F.phi_coeffs()[i]);
    QPoly r1(coeffs_.begin(), coeffs_.end());
    QPoly s0{rat(0)}, s1{rat(1)};
    while (qdeg(r1) > 0) {
        long d0 = qdeg(r0), d1 = qdeg(r1);
        if (d0 < d1) { std::swap(r0, r1); std::swap(s0, s1); continue; }
        Rational lc = r0[d0] / r1[d1];
        long sh = d0 - d1;
        if (static_cast<long>(r0.size()) < d0 + 1) r0.resize(d0 + 1, rat(0));
        for (long i = 0; i <= d1; ++i) r0[i + sh] -= lc * r1[i];
        long need = sh + qdeg(s1) + 1;
        if (static_cast<long>(s0.size()) < need) s0.resize(need, rat(0));
        for (long i = 0; i <= qdeg(s1); ++i) s0[i + sh] -= lc * s1[i];
        if (qdeg(r0) < qdeg(r1)) { std::swap(r0, r1); std::swap(s0, s1); }
    }
    if (qdeg(r1) != 0) throw std::logic_error("gcd with Phi_n not constant");
    Rational c = r1[0];
    Cyclotomic out(order_);
    for (long i = 0; i < static_cast<long>(s1.size()) && i < F.degree(); ++i)
        out.coeffs_[i] = s1[i] / c;
    return out;
}

Cyclotomic Cyclotomic::galois(long k) const {
    long kk = k % order_;
    if (kk < 0) kk += order_;
    if (std::gcd(kk, order_) != 1)
        throw std::invalid_argument("galois twist exponent not coprime to order");
    std::vector<Rational> raw(order_, rat(0));
    for (long i = 0; i < static_cast<long>(coeffs_.size()); ++i)
        if (!psl213::is_zero(coeffs_[i])) raw[(i * kk) % order_] += coeffs_[i];
    return reduce_raw(order_, std::move(raw));
}

std::string Cyclotomic::key() const {
    std::string out = std::to_string(order_);
    for (const auto& c : coeffs_) {
        out.push_back('|');
        out += rat_str(c);
    }
    return out;
}

std::string Cyclotomic::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (psl213::is_zero(coeffs_[i])) continue;
        Rational c = coeffs_[i];
        if (!first) {
            os << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) c = -c;
        }
        first = false;
        if (i == 0) {
            os << rat_str(c);
        } else {
            if (c != 1 || (os.tellp() == 0 && sgn(coeffs_[i]) < 0)) os << rat_str(c) << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Cyclotomic gauss_sqrt(long p) {
    if (p % 4 != 1) throw std::invalid_argument("gauss_sqrt expects p = 1 mod 4");
    std::vector<bool> qr(p, false);
    for (long k = 1; k < p; ++k) qr[(k * k) % p] = true;
    std::vector<std::pair<long, Rational>> terms;
    for (long k = 1; k < p; ++k) terms.emplace_back(k, qr[k] ? rat(1) : rat(-1));
    return Cyclotomic::from_terms(p, terms);
}

PeriodSet periods() {
    auto coset = [](std::initializer_list<long> es) {
        std::vector<std::pair<long, Rational>> t;
        for (long e : es) t.emplace_back(e, rat(1));
        return Cyclotomic::from_terms(13, t);
    };
    return PeriodSet{coset({1, 3, 9}), coset({2, 6, 5}), coset({4, 12, 10}), coset({8, 11, 7})};
}

}  // namespace psl213
