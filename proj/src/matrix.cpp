#include "psl213/matrix.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace psl213 {

CycloMatrix CycloMatrix::identity(int size, long order) {
    CycloMatrix m(size, order);
    for (int i = 0; i < size; ++i) m.at(i, i) = Cyclotomic::one(order);
    return m;
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& o) const {
    if (size_ != o.size_ || order_ != o.order_)
        throw std::invalid_argument("matrix dimension/order mismatch");
    CycloMatrix r(size_, order_);
    for (int i = 0; i < size_; ++i)
        for (int k = 0; k < size_; ++k) {
            const Cyclotomic& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < size_; ++j) {
                const Cyclotomic& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) += a * b;
            }
        }
    return r;
}

CycloMatrix CycloMatrix::operator-() const {
    CycloMatrix r(*this);
    for (auto& x : r.a_) x = -x;
    return r;
}

CycloMatrix CycloMatrix::pow(unsigned k) const {
    CycloMatrix r = identity(size_, order_);
    CycloMatrix b(*this);
    while (k) {
        if (k & 1) r = r * b;
        if (k >>= 1) b = b * b;
    }
    return r;
}

std::vector<Cyclotomic> CycloMatrix::apply(std::span<const Cyclotomic> v) const {
    if (static_cast<int>(v.size()) != size_) throw std::invalid_argument("vector size mismatch");
    std::vector<Cyclotomic> out(size_, Cyclotomic::zero(order_));
    for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j)
            if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

CycloMatrix CycloMatrix::inverse() const {
    CycloMatrix a(*this);
    CycloMatrix inv = identity(size_, order_);
    for (int c = 0; c < size_; ++c) {
        int piv = -1;
        for (int r = c; r < size_; ++r)
            if (!a.at(r, c).is_zero()) { piv = r; break; }
        if (piv < 0) throw std::domain_error("singular matrix");
        if (piv != c)
            for (int j = 0; j < size_; ++j) {
                std::swap(a.at(piv, j), a.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
        Cyclotomic pi = a.at(c, c).inverse();
        for (int j = 0; j < size_; ++j) {
            a.at(c, j) *= pi;
            inv.at(c, j) *= pi;
        }
        for (int r = 0; r < size_; ++r) {
            if (r == c || a.at(r, c).is_zero()) continue;
            Cyclotomic f = a.at(r, c);
            for (int j = 0; j < size_; ++j) {
                a.at(r, j) -= f * a.at(c, j);
                inv.at(r, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

Cyclotomic CycloMatrix::determinant() const {
    CycloMatrix a(*this);
    Cyclotomic det = Cyclotomic::one(order_);
    for (int c = 0; c < size_; ++c) {
        int piv = -1;
        for (int r = c; r < size_; ++r)
            if (!a.at(r, c).is_zero()) { piv = r; break; }
        if (piv < 0) return Cyclotomic::zero(order_);
        if (piv != c) {
            for (int j = 0; j < size_; ++j) std::swap(a.at(piv, j), a.at(c, j));
            det = -det;
        }
        det *= a.at(c, c);
        Cyclotomic pi = a.at(c, c).inverse();
        for (int r = c + 1; r < size_; ++r) {
            if (a.at(r, c).is_zero()) continue;
            Cyclotomic f = a.at(r, c) * pi;
            for (int j = c; j < size_; ++j) a.at(r, j) -= f * a.at(c, j);
        }
    }
    return det;
}

std::optional<Cyclotomic> CycloMatrix::scalar_multiple_of(const CycloMatrix& o) const {
    if (size_ != o.size_ || order_ != o.order_) return std::nullopt;
    // find first nonzero of o, derive lambda, then verify
    int idx = -1;
    for (int i = 0; i < size_ * size_; ++i)
        if (!o.a_[i].is_zero()) { idx = i; break; }
    if (idx < 0) {
        for (const auto& x : a_)
            if (!x.is_zero()) return std::nullopt;
        return Cyclotomic::one(order_);
    }
    Cyclotomic lambda = a_[idx] * o.a_[idx].inverse();
    for (int i = 0; i < size_ * size_; ++i)
        if (a_[i] != lambda * o.a_[i]) return std::nullopt;
    return lambda;
}

bool CycloMatrix::is_scalar() const {
    return scalar_multiple_of(identity(size_, order_)).has_value();
}

std::string CycloMatrix::key() const {
    std::string out;
    for (const auto& x : a_) {
        out += x.key();
        out.push_back(';');
    }
    return out;
}

CycloMatrix CycloMatrix::projective_rep() const {
    for (const auto& x : a_)
        for (const auto& c : x.coeffs()) {
            if (is_zero(c)) continue;
            return sgn(c) > 0 ? *this : -*this;
        }
    return *this;
}

// ---------------------------------------------------------------------------
// Breadth-first closure.
//
// For prime cyclotomic order the hot loop runs on a redundant integer
// representation: each entry is a length-p integer vector over the exponents
// zeta^0..zeta^(p-1) together with one common positive denominator. Products
// are cyclic convolutions; the relation 1 + zeta + ... + zeta^(p-1) = 0 makes
// "subtract the last coordinate" the canonical form, so keys stay exact
// without any rational arithmetic.
// ---------------------------------------------------------------------------

namespace {

struct ScaledMat {
    int n;
    long p;  // prime order
    Integer den;                         // positive
    std::vector<std::vector<Integer>> e; // n*n entries, each length p

    static ScaledMat from(const CycloMatrix& m) {
        const long p = m.order();
        ScaledMat s{m.size(), p, Integer(1), {}};
        s.e.assign(m.size() * m.size(), std::vector<Integer>(p, Integer(0)));
        // common denominator = lcm of all coefficient denominators
        Integer den(1);
        for (int i = 0; i < m.size(); ++i)
            for (int j = 0; j < m.size(); ++j)
                for (const auto& c : m.at(i, j).coeffs())
                    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
        s.den = den;
        for (int i = 0; i < m.size(); ++i)
            for (int j = 0; j < m.size(); ++j) {
                const auto& coeffs = m.at(i, j).coeffs();
                for (std::size_t k = 0; k < coeffs.size(); ++k)
                    s.e[i * m.size() + j][k] = coeffs[k].get_num() * (den / coeffs[k].get_den());
            }
        s.normalize();
        return s;
    }

    CycloMatrix to_matrix() const {
        CycloMatrix m(n, p);
        Rational d(den);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<std::pair<long, Rational>> terms;
                const auto& v = e[i * n + j];
                for (long k = 0; k < p; ++k)
                    if (v[k] != 0) terms.emplace_back(k, rat(v[k], den));
                m.at(i, j) = Cyclotomic::from_terms(p, terms);
            }
        return m;
    }

    void canonicalize_entries() {
        for (auto& v : e) {
            if (v[p - 1] == 0) continue;
            Integer t = v[p - 1];
            for (long k = 0; k < p; ++k) v[k] -= t;
        }
    }

    void normalize() {
        canonicalize_entries();
        Integer g = den;
        for (const auto& v : e)
            for (const auto& x : v)
                if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g > 1) {
            den /= g;
            for (auto& v : e)
                for (auto& x : v) x /= g;
        }
    }

    ScaledMat mul(const ScaledMat& o) const {
        ScaledMat r{n, p, den * o.den, {}};
        r.e.assign(n * n, std::vector<Integer>(p, Integer(0)));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const auto& a = e[i * n + k];
                bool a_zero = true;
                for (long t = 0; t < p; ++t)
                    if (a[t] != 0) { a_zero = false; break; }
                if (a_zero) continue;
                for (int j = 0; j < n; ++j) {
                    const auto& b = o.e[k * n + j];
                    auto& dst = r.e[i * n + j];
                    for (long s = 0; s < p; ++s) {
                        if (a[s] == 0) continue;
                        for (long t = 0; t < p; ++t) {
                            if (b[t] == 0) continue;
                            long u = s + t;
                            if (u >= p) u -= p;
                            dst[u] += a[s] * b[t];
                        }
                    }
                }
            }
        r.normalize();
        return r;
    }

    void negate() {
        for (auto& v : e)
            for (auto& x : v) x = -x;
    }

    int first_sign() const {
        for (const auto& v : e)
            for (const auto& x : v)
                if (x != 0) return sgn(x);
        return 0;
    }

    std::string key() const {
        std::string out = den.get_str();
        for (const auto& v : e) {
            out.push_back('|');
            for (long k = 0; k < p - 1; ++k) {  // last coord canonically zero
                out += v[k].get_str();
                out.push_back(',');
            }
        }
        return out;
    }
};

bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

MatrixGroup closure(std::span<const CycloMatrix> generators, std::size_t bound) {
    if (generators.empty()) throw std::invalid_argument("closure needs at least one generator");
    const int n = generators[0].size();
    const long p = generators[0].order();
    if (!is_prime_long(p))
        throw std::invalid_argument("closure implemented for prime cyclotomic orders");

    std::vector<ScaledMat> gens;
    for (const auto& g : generators) {
        if (g.size() != n || g.order() != p) throw std::invalid_argument("generator shape mismatch");
        gens.push_back(ScaledMat::from(g));
    }

    MatrixGroup out;
    std::unordered_set<std::string> seen;
    std::unordered_set<std::string> seen_projective;
    std::deque<ScaledMat> queue;
    std::vector<ScaledMat> elements;

    auto proj_key = [](const ScaledMat& m) {
        if (m.first_sign() < 0) {
            ScaledMat c = m;
            c.negate();
            return c.key();
        }
        return m.key();
    };

    ScaledMat id = ScaledMat::from(CycloMatrix::identity(n, p));
    ScaledMat neg_id = id;
    neg_id.negate();
    const std::string neg_id_key = neg_id.key();

    auto push = [&](const ScaledMat& m) {
        auto [it, inserted] = seen.insert(m.key());
        if (!inserted) return;
        seen_projective.insert(proj_key(m));
        if (m.key() == neg_id_key) out.contains_minus_identity = true;
        elements.push_back(m);
        queue.push_back(m);
    };

    push(id);
    for (const auto& g : gens) push(g);

    while (!queue.empty()) {
        if (seen.size() > bound) {
            out.bound_exceeded = true;
            break;
        }
        ScaledMat m = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) push(m.mul(g));
    }

    out.order = seen.size();
    out.projective_order = seen_projective.size();
    if (!out.bound_exceeded) {
        out.elements.reserve(elements.size());
        std::sort(elements.begin(), elements.end(),
                  [](const ScaledMat& a, const ScaledMat& b) { return a.key() < b.key(); });
        for (const auto& m : elements) out.elements.push_back(m.to_matrix());
    }
    return out;
}

}  // namespace psl213
