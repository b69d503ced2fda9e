#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "psl213/cyclotomic.hpp"
#include "psl213/fp.hpp"
#include "psl213/rational.hpp"

namespace psl213 {

inline bool coeff_is_zero(const Rational& c) { return is_zero(c); }
inline bool coeff_is_zero(const Cyclotomic& c) { return c.is_zero(); }
inline bool coeff_is_zero(const Fp64& c) { return c.is_zero(); }

inline Rational zero_like(const Rational&) { return rat(0); }
inline Cyclotomic zero_like(const Cyclotomic& c) { return Cyclotomic::zero(c.order()); }
inline Fp64 zero_like(const Fp64&) { return Fp64(); }
inline Rational one_like(const Rational&) { return rat(1); }
inline Cyclotomic one_like(const Cyclotomic& c) { return Cyclotomic::one(c.order()); }
inline Fp64 one_like(const Fp64&) { return Fp64(1); }

inline Cyclotomic operator*(const Cyclotomic& a, const Rational& r) { return a.scaled(r); }

// Exponent vector, up to 6 variables, graded-lex ordered.
struct Monomial {
    std::array<std::uint8_t, 6> e{};

    static Monomial unit(int i) {
        Monomial m;
        m.e[i] = 1;
        return m;
    }
    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial m;
        for (int i = 0; i < 6; ++i) m.e[i] = static_cast<std::uint8_t>(e[i] + o.e[i]);
        return m;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator<(const Monomial& o) const {  // graded lex
        int da = degree(), db = o.degree();
        if (da != db) return da < db;
        return e < o.e;
    }
    std::uint64_t hash() const {
        std::uint64_t h = 0;
        for (auto x : e) h = h * 0x100000001b3ULL + x + 1;
        return h;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

template <class C>
class MultiPoly {
public:
    using Term = std::pair<Monomial, C>;

    explicit MultiPoly(int nvars = 6) : nvars_(nvars) {}

    static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
    static MultiPoly constant(int nvars, C c) {
        MultiPoly p(nvars);
        if (!coeff_is_zero(c)) p.terms_.emplace_back(Monomial{}, std::move(c));
        return p;
    }
    static MultiPoly variable(int nvars, int i, C one) {
        MultiPoly p(nvars);
        p.terms_.emplace_back(Monomial::unit(i), std::move(one));
        return p;
    }
    static MultiPoly from_terms(int nvars, std::vector<Term> terms) {
        MultiPoly p(nvars);
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }
    bool is_homogeneous(int* deg_out = nullptr) const {
        if (terms_.empty()) {
            if (deg_out) *deg_out = -1;
            return true;
        }
        int d = terms_[0].first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        if (deg_out) *deg_out = d;
        return true;
    }

    C coeff(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& k) { return t.first < k; });
        if (it != terms_.end() && it->first == m) return it->second;
        return C{};
    }

    MultiPoly operator+(const MultiPoly& o) const {
        check_vars(o);
        MultiPoly out(nvars_);
        out.terms_.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.begin(), b = o.terms_.begin();
        while (a != terms_.end() || b != o.terms_.end()) {
            if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
                out.terms_.push_back(*a++);
            } else if (a == terms_.end() || b->first < a->first) {
                out.terms_.push_back(*b++);
            } else {
                C c = a->second + b->second;
                if (!coeff_is_zero(c)) out.terms_.emplace_back(a->first, std::move(c));
                ++a;
                ++b;
            }
        }
        return out;
    }
    MultiPoly operator-() const {
        MultiPoly out(*this);
        for (auto& [m, c] : out.terms_) c = -c;
        return out;
    }
    MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }

    MultiPoly operator*(const MultiPoly& o) const {
        check_vars(o);
        MultiPoly out(nvars_);
        if (terms_.empty() || o.terms_.empty()) return out;
        std::unordered_map<Monomial, C, MonomialHash> acc;
        acc.reserve(terms_.size() * 2 + o.terms_.size());
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                auto [it, inserted] = acc.try_emplace(ma * mb, ca * cb);
                if (!inserted) it->second += ca * cb;
            }
        out.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!coeff_is_zero(c)) out.terms_.emplace_back(m, std::move(c));
        std::sort(out.terms_.begin(), out.terms_.end(),
                  [](const Term& x, const Term& y) { return x.first < y.first; });
        return out;
    }

    MultiPoly pow(unsigned k) const {
        if (k == 0) return constant(nvars_, unit_like());
        MultiPoly r(*this);
        MultiPoly b(*this);
        unsigned e = k - 1;
        while (e) {
            if (e & 1) r = r * b;
            if (e >>= 1) b = b * b;
        }
        return r;
    }

    template <class S>
    MultiPoly scaled(const S& s) const {
        MultiPoly out(nvars_);
        out.terms_.reserve(terms_.size());
        for (const auto& [m, c] : terms_) {
            C sc = c * s;
            if (!coeff_is_zero(sc)) out.terms_.emplace_back(m, std::move(sc));
        }
        return out;
    }

    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // exact evaluation with memoized variable powers
    C eval(std::span<const C> point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw std::invalid_argument("evaluation point arity mismatch");
        C acc = zero_like(point[0]);
        std::vector<std::vector<C>> powers(nvars_);
        for (int i = 0; i < nvars_; ++i) powers[i].push_back(one_like(point[0]));
        auto vp = [&](int i, int e) -> const C& {
            auto& tab = powers[i];
            while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * point[i]);
            return tab[e];
        };
        for (const auto& [m, c] : terms_) {
            C t = c;
            for (int i = 0; i < nvars_; ++i)
                if (m.e[i]) t = t * vp(i, m.e[i]);
            acc = acc + t;
        }
        return acc;
    }

    // p(Mz) for the linear change of variables z_i -> images[i];
    // powers of the images are memoized across terms.
    MultiPoly compose_linear(std::span<const MultiPoly> images) const {
        if (static_cast<int>(images.size()) != nvars_)
            throw std::invalid_argument("compose_linear image count mismatch");
        if (terms_.empty()) return MultiPoly(nvars_);
        std::vector<std::vector<MultiPoly>> powers(nvars_);
        for (int i = 0; i < nvars_; ++i)
            powers[i].push_back(constant(nvars_, unit_like()));
        auto ip = [&](int i, int e) -> const MultiPoly& {
            auto& tab = powers[i];
            while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * images[i]);
            return tab[e];
        };
        MultiPoly acc(nvars_);
        for (const auto& [m, c] : terms_) {
            MultiPoly t = constant(nvars_, c);
            for (int i = 0; i < nvars_; ++i)
                if (m.e[i]) t = t * ip(i, m.e[i]);
            acc = acc + t;
        }
        return acc;
    }

    MultiPoly derivative(int var) const {
        MultiPoly out(nvars_);
        for (const auto& [m, c] : terms_) {
            if (m.e[var] == 0) continue;
            Monomial d = m;
            d.e[var] -= 1;
            C nc = c * scalar_from_long(m.e[var]);
            if (!coeff_is_zero(nc)) out.terms_.emplace_back(d, std::move(nc));
        }
        std::sort(out.terms_.begin(), out.terms_.end(),
                  [](const Term& x, const Term& y) { return x.first < y.first; });
        return out;
    }

private:
    C scalar_from_long(long v) const;
    C unit_like() const;

    void check_vars(const MultiPoly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    }
    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& x, const Term& y) { return x.first < y.first; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().first == t.first)
                out.back().second += t.second;
            else
                out.push_back(std::move(t));
        }
        std::erase_if(out, [](const Term& t) { return coeff_is_zero(t.second); });
        terms_ = std::move(out);
    }

    int nvars_;
    std::vector<Term> terms_;
};

template <>
inline Rational MultiPoly<Rational>::scalar_from_long(long v) const { return rat(v); }
template <>
inline Rational MultiPoly<Rational>::unit_like() const { return rat(1); }

template <>
inline Fp64 MultiPoly<Fp64>::scalar_from_long(long v) const { return Fp64::from_int(v); }
template <>
inline Fp64 MultiPoly<Fp64>::unit_like() const { return Fp64(1); }

template <>
inline Cyclotomic MultiPoly<Cyclotomic>::scalar_from_long(long v) const {
    long ord = terms_.empty() ? 1 : terms_[0].second.order();
    return Cyclotomic::constant(ord, rat(v));
}
template <>
inline Cyclotomic MultiPoly<Cyclotomic>::unit_like() const {
    long ord = terms_.empty() ? 1 : terms_[0].second.order();
    return Cyclotomic::one(ord);
}

using PolyQ = MultiPoly<Rational>;
using PolyC = MultiPoly<Cyclotomic>;
using PolyFp = MultiPoly<Fp64>;

// sum_i forms[i]^k
template <class C>
MultiPoly<C> power_sum(std::span<const MultiPoly<C>> forms, unsigned k) {
    if (forms.empty()) throw std::invalid_argument("power_sum of empty family");
    if (k < 1) throw std::invalid_argument("power_sum exponent must be >= 1");
    MultiPoly<C> acc(forms[0].nvars());
    for (const auto& f : forms) acc = acc + f.pow(k);
    return acc;
}

// k-th elementary symmetric polynomial via the truncated product prod_i (t + f_i)
template <class C>
MultiPoly<C> elementary_symmetric(std::span<const MultiPoly<C>> forms, unsigned k) {
    if (k < 1 || k > forms.size())
        throw std::invalid_argument("elementary_symmetric index out of range");
    int nv = forms[0].nvars();
    // e[j] after scanning i forms = j-th elementary symmetric of those forms;
    // e[0] = 1 is implicit in the j == 1 branch below.
    std::vector<MultiPoly<C>> e(k + 1, MultiPoly<C>::zero(nv));
    for (std::size_t i = 0; i < forms.size(); ++i) {
        for (std::size_t j = std::min<std::size_t>(k, i + 1); j >= 1; --j) {
            MultiPoly<C> carry = (j == 1) ? forms[i] : e[j - 1] * forms[i];
            e[j] = e[j] + carry;
        }
    }
    return e[k];
}

// lifts / projections between coefficient rings
inline PolyC lift_to_cyclotomic(const PolyQ& p, long order) {
    std::vector<PolyC::Term> ts;
    ts.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) ts.emplace_back(m, Cyclotomic::constant(order, c));
    return PolyC::from_terms(p.nvars(), std::move(ts));
}

inline PolyFp project_to_fp(const PolyQ& p) {
    std::vector<PolyFp::Term> ts;
    ts.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) ts.emplace_back(m, Fp64::from_rational(c));
    return PolyFp::from_terms(p.nvars(), std::move(ts));
}

inline PolyFp project_to_fp(const PolyC& p, const CycloToFp& img) {
    std::vector<PolyFp::Term> ts;
    ts.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) ts.emplace_back(m, img.map(c));
    return PolyFp::from_terms(p.nvars(), std::move(ts));
}

// Exact evaluation at a prime-field point; cyclotomic coefficients pass
// through the point's order-13 root-of-unity image.
inline Fp64 eval_point(const PolyQ& p, const PrimeFieldPoint& pt) {
    if (pt.modulus != Fp64::modulus())
        throw std::invalid_argument("point drawn under a different modulus");
    return project_to_fp(p).eval(std::span<const Fp64>(pt.values.data(), pt.values.size()));
}

inline Fp64 eval_point(const PolyC& p, const PrimeFieldPoint& pt) {
    if (pt.modulus != Fp64::modulus())
        throw std::invalid_argument("point drawn under a different modulus");
    CycloToFp img(13, pt.zeta_image);
    return project_to_fp(p, img).eval(std::span<const Fp64>(pt.values.data(), pt.values.size()));
}

// Parse integer-coefficient polynomials written like
// "-z1^3 + z2 z6^2 - z2 z3 z5 - 3 z1 z3 z4 + 2 z3^2 z6".
PolyQ parse_poly(int nvars, std::string_view text);

// canonical text form: each term "e1 e2 ... en : coeff", graded-lex order
std::string poly_to_text(const PolyQ& p);
std::string poly_to_text(const PolyC& p);

}  // namespace psl213
