#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "psl213/poly.hpp"

namespace psl213 {

// Truncated series sum_k c_k q^(k/M) with exact coefficients.
//
// `trunc` is the first unknown exponent index: coefficients are stored (and
// trusted) only for k < trunc. Arithmetic propagates the tightest bound that
// the inputs justify, so a comparison of two series knows exactly through
// which q-order it is valid.
template <class C>
class PuiseuxSeries {
public:
    using Term = std::pair<long, C>;

    PuiseuxSeries() : denom_(1), trunc_(0) {}
    PuiseuxSeries(long denom, long trunc) : denom_(denom), trunc_(trunc) {
        if (denom < 1) throw std::invalid_argument("series grid denominator must be >= 1");
    }

    static PuiseuxSeries from_terms(long denom, long trunc, std::vector<Term> terms) {
        PuiseuxSeries s(denom, trunc);
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        for (auto& [k, c] : terms) {
            if (k >= trunc || coeff_is_zero(c)) continue;
            if (!s.terms_.empty() && s.terms_.back().first == k)
                s.terms_.back().second += c;
            else
                s.terms_.emplace_back(k, std::move(c));
        }
        std::erase_if(s.terms_, [](const Term& t) { return coeff_is_zero(t.second); });
        return s;
    }

    long denom() const { return denom_; }
    long trunc() const { return trunc_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool known_zero() const { return terms_.empty(); }

    // first exponent index carrying a nonzero coefficient (trunc if none known)
    long ord() const { return terms_.empty() ? trunc_ : terms_.front().first; }

    C coeff(long k) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                                   [](const Term& t, long kk) { return t.first < kk; });
        if (it != terms_.end() && it->first == k) return it->second;
        return C{};
    }

    PuiseuxSeries operator+(const PuiseuxSeries& o) const {
        check_grid(o);
        long tr = std::min(trunc_, o.trunc_);
        PuiseuxSeries out(denom_, tr);
        auto a = terms_.begin(), b = o.terms_.begin();
        while (a != terms_.end() || b != o.terms_.end()) {
            long ka = a != terms_.end() ? a->first : tr;
            long kb = b != o.terms_.end() ? b->first : tr;
            long k = std::min(ka, kb);
            if (k >= tr) break;
            C c{};
            bool set = false;
            if (ka == k) { c = a->second; set = true; ++a; }
            if (kb == k) { c = set ? c + b->second : b->second; ++b; }
            if (!coeff_is_zero(c)) out.terms_.emplace_back(k, std::move(c));
        }
        return out;
    }
    PuiseuxSeries operator-() const {
        PuiseuxSeries out(*this);
        for (auto& [k, c] : out.terms_) c = -c;
        return out;
    }
    PuiseuxSeries operator-(const PuiseuxSeries& o) const { return *this + (-o); }

    PuiseuxSeries operator*(const PuiseuxSeries& o) const {
        check_grid(o);
        // unknown tail of one factor meets the lowest known term of the other
        long tr = std::min(trunc_ + o.ord(), o.trunc_ + ord());
        PuiseuxSeries out(denom_, tr);
        std::map<long, C> acc;
        for (const auto& [ka, ca] : terms_) {
            for (const auto& [kb, cb] : o.terms_) {
                long k = ka + kb;
                if (k >= tr) break;  // o.terms_ sorted
                auto [it, inserted] = acc.try_emplace(k, ca * cb);
                if (!inserted) it->second += ca * cb;
            }
        }
        for (auto& [k, c] : acc)
            if (!coeff_is_zero(c)) out.terms_.emplace_back(k, std::move(c));
        return out;
    }

    PuiseuxSeries pow(unsigned e) const {
        if (e == 0) throw std::invalid_argument("series pow expects exponent >= 1");
        PuiseuxSeries r(*this);
        PuiseuxSeries b(*this);
        unsigned rem = e - 1;
        while (rem) {
            if (rem & 1) r = r * b;
            if (rem >>= 1) b = b * b;
        }
        return r;
    }

    template <class S>
    PuiseuxSeries scaled(const S& s) const {
        PuiseuxSeries out(denom_, trunc_);
        for (const auto& [k, c] : terms_) {
            C sc = c * s;
            if (!coeff_is_zero(sc)) out.terms_.emplace_back(k, std::move(sc));
        }
        return out;
    }

    // exponents multiplied by factor/denom ratio onto a finer grid
    PuiseuxSeries rescaled(long new_denom) const {
        if (new_denom % denom_ != 0) throw std::invalid_argument("grid refinement must be integral");
        long f = new_denom / denom_;
        PuiseuxSeries out(new_denom, trunc_ * f);
        for (const auto& [k, c] : terms_) out.terms_.emplace_back(k * f, c);
        return out;
    }

    // drop knowledge above a smaller truncation bound
    PuiseuxSeries truncated(long new_trunc) const {
        PuiseuxSeries out(denom_, std::min(new_trunc, trunc_));
        for (const auto& [k, c] : terms_)
            if (k < out.trunc_) out.terms_.emplace_back(k, c);
        return out;
    }

    bool operator==(const PuiseuxSeries& o) const {
        return denom_ == o.denom_ && trunc_ == o.trunc_ && terms_ == o.terms_;
    }

private:
    void check_grid(const PuiseuxSeries& o) const {
        if (denom_ != o.denom_) throw std::invalid_argument("series grid mismatch");
    }

    long denom_;
    long trunc_;
    std::vector<Term> terms_;  // sorted by exponent index, below trunc_, no zeros
};

using SeriesQ = PuiseuxSeries<Rational>;
using SeriesC = PuiseuxSeries<Cyclotomic>;

// Result of comparing two series on their common window of validity.
struct SeriesAgreement {
    bool equal;                    // all known coefficients below the window agree
    long window;                   // exclusive exponent-index bound of the comparison
    long verified_q_order;         // floor((window - 1) / denom)
    std::optional<long> mismatch;  // first differing exponent index
};

template <class C>
SeriesAgreement compare_series(const PuiseuxSeries<C>& a, const PuiseuxSeries<C>& b) {
    if (a.denom() != b.denom()) throw std::invalid_argument("series grid mismatch");
    long window = std::min(a.trunc(), b.trunc());
    SeriesAgreement out{true, window, window > 0 ? (window - 1) / a.denom() : -1, std::nullopt};
    auto ai = a.terms().begin();
    auto bi = b.terms().begin();
    while (true) {
        long ka = ai != a.terms().end() ? ai->first : window;
        long kb = bi != b.terms().end() ? bi->first : window;
        long k = std::min(ka, kb);
        if (k >= window) break;
        C ca = ka == k ? ai->second : C{};
        C cb = kb == k ? bi->second : C{};
        bool eq;
        if (ka == k && kb == k) eq = ca == cb;
        else if (ka == k) eq = coeff_is_zero(ca);
        else eq = coeff_is_zero(cb);
        if (!eq) {
            out.equal = false;
            out.mismatch = k;
            break;
        }
        if (ka == k) ++ai;
        if (kb == k) ++bi;
    }
    return out;
}

}  // namespace psl213
