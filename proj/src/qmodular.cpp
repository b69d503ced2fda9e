#include "psl213/qmodular.hpp"

namespace psl213 {

namespace {

constexpr int kThetaM[6] = {11, 7, 5, 3, 9, 1};

SeriesQ theta_unary(long grid, long char_denom, int m, int sign, int accuracy) {
    // sign * q^(m^2 / (8*char_denom... )) handled by caller through offsets:
    // here: q^(m^2 * grid / (8k)) with series sum (-1)^n q^((k n^2 + m n)/2),
    // k = char_denom (13 or 5). Exponent index on `grid`.
    const long k = char_denom;
    const long lead_den = 8 * k;  // m^2/(8k): 104 for k=13, 40 for k=5
    if (grid % lead_den != 0 || grid % 2 != 0)
        throw std::invalid_argument("grid incompatible with theta exponents");
    const long trunc = static_cast<long>(accuracy + 1) * grid;
    std::vector<SeriesQ::Term> terms;
    for (long n = 0;; ++n) {
        bool any = false;
        for (long nn : (n == 0 ? std::vector<long>{0} : std::vector<long>{n, -n})) {
            // (k nn^2 + m nn) is even: nn and k nn + m have opposite parity for odd k, odd m
            long e = m * m * (grid / lead_den) + (k * nn * nn + m * nn) / 2 * grid;
            if (e < trunc) {
                terms.emplace_back(e, rat(((nn % 2 + 2) % 2 == 0 ? 1 : -1) * sign));
                any = true;
            }
        }
        if (!any && n > 0) break;
    }
    return SeriesQ::from_terms(grid, trunc, std::move(terms));
}

}  // namespace

SeriesQ eta_series(int accuracy, long grid) {
    if (grid % 24 != 0) throw std::invalid_argument("eta needs a grid divisible by 24");
    if (accuracy < 1) throw std::invalid_argument("eta accuracy must be >= 1");
    long trunc = static_cast<long>(accuracy + 1) * grid + grid / 24;
    SeriesQ out = SeriesQ::from_terms(grid, trunc, {{grid / 24, rat(1)}});
    for (long n = 1; n <= accuracy + 1; ++n) {
        SeriesQ factor = SeriesQ::from_terms(grid, trunc, {{0, rat(1)}, {n * grid, rat(-1)}});
        out = (out * factor).truncated(trunc);
    }
    return out;
}

SeriesQ theta13_series(int i, int accuracy, long grid) {
    if (i < 1 || i > 6) throw std::invalid_argument("theta component in 1..6");
    return theta_unary(grid, 13, kThetaM[i - 1], i == 4 ? -1 : 1, accuracy);
}

SeriesQ theta5_series(char which, int accuracy, long grid) {
    if (which == 'a') return theta_unary(grid, 5, 3, 1, accuracy);
    if (which == 'b') return theta_unary(grid, 5, 1, 1, accuracy);
    throw std::invalid_argument("order-5 theta component is 'a' or 'b'");
}

SeriesQ eisenstein_series(int weight, int accuracy, long grid) {
    if (weight != 4 && weight != 6) throw std::invalid_argument("weight must be 4 or 6");
    long c = weight == 4 ? 240 : -504;
    int k = weight - 1;
    std::vector<SeriesQ::Term> terms{{0, rat(1)}};
    for (long n = 1; n <= accuracy; ++n) {
        Integer sigma(0);
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) sigma += ipow(Integer(d), k);
        terms.emplace_back(n * grid, Rational(sigma) * rat(c));
    }
    return SeriesQ::from_terms(grid, static_cast<long>(accuracy + 1) * grid, std::move(terms));
}

SeriesQ delta_series(int accuracy, long grid) { return eta_series(accuracy, grid).pow(24); }

SeriesQ eval_form_at_series(const PolyQ& p, std::span<const SeriesQ> point, int eta_power) {
    if (static_cast<int>(point.size()) != p.nvars())
        throw std::invalid_argument("series point arity mismatch");
    int deg = 0;
    if (!p.is_homogeneous(&deg) && eta_power != 0)
        throw std::invalid_argument("eta scaling requires a homogeneous form");
    const long grid = point[0].denom();
    long trunc = point[0].trunc();
    for (const auto& s : point) {
        if (s.denom() != grid) throw std::invalid_argument("series grid mismatch");
        trunc = std::min(trunc, s.trunc());
    }
    std::vector<std::vector<SeriesQ>> powers(point.size());
    auto vp = [&](int i, int e) -> const SeriesQ& {
        auto& tab = powers[i];
        if (tab.empty()) tab.push_back(point[i]);
        while (static_cast<int>(tab.size()) < e) tab.push_back(tab.back() * point[i]);
        return tab[e - 1];
    };
    SeriesQ acc(grid, trunc);
    for (const auto& [m, c] : p.terms()) {
        SeriesQ t = SeriesQ::from_terms(grid, trunc, {{0, c}});
        for (int i = 0; i < p.nvars(); ++i)
            if (m.e[i]) t = t * vp(i, m.e[i]);
        acc = acc + t;
    }
    if (eta_power != 0) {
        long need = (acc.trunc() + grid - 1) / grid + 1;
        acc = acc * eta_series(static_cast<int>(need), grid).pow(eta_power);
    }
    return acc;
}

SeriesC shift_z_plus_1(const SeriesC& s) {
    if (104 % s.denom() != 0) throw std::invalid_argument("shift needs a grid dividing 104");
    const long f = 104 / s.denom();
    std::vector<SeriesC::Term> terms;
    for (const auto& [k, c] : s.terms()) {
        long e = (k * f) % 104;
        if (e < 0) e += 104;
        terms.emplace_back(k, c * Cyclotomic::zeta(104, e));
    }
    return SeriesC::from_terms(s.denom(), s.trunc(), std::move(terms));
}

// ---------------------------------------------------------------------------
// ModularData
// ---------------------------------------------------------------------------

namespace {

using Graded = std::array<SeriesQ, 13>;

Graded graded_make(long grid, long trunc) {
    Graded g;
    g.fill(SeriesQ(grid, trunc));
    return g;
}

// cyclic convolution over Z/13; truncation bounds propagate per term
Graded graded_mul(const Graded& x, const Graded& y) {
    Graded out;
    std::array<bool, 13> set{};
    for (int i = 0; i < 13; ++i)
        for (int j = 0; j < 13; ++j) {
            int k = (i + j) % 13;
            SeriesQ prod = x[i] * y[j];
            if (!set[k]) {
                out[k] = std::move(prod);
                set[k] = true;
            } else {
                out[k] = out[k] + prod;
            }
        }
    return out;
}

SeriesQ graded_comp0(const Graded& x, const Graded& y) {
    SeriesQ acc = x[0] * y[0];
    for (int i = 1; i < 13; ++i) acc = acc + x[i] * y[13 - i];
    return acc;
}

}  // namespace

ModularData::ModularData(int accuracy) : n_(accuracy) {
    if (accuracy < 2) throw std::invalid_argument("modular accuracy must be >= 2");
    const long M = kGrid13;
    for (int i = 1; i <= 6; ++i) a_[i - 1] = theta13_series(i, accuracy + 2, M);
    eta_ = eta_series(accuracy + 2, M);
    e4_ = eisenstein_series(4, accuracy + 2, M);
    e6_ = eisenstein_series(6, accuracy + 2, M);
    delta_ = delta_series(accuracy + 2, M);

    FormSystem fs;
    std::span<const SeriesQ> pt(a_.data(), 6);
    for (const auto& p : fs.catalogs().A) aval_.push_back(eval_form_at_series(p, pt));
    for (const auto& p : fs.catalogs().D) dval_.push_back(eval_form_at_series(p, pt));
    for (const auto& p : fs.catalogs().G) gval_.push_back(eval_form_at_series(p, pt));

    long trunc = aval_[0].trunc();
    Graded phi = graded_make(M, trunc);
    for (int j = 0; j < 7; ++j) phi[kAPattern[j]] = phi[kAPattern[j]] + aval_[j];
    w_graded_ = graded_mul(phi, phi);
    w_inf_ = (aval_[0] * aval_[0]).scaled(rat(13));

    delta_graded_ = graded_make(M, gval_[0].trunc());
    delta_graded_[0] = gval_[0].scaled(rat(-13));
    for (int j = 1; j <= 12; ++j) delta_graded_[j] = gval_[j];
    delta_inf_ = gval_[0].scaled(rat(169));
}

SeriesQ ModularData::eta_power(int e) const { return eta_.pow(e); }

const ModularData::Graded& ModularData::graded_power(RootFamily family, unsigned k) const {
    int fam = family == RootFamily::Jacobian ? 0 : 1;
    auto it = power_cache_.find({fam, k});
    if (it != power_cache_.end()) return it->second;
    const Graded& base = family == RootFamily::Jacobian ? w_graded_ : delta_graded_;
    Graded value = graded_make(base[0].denom(), 0);
    if (k == 1) {
        value = base;
    } else {
        const Graded& half = graded_power(family, k / 2);
        value = graded_mul(half, half);
        if (k % 2) value = graded_mul(value, base);
    }
    return power_cache_.emplace(std::make_pair(fam, k), std::move(value)).first->second;
}

SeriesQ ModularData::root_power_sum(RootFamily family, unsigned k) const {
    if (k < 1) throw std::invalid_argument("power sum exponent must be >= 1");
    // grade-zero component of the k-th power picks up the sum over the 13
    // finite roots (each zeta-average contributes a factor 13)
    SeriesQ comp0(kGrid13, 0);
    if (k == 1) {
        comp0 = family == RootFamily::Jacobian ? w_graded_[0] : delta_graded_[0];
    } else {
        const Graded& a = graded_power(family, k / 2);
        const Graded& b = graded_power(family, k - k / 2);
        comp0 = graded_comp0(a, b);
    }
    const SeriesQ& inf = family == RootFamily::Jacobian ? w_inf_ : delta_inf_;
    return comp0.scaled(rat(13)) + inf.pow(k);
}

SeriesQ ModularData::capital_phi_x(int degree) const {
    PowerSumForm f = capital_phi_form(degree);
    SeriesQ ps = root_power_sum(f.family, f.exponent);
    return (ps * eta_power(degree)).scaled(f.normalization);
}

SeriesQ ModularData::capital_phi_unnormalized(int degree, int eta_level) const {
    PowerSumForm f = capital_phi_form(degree);
    SeriesQ ps = root_power_sum(f.family, f.exponent);
    return ps * eta_power(eta_level * degree);
}

IcosaModularData::IcosaModularData(int accuracy) {
    const long M = kGrid5;
    a_ = theta5_series('a', accuracy + 2, M);
    b_ = theta5_series('b', accuracy + 2, M);
    eta_ = eta_series(accuracy + 2, M);
    e4_ = eisenstein_series(4, accuracy + 2, M);
    e6_ = eisenstein_series(6, accuracy + 2, M);
    delta_ = delta_series(accuracy + 2, M);
}

SeriesQ IcosaModularData::eta_power(int e) const { return eta_.pow(e); }

SeriesQ IcosaModularData::at_weighted_point(const PolyQ& form) const {
    int deg = 0;
    if (!form.is_homogeneous(&deg)) throw std::invalid_argument("expected a homogeneous form");
    std::array<SeriesQ, 2> pt{a_, b_};
    return eval_form_at_series(form, std::span<const SeriesQ>(pt.data(), 2), deg);
}

}  // namespace psl213
