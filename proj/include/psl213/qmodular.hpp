#pragma once

#include <array>
#include <map>

#include "psl213/forms.hpp"
#include "psl213/series.hpp"

namespace psl213 {

// Master exponent grids: 312 = lcm(104, 24) for the six-variable theta point
// with eta factors, 120 = lcm(40, 24) for the two-variable one, 104 and 40
// for bare theta constants.
inline constexpr long kGrid13 = 312;
inline constexpr long kGrid5 = 120;
inline constexpr long kThetaGrid13 = 104;
inline constexpr long kThetaGrid5 = 40;

// q^(1/24) prod_{n<=N+1} (1 - q^n); coefficients valid below q^(N+1+1/24)
SeriesQ eta_series(int accuracy, long grid = 24);

// unary theta constants of order 13, component i in 1..6, with the signs and
// leading exponents m^2/104 for m = (11, 7, 5, 3, 9, 1), component 4 negated
SeriesQ theta13_series(int i, int accuracy, long grid = kThetaGrid13);

// order-5 analogues: 'a' has leading q^(9/40), 'b' leading q^(1/40)
SeriesQ theta5_series(char which, int accuracy, long grid = kThetaGrid5);

// normalized weight-4/6 eisenstein series and the discriminant eta^24
SeriesQ eisenstein_series(int weight, int accuracy, long grid = 1);
SeriesQ delta_series(int accuracy, long grid = 24);

// p homogeneous of degree d evaluated at the series vector, then multiplied
// by eta^eta_power on the same grid; monomial values memoized.
SeriesQ eval_form_at_series(const PolyQ& p, std::span<const SeriesQ> point, int eta_power = 0);

// The effect of z -> z+1 on a series over Q(zeta_104): the coefficient of
// q^(k/M) picks up zeta_104^(104 k / M); requires M | 104.
SeriesC shift_z_plus_1(const SeriesC& s);

// Everything the 13-case modular checks need, computed once at a given
// integer q-order of accuracy on the master grid.
class ModularData {
public:
    explicit ModularData(int accuracy);

    int accuracy() const { return n_; }
    long grid() const { return kGrid13; }

    const std::array<SeriesQ, 6>& theta_point() const { return a_; }
    const SeriesQ& eta() const { return eta_; }
    SeriesQ eta_power(int e) const;
    const SeriesQ& e4() const { return e4_; }
    const SeriesQ& e6() const { return e6_; }
    const SeriesQ& discriminant() const { return delta_; }

    const std::vector<SeriesQ>& a_series() const { return aval_; }
    const std::vector<SeriesQ>& d_series() const { return dval_; }
    const std::vector<SeriesQ>& g_series() const { return gval_; }

    // sum over the 13 finite roots plus the infinite root, each to the k-th power
    SeriesQ root_power_sum(RootFamily family, unsigned k) const;

    // normalized invariant evaluated at the eta-scaled theta point
    SeriesQ capital_phi_x(int degree) const;
    // unnormalized power sum at the stated eta-level (1 = weight-one point,
    // 3 = weight-two point)
    SeriesQ capital_phi_unnormalized(int degree, int eta_level) const;

private:
    using Graded = std::array<SeriesQ, 13>;
    const Graded& graded_power(RootFamily family, unsigned k) const;

    int n_;
    std::array<SeriesQ, 6> a_;
    SeriesQ eta_, e4_, e6_, delta_;
    std::vector<SeriesQ> aval_, dval_, gval_;
    Graded w_graded_, delta_graded_;
    SeriesQ w_inf_, delta_inf_;
    mutable std::map<std::pair<int, unsigned>, Graded> power_cache_;
};

// Two-variable counterpart at order 5.
class IcosaModularData {
public:
    explicit IcosaModularData(int accuracy);

    const SeriesQ& theta_a() const { return a_; }
    const SeriesQ& theta_b() const { return b_; }
    const SeriesQ& eta() const { return eta_; }
    SeriesQ eta_power(int e) const;
    const SeriesQ& e4() const { return e4_; }
    const SeriesQ& e6() const { return e6_; }
    const SeriesQ& discriminant() const { return delta_; }

    // form evaluated at (eta a, eta b) = eta^deg * form(a, b)
    SeriesQ at_weighted_point(const PolyQ& form) const;

private:
    SeriesQ a_, b_, eta_, e4_, e6_, delta_;
};

}  // namespace psl213
