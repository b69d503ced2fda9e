#include <doctest.h>

#include "psl213/qmodular.hpp"

using namespace psl213;

namespace {

// pentagonal-number recurrence for the coefficients of prod (1-q^n)^24 * q:
// independent oracle for the discriminant expansion
std::vector<Integer> tau_by_pentagonal(int n) {
    // prod(1-q^k) = sum_k (-1)^k q^(k(3k-1)/2) over all integers k
    std::vector<Integer> euler(n + 1, Integer(0));
    for (long k = 0;; ++k) {
        long g1 = k * (3 * k - 1) / 2;
        long g2 = k * (3 * k + 1) / 2;
        if (g1 > n && g2 > n) break;
        Integer sign = (k % 2 == 0) ? 1 : -1;
        if (g1 <= n) euler[g1] += sign;
        if (k > 0 && g2 <= n) euler[g2] += sign;
    }
    // (prod(1-q^k))^24 by repeated convolution squaring: 24 = 8 * 3
    auto conv = [n](const std::vector<Integer>& a, const std::vector<Integer>& b) {
        std::vector<Integer> out(n + 1, Integer(0));
        for (int i = 0; i <= n; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; i + j <= n; ++j)
                if (b[j] != 0) out[i + j] += a[i] * b[j];
        }
        return out;
    };
    std::vector<Integer> p2 = conv(euler, euler);
    std::vector<Integer> p4 = conv(p2, p2);
    std::vector<Integer> p8 = conv(p4, p4);
    std::vector<Integer> p24 = conv(conv(p8, p8), p8);
    return p24;  // coefficient of q^m in Delta/q
}

}  // namespace

TEST_CASE("series arithmetic basics") {
    SeriesQ s = SeriesQ::from_terms(24, 24 * 8, {{1, rat(1)}, {25, rat(-3)}});
    SeriesQ one = SeriesQ::from_terms(24, 24 * 8, {{0, rat(1)}});
    CHECK(compare_series(s * one, s).equal);

    // (q^(1/24))^24 = q
    SeriesQ q124 = SeriesQ::from_terms(24, 24 * 8, {{1, rat(1)}});
    SeriesQ q = q124.pow(24);
    CHECK(q.coeff(24) == rat(1));
    CHECK(q.ord() == 24);

    SeriesQ other_grid = SeriesQ::from_terms(12, 96, {{1, rat(1)}});
    CHECK_THROWS_AS(s + other_grid, std::invalid_argument);
    CHECK_THROWS_AS(s * other_grid, std::invalid_argument);

    // rescale onto a finer grid
    SeriesQ fine = s.rescaled(312);
    CHECK(fine.denom() == 312);
    CHECK(fine.coeff(13) == rat(1));
    CHECK_THROWS_AS(s.rescaled(36), std::invalid_argument);
}

TEST_CASE("multiplication truncation bound is honest") {
    // compare against a longer-precision recomputation
    auto build = [](int acc) {
        SeriesQ e = eta_series(acc);
        return e * e.pow(3);
    };
    SeriesQ lo = build(6);
    SeriesQ hi = build(12);
    for (const auto& [k, c] : lo.terms()) CHECK(hi.coeff(k) == c);
    for (const auto& [k, c] : hi.terms())
        if (k < lo.trunc()) CHECK(lo.coeff(k) == c);
}

TEST_CASE("eta series") {
    SeriesQ e = eta_series(10);
    CHECK(e.ord() == 1);  // leading exponent 1/24
    CHECK(e.coeff(1) == rat(1));

    // eta^24 against the pentagonal oracle
    SeriesQ d = e.pow(24);
    auto tau = tau_by_pentagonal(9);
    for (int m = 0; m <= 9; ++m) CHECK(d.coeff(24 * (m + 1)) == Rational(tau[m]));
    CHECK(d.coeff(24) == rat(1));
    CHECK(d.coeff(48) == rat(-24));
    CHECK(d.coeff(72) == rat(252));
    CHECK(d.coeff(96) == rat(-1472));

    // truncation coherence when recomputing deeper
    SeriesQ e2 = eta_series(15);
    for (const auto& [k, c] : e.terms()) CHECK(e2.coeff(k) == c);

    CHECK_THROWS_AS(eta_series(5, 7), std::invalid_argument);
}

TEST_CASE("order-13 theta constants") {
    // leading terms q^(m^2/104) with signs (+,+,+,-,+,+)
    const long frac[6] = {121, 49, 25, 9, 81, 1};
    const int sign[6] = {1, 1, 1, -1, 1, 1};
    for (int i = 1; i <= 6; ++i) {
        SeriesQ a = theta13_series(i, 8);
        CHECK(a.denom() == 104);
        CHECK(a.ord() == frac[i - 1]);
        CHECK(a.coeff(frac[i - 1]) == rat(sign[i - 1]));
        // grid soundness: every exponent is m^2/104 plus an integer
        for (const auto& [k, c] : a.terms()) CHECK((k - frac[i - 1]) % 104 == 0);
    }
    CHECK_THROWS_AS(theta13_series(0, 8), std::invalid_argument);
    CHECK_THROWS_AS(theta13_series(7, 8), std::invalid_argument);
}

TEST_CASE("order-5 theta constants") {
    SeriesQ a = theta5_series('a', 8);
    SeriesQ b = theta5_series('b', 8);
    CHECK(a.denom() == 40);
    CHECK(a.ord() == 9);
    CHECK(a.coeff(9) == rat(1));
    CHECK(b.ord() == 1);
    CHECK(b.coeff(1) == rat(1));
    CHECK_THROWS_AS(theta5_series('c', 8), std::invalid_argument);
}

TEST_CASE("eisenstein series and the discriminant identity") {
    SeriesQ e4 = eisenstein_series(4, 10);
    SeriesQ e6 = eisenstein_series(6, 10);
    CHECK(e4.coeff(0) == rat(1));
    CHECK(e4.coeff(1) == rat(240));
    CHECK(e4.coeff(2) == rat(2160));
    CHECK(e4.coeff(3) == rat(6720));
    CHECK(e6.coeff(1) == rat(-504));
    CHECK(e6.coeff(2) == rat(-16632));

    SeriesQ e4g = eisenstein_series(4, 10, 24);
    SeriesQ e6g = eisenstein_series(6, 10, 24);
    SeriesQ delta = delta_series(10);
    SeriesQ resid = e4g.pow(3) - e6g.pow(2) - delta.scaled(rat(1728));
    CHECK(resid.known_zero());
    SeriesAgreement agree = compare_series(e4g.pow(3) - e6g.pow(2), delta.scaled(rat(1728)));
    CHECK(agree.equal);
    CHECK(agree.verified_q_order >= 10);

    CHECK_THROWS_AS(eisenstein_series(8, 10), std::invalid_argument);
}

TEST_CASE("evaluating forms at the theta point") {
    FormSystem fs;
    std::array<SeriesQ, 6> a;
    for (int i = 1; i <= 6; ++i) a[i - 1] = theta13_series(i, 6, kGrid13);
    std::span<const SeriesQ> pt(a.data(), 6);

    // leading terms of the three catalog tables
    struct Lead {
        long num, den;
        long coeff;
    };
    const Lead leadA[7] = {{1, 4, 1}, {17, 52, 2}, {29, 52, 2}, {49, 52, 1},
                           {25, 52, -1}, {9, 52, -1}, {1, 52, -1}};
    for (int j = 0; j < 7; ++j) {
        SeriesQ s = eval_form_at_series(fs.catalogs().A[j], pt);
        CHECK(s.ord() * leadA[j].den == leadA[j].num * kGrid13);
        CHECK(s.coeff(s.ord()) == rat(leadA[j].coeff));
    }
    const Lead leadD[14] = {{15, 8, 1},  {99, 104, 2},  {3, 104, -1}, {11, 104, 1},
                            {19, 104, -2}, {27, 104, -1}, {35, 104, -1}, {43, 104, 1},
                            {51, 104, 3},  {59, 104, -2}, {67, 104, 1},  {75, 104, -4},
                            {83, 104, -1}, {7, 8, -1}};
    for (int j = 0; j < 14; ++j) {
        SeriesQ s = eval_form_at_series(fs.catalogs().D[j], pt);
        CHECK(s.ord() * leadD[j].den == leadD[j].num * kGrid13);
        CHECK(s.coeff(s.ord()) == rat(leadD[j].coeff));
    }
    const Lead leadG[13] = {{7, 4, 1},   {43, 52, 13}, {47, 52, -22}, {51, 52, -21},
                            {3, 52, -1}, {7, 52, 2},   {11, 52, 2},   {15, 52, -2},
                            {19, 52, -8}, {23, 52, 6},  {27, 52, 1},   {31, 52, -8},
                            {35, 52, 17}};
    for (int j = 0; j < 13; ++j) {
        SeriesQ s = eval_form_at_series(fs.catalogs().G[j], pt);
        CHECK(s.ord() * leadG[j].den == leadG[j].num * kGrid13);
        CHECK(s.coeff(s.ord()) == rat(leadG[j].coeff));
    }

    // A0^2 + 2(A1 A5 + A2 A3 + A4 A6) = q^(1/2)(-1 + ...)
    const auto& A = fs.catalogs().A;
    PolyQ combo = A[0] * A[0] + (A[1] * A[5] + A[2] * A[3] + A[4] * A[6]).scaled(rat(2));
    SeriesQ s = eval_form_at_series(combo, pt);
    CHECK(s.ord() == kGrid13 / 2);
    CHECK(s.coeff(s.ord()) == rat(-1));

    // eta-power scaling requires homogeneity
    PolyQ inhom = A[0] + fs.catalogs().D[0];
    CHECK_THROWS_AS(eval_form_at_series(inhom, pt, 2), std::invalid_argument);
}

TEST_CASE("translation twist operator") {
    // constant series are fixed
    SeriesC c = SeriesC::from_terms(104, 104 * 4, {{0, Cyclotomic::one(104)}});
    CHECK(shift_z_plus_1(c) == c);

    // each theta component is an eigenvector: shift = zeta104^(65 + 8 t_i)
    const int tpow[6] = {7, 11, 8, 6, 2, 5};
    for (int i = 1; i <= 6; ++i) {
        SeriesQ aq = theta13_series(i, 10);
        std::vector<SeriesC::Term> ts;
        for (const auto& [k, cc] : aq.terms())
            ts.emplace_back(k, Cyclotomic::constant(104, cc));
        SeriesC a = SeriesC::from_terms(104, aq.trunc(), std::move(ts));
        SeriesC shifted = shift_z_plus_1(a);
        Cyclotomic mult = Cyclotomic::zeta(104, 65 + 8 * tpow[i - 1]);
        CHECK(compare_series(shifted, a.scaled(mult)).equal);

        // 104 applications give the identity
        SeriesC round = a;
        for (int k = 0; k < 104; ++k) round = shift_z_plus_1(round);
        CHECK(compare_series(round, a).equal);
    }

    SeriesC bad = SeriesC::from_terms(48, 48, {{1, Cyclotomic::one(104)}});
    CHECK_THROWS_AS(shift_z_plus_1(bad), std::invalid_argument);
}
