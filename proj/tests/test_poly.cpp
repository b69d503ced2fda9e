#include <doctest.h>

#include <random>

#include "psl213/forms.hpp"
#include "psl213/group13.hpp"
#include "psl213/poly.hpp"

using namespace psl213;

namespace {

// random polynomial whose monomials have total degree exactly `deg`
PolyQ random_poly(std::mt19937_64& rng, int nvars, int deg, int nterms) {
    std::uniform_int_distribution<int> coef(-6, 6);
    std::uniform_int_distribution<int> var(0, nvars - 1);
    std::vector<PolyQ::Term> ts;
    for (int t = 0; t < nterms; ++t) {
        Monomial m;
        for (int d = 0; d < deg; ++d) {
            int i = var(rng);
            m.e[i] = static_cast<std::uint8_t>(m.e[i] + 1);
        }
        ts.emplace_back(m, rat(coef(rng)));
    }
    return PolyQ::from_terms(nvars, std::move(ts));
}

}  // namespace

TEST_CASE("ring basics") {
    PolyQ z1 = PolyQ::variable(6, 0, rat(1));
    PolyQ z2 = PolyQ::variable(6, 1, rat(1));
    PolyQ p = (z1 + z2).pow(3);
    CHECK(p.term_count() == 4);
    Monomial m;
    m.e[0] = 2;
    m.e[1] = 1;
    CHECK(p.coeff(m) == rat(3));

    PolyQ zero = PolyQ::zero(6);
    CHECK((p * zero).is_zero());

    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        PolyQ a = random_poly(rng, 6, 2, 4), b = random_poly(rng, 6, 2, 4), c = random_poly(rng, 6, 2, 4);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("square of the diagonal quadratic") {
    Catalogs cat = build_catalogs();
    PolyQ sq = cat.A[0] * cat.A[0];
    CHECK(sq.term_count() == 6);
    CHECK(sq.degree() == 4);
    int cross = 0, square = 0;
    for (const auto& [m, c] : sq.terms()) {
        if (c == rat(2)) ++cross;
        if (c == rat(1)) ++square;
    }
    CHECK(cross == 3);
    CHECK(square == 3);
}

TEST_CASE("composition with the identity and with group elements") {
    FormSystem fs;
    CycloMatrix I = CycloMatrix::identity(6, 13);
    PolyC a0 = lift_to_cyclotomic(fs.catalogs().A[0], 13);
    CHECK(fs.compose_with(fs.catalogs().A[0], I) == a0);

    // the diagonal generator fixes the quadratic z1 z4 + z2 z5 + z3 z6
    CHECK(fs.compose_with(fs.catalogs().A[0], fs.T()) == a0);

    // chained composition composes the matrices on the right
    std::mt19937_64 rng(17);
    CycloMatrix M = fs.S() * fs.T().pow(4);
    CycloMatrix N = fs.T().pow(9) * fs.S();
    for (int t = 0; t < 3; ++t) {
        PolyQ p = random_poly(rng, 6, 2, 4);
        PolyC once = fs.compose_with(p, M * N);
        PolyC lifted = lift_to_cyclotomic(p, 13);
        std::vector<PolyC> imagesM, imagesN;
        for (int i = 0; i < 6; ++i) {
            std::vector<PolyC::Term> tm, tn;
            for (int j = 0; j < 6; ++j) {
                tm.emplace_back(Monomial::unit(j), M.at(i, j));
                tn.emplace_back(Monomial::unit(j), N.at(i, j));
            }
            imagesM.push_back(PolyC::from_terms(6, std::move(tm)));
            imagesN.push_back(PolyC::from_terms(6, std::move(tn)));
        }
        PolyC inner = lifted.compose_linear(imagesM);
        PolyC twice = inner.compose_linear(imagesN);
        CHECK(twice == once);
    }
}

TEST_CASE("homogeneity bookkeeping") {
    FormSystem fs;
    for (const auto& p : fs.catalogs().A) {
        int d = 0;
        CHECK(p.is_homogeneous(&d));
        CHECK(d == 2);
    }
    for (const auto& p : fs.catalogs().D) {
        int d = 0;
        CHECK(p.is_homogeneous(&d));
        CHECK(d == 3);
    }
    for (const auto& p : fs.catalogs().G) {
        int d = 0;
        CHECK(p.is_homogeneous(&d));
        CHECK(d == 6);
    }
    // composition preserves degree
    PolyC composed = fs.compose_with(fs.catalogs().G[0], fs.S());
    int d = 0;
    CHECK(composed.is_homogeneous(&d));
    CHECK(d == 6);
}

TEST_CASE("power_sum and elementary_symmetric basics") {
    FormSystem fs;
    std::vector<PolyC> deltas = fs.delta_catalog();
    std::span<const PolyC> dspan(deltas.data(), deltas.size());

    PolyC e1 = elementary_symmetric(dspan, 1);
    CHECK(e1.is_zero());
    PolyC p1 = power_sum(dspan, 1);
    CHECK(p1.is_zero());

    std::vector<PolyC> single{deltas[2]};
    CHECK(power_sum(std::span<const PolyC>(single.data(), 1), 1) == deltas[2]);
    CHECK(elementary_symmetric(std::span<const PolyC>(single.data(), 1), 1) == deltas[2]);

    CHECK_THROWS_AS(elementary_symmetric(dspan, 15), std::invalid_argument);
    CHECK_THROWS_AS(power_sum(std::span<const PolyC>{}, 1), std::invalid_argument);
}

TEST_CASE("newton identities connect power sums and elementary symmetric functions") {
    // generic property over F_p with random small forms
    ScopedFpModulus guard(kDefaultTestPrime);
    std::mt19937_64 rng(123);
    std::vector<PolyFp> forms;
    for (int i = 0; i < 5; ++i) forms.push_back(project_to_fp(random_poly(rng, 3, 2, 3)));
    std::span<const PolyFp> fspan(forms.data(), forms.size());
    std::vector<PolyFp> e{PolyFp::zero(3)};  // e[0] unused
    std::vector<PolyFp> p{PolyFp::zero(3)};
    for (unsigned k = 1; k <= 4; ++k) {
        e.push_back(elementary_symmetric(fspan, k));
        p.push_back(power_sum(fspan, k));
    }
    auto scale = [](const PolyFp& q, long c) { return q.scaled(Fp64::from_int(c)); };
    CHECK(p[1] == e[1]);
    CHECK(p[2] == e[1] * p[1] - scale(e[2], 2));
    CHECK(p[3] == e[1] * p[2] - e[2] * p[1] + scale(e[3], 3));
    CHECK(p[4] == e[1] * p[3] - e[2] * p[2] + e[3] * p[1] - scale(e[4], 4));
}

TEST_CASE("newton identities for the degree-14 exotic roots over F_p") {
    ScopedFpModulus guard(kDefaultTestPrime);
    FormSystem fs;
    CycloToFp img(13);
    std::vector<PolyFp> deltas;
    for (const auto& d : fs.delta_catalog()) deltas.push_back(project_to_fp(d, img));
    std::span<const PolyFp> dspan(deltas.data(), deltas.size());

    std::vector<PolyFp> e{PolyFp::zero(6)}, p{PolyFp::zero(6)};
    for (unsigned k = 1; k <= 4; ++k) {
        e.push_back(elementary_symmetric(dspan, k));
        p.push_back(power_sum(dspan, k));
    }
    CHECK(e[1].is_zero());
    auto scale = [](const PolyFp& q, long c) { return q.scaled(Fp64::from_int(c)); };
    CHECK(p[2] == e[1] * p[1] - scale(e[2], 2));
    CHECK(p[3] == e[1] * p[2] - e[2] * p[1] + scale(e[3], 3));
    CHECK(p[4] == e[1] * p[3] - e[2] * p[2] + e[3] * p[1] - scale(e[4], 4));

    // e2 = 338 * Phi12 (the normalization constant of the degree-12 invariant)
    PolyQ phi12 = expand_capital_phi(fs, 12);
    CHECK(e[2] == project_to_fp(phi12).scaled(Fp64::from_int(338)));
}

TEST_CASE("evaluation") {
    FormSystem fs;
    std::vector<Rational> ones(6, rat(1));
    CHECK(fs.catalogs().A[0].eval(std::span<const Rational>(ones.data(), 6)) == rat(3));

    // 169 (z1^2 z2^2 z3^2 + z4^2 z5^2 z6^2) at (1,1,1,0,0,0)
    PolyQ dinf_sq = fs.catalogs().D[0] * fs.catalogs().D[0] +
                    fs.catalogs().D[13] * fs.catalogs().D[13];
    std::vector<Rational> pt{rat(1), rat(1), rat(1), rat(0), rat(0), rat(0)};
    CHECK(dinf_sq.scaled(rat(169)).eval(std::span<const Rational>(pt.data(), 6)) == rat(169));

    CHECK_THROWS_AS(fs.catalogs().A[0].eval(std::span<const Rational>(pt.data(), 3)),
                    std::invalid_argument);
}

TEST_CASE("expanded degree-12 invariant matches direct evaluation at points") {
    ScopedFpModulus guard(kDefaultTestPrime);
    FormSystem fs;
    PolyQ phi12 = expand_capital_phi(fs, 12);
    CHECK(phi12.degree() == 12);
    int d = 0;
    CHECK(phi12.is_homogeneous(&d));
    CHECK(d == 12);

    FpFormEvaluator ev(fs);
    PolyFp phi12_p = project_to_fp(phi12);
    PowerSumForm form = capital_phi_form(12);
    PointSource pts(2024);
    for (int t = 0; t < 8; ++t) {
        std::vector<Fp64> v = pts.next_point(6);
        Fp64 via_roots = ev.capital_phi_value(form, v);
        Fp64 via_poly = phi12_p.eval(std::span<const Fp64>(v.data(), 6));
        CHECK(via_roots == via_poly);
    }
}

TEST_CASE("power sum form degrees") {
    for (int d : {12, 18, 20, 30, 32, 42, 44}) {
        PowerSumForm f = capital_phi_form(d);
        int root_degree = f.family == RootFamily::Jacobian ? 4 : 6;
        CHECK(static_cast<int>(f.exponent) * root_degree == d);
        CHECK(f.degree == d);
    }
    CHECK(capital_phi_expandable(12));
    CHECK_FALSE(capital_phi_expandable(44));
    CHECK_THROWS_AS(capital_phi_form(16), std::invalid_argument);
}

TEST_CASE("parse round trip") {
    PolyQ d8 = parse_poly(6, "-z1^3 + z2 z6^2 - z2 z3 z5 - 3 z1 z3 z4 + 2 z3^2 z6");
    CHECK(d8.term_count() == 5);
    Monomial cube;
    cube.e[0] = 3;
    CHECK(d8.coeff(cube) == rat(-1));
    CHECK_THROWS_AS(parse_poly(2, "z3 + 1z"), std::invalid_argument);
}
