#include <doctest.h>

#include "psl213/icosahedral.hpp"
#include "psl213/qmodular.hpp"

using namespace psl213;

namespace {

// shared across cases in this file; building the theta point once keeps the
// suite quick
const ModularData& modular_data() {
    static ModularData md(12);
    return md;
}

}  // namespace

TEST_CASE("unnormalized leading coefficients at the stated weight levels") {
    const ModularData& md = modular_data();
    struct Claim {
        int degree;
        int level;  // 1 = weight-one point, 3 = weight-two point
        long q_order;
        long coeff;
    };
    const Claim claims[] = {
        {12, 1, 1, -13 * 52},    {18, 1, 1, 13 * 6},      {20, 3, 3, 13 * 25},
        {30, 1, 2, -13 * 1315},  {32, 3, 5, -13 * 1840},  {42, 1, 3, 13 * 226842},
        {44, 3, 7, 13 * 146905},
    };
    for (const auto& c : claims) {
        SeriesQ s = md.capital_phi_unnormalized(c.degree, c.level);
        CHECK(s.ord() == c.q_order * md.grid());
        CHECK(s.coeff(s.ord()) == rat(c.coeff));
    }
}

TEST_CASE("the seven modular identifications through the working order") {
    const ModularData& md = modular_data();
    const SeriesQ& e4 = md.e4();
    const SeriesQ& e6 = md.e6();
    const SeriesQ& d = md.discriminant();
    SeriesQ eta8 = md.eta_power(8);

    struct Ident {
        int degree;
        SeriesQ rhs;
    };
    const Ident idents[] = {
        {12, d},
        {18, d * e6},
        {20, eta8 * d * e4},
        {30, d.pow(2) * e6},
        {32, eta8 * d.pow(2) * e4},
        {42, d.pow(3) * e6},
        {44, eta8 * d.pow(3) * e4},
    };
    for (const auto& id : idents) {
        SeriesAgreement agree = compare_series(md.capital_phi_x(id.degree), id.rhs);
        CHECK(agree.equal);
        CHECK(agree.verified_q_order >= 12);
    }
}

TEST_CASE("grid soundness of the weighted theta point") {
    const ModularData& md = modular_data();
    // x-level invariants of the exotic family are integral series; the
    // jacobian-family ones live on the eta^8 class (exponents = 1/3 mod 1)
    SeriesQ p12 = md.capital_phi_x(12);
    for (const auto& [k, c] : p12.terms()) CHECK(k % md.grid() == 0);
    SeriesQ p20 = md.capital_phi_x(20);
    for (const auto& [k, c] : p20.terms()) CHECK(k % md.grid() == md.grid() / 3);
}

TEST_CASE("singularity relations at the theta point") {
    const ModularData& md = modular_data();
    SeriesQ p12 = md.capital_phi_x(12);
    SeriesQ p18 = md.capital_phi_x(18);
    SeriesQ p20 = md.capital_phi_x(20);
    SeriesQ p30 = md.capital_phi_x(30);
    SeriesQ p32 = md.capital_phi_x(32);
    SeriesQ p42 = md.capital_phi_x(42);
    SeriesQ p44 = md.capital_phi_x(44);
    auto k1728 = [](const SeriesQ& s) { return s.scaled(rat(1728)); };

    std::vector<std::pair<SeriesQ, SeriesQ>> rels = {
        {p20.pow(3) - p30.pow(2), k1728(p12.pow(5))},
        {p20.pow(3) - p12.pow(2) * p18.pow(2), k1728(p12.pow(5))},
        {p20.pow(3) * p12.pow(2) - p42.pow(2), k1728(p12.pow(7))},
        {p32.pow(3) - p12.pow(5) * p18.pow(2), k1728(p12.pow(8))},
        {p32.pow(3) - p12.pow(3) * p30.pow(2), k1728(p12.pow(8))},
        {p32.pow(3) - p12 * p42.pow(2), k1728(p12.pow(8))},
        {p44.pow(3) - p12.pow(8) * p18.pow(2), k1728(p12.pow(11))},
        {p44.pow(3) - p12.pow(6) * p30.pow(2), k1728(p12.pow(11))},
        {p44.pow(3) - p12.pow(4) * p42.pow(2), k1728(p12.pow(11))},
    };
    for (const auto& [lhs, rhs] : rels) {
        SeriesAgreement agree = compare_series(lhs, rhs);
        CHECK(agree.equal);
        CHECK(agree.verified_q_order >= 12);
    }
}

TEST_CASE("icosahedral covariants") {
    PolyQ f = icosa_f();
    PolyQ h = icosa_hessian(f);
    PolyQ t = icosa_jacobian_cov(f, h);
    CHECK(h == icosa_hessian_expected());
    CHECK(t == icosa_jacobian_expected());
    Monomial m255;
    m255.e[0] = 25;
    m255.e[1] = 5;
    CHECK(t.coeff(m255) == rat(522));
    CHECK(icosa_syzygy_residual(f, h, t).is_zero());
}

TEST_CASE("icosahedral modular identifications") {
    IcosaModularData md(12);
    PolyQ f = icosa_f();
    PolyQ h = icosa_hessian(f);
    PolyQ t = icosa_jacobian_cov(f, h);

    SeriesQ fx = md.at_weighted_point(f);
    SeriesQ hx = md.at_weighted_point(h);
    SeriesQ tx = md.at_weighted_point(t);

    SeriesAgreement af = compare_series(fx, -md.discriminant());
    CHECK(af.equal);
    CHECK(af.verified_q_order >= 12);
    SeriesAgreement ah =
        compare_series(hx, -(md.eta_power(8) * md.discriminant() * md.e4()));
    CHECK(ah.equal);
    CHECK(ah.verified_q_order >= 12);
    SeriesAgreement at = compare_series(tx, md.discriminant().pow(2) * md.e6());
    CHECK(at.equal);
    CHECK(at.verified_q_order >= 12);
}

TEST_CASE("accuracy floor") {
    CHECK_THROWS_AS(ModularData(1), std::invalid_argument);
}
