#include <doctest.h>
#include <cmath>

#include "psl213/embedding.hpp"
#include "psl213/forms.hpp"
#include "psl213/group13.hpp"

using namespace psl213;

namespace {

Cyclotomic zc(long e) { return Cyclotomic::zeta(13, e); }

PolyC twisted_A_combo(const FormSystem& fs, int nu) {
    PolyC acc = PolyC::zero(6);
    for (int j = 0; j < 7; ++j)
        acc = acc + lift_to_cyclotomic(fs.catalogs().A[j], 13).scaled(zc(kAPattern[j] * nu));
    return acc;
}

}  // namespace

TEST_CASE("catalog transcription spot checks") {
    Catalogs cat = build_catalogs();
    CHECK(cat.A.size() == 7);
    CHECK(cat.D.size() == 14);
    CHECK(cat.G.size() == 13);
    CHECK(cat.A[1] == parse_poly(6, "z1^2 - 2 z3 z4"));
    CHECK(cat.D[8] == parse_poly(6, "-z1^3 + z2 z6^2 - z2 z3 z5 - 3 z1 z3 z4 + 2 z3^2 z6"));
    // G0 = D0^2 + Dinf^2
    CHECK(cat.G[0] == parse_poly(6, "z1^2 z2^2 z3^2 + z4^2 z5^2 z6^2"));
}

TEST_CASE("quadratic transformation law for every twist") {
    FormSystem fs;
    for (int nu = 0; nu < 13; ++nu) {
        PolyC lhs = fs.compose_with(fs.catalogs().A[0], fs.ST_pow(nu)).scaled(sqrt13());
        CHECK(lhs == twisted_A_combo(fs, nu));
    }
}

TEST_CASE("corrupting one quadratic sign breaks the law at every twist") {
    FormSystem fs;
    // flip the sign of A3 inside the twisted combination
    for (int nu = 0; nu < 13; ++nu) {
        PolyC lhs = fs.compose_with(fs.catalogs().A[0], fs.ST_pow(nu)).scaled(sqrt13());
        PolyC rhs = PolyC::zero(6);
        for (int j = 0; j < 7; ++j) {
            Cyclotomic c = zc(kAPattern[j] * nu);
            if (j == 3) c = -c;
            rhs = rhs + lift_to_cyclotomic(fs.catalogs().A[j], 13).scaled(c);
        }
        CHECK(lhs != rhs);
    }
}

TEST_CASE("dual construction of the quadratic and sextic root families") {
    FormSystem fs;
    for (int nu = 0; nu < 13; ++nu) {
        CHECK(fs.phi_composed(nu) == fs.phi_twisted(nu));
        CHECK(fs.delta_composed(nu) == fs.delta_twisted(nu));
    }
    // w_infinity = 13 A0^2
    PolyC winf = fs.w_form(kInfinityIndex);
    PolyC a0 = lift_to_cyclotomic(fs.catalogs().A[0], 13);
    CHECK(winf == (a0 * a0).scaled(rat(13)));
}

TEST_CASE("the fourteen exotic roots sum to zero") {
    FormSystem fs;
    PolyC total = PolyC::zero(6);
    for (int i = 0; i < 14; ++i) total = total + fs.delta_twisted(i);
    CHECK(total.is_zero());

    // omitting the infinite root leaves its negative
    PolyC partial = PolyC::zero(6);
    for (int i = 0; i < 13; ++i) partial = partial + fs.delta_twisted(i);
    CHECK(partial == -fs.delta_twisted(kInfinityIndex));

    // the jacobian-family analogue does not vanish
    PolyC wtotal = PolyC::zero(6);
    for (int i = 0; i < 14; ++i) wtotal = wtotal + fs.w_form(i);
    CHECK_FALSE(wtotal.is_zero());
}

TEST_CASE("cubic-law constants") {
    FormSystem fs;
    RConstants r = derive_r_constants(fs);
    PeriodSet th = periods();

    Cyclotomic exp_r0 = (th.theta1 - th.theta3).scaled(rat(2)) - (th.theta2 - th.theta4).scaled(rat(3));
    Cyclotomic exp_rinf = (th.theta4 - th.theta2).scaled(rat(2)) - (th.theta1 - th.theta3).scaled(rat(3));
    CHECK(r.r0 == exp_r0);
    CHECK(r.rinf == exp_rinf);

    Cyclotomic m13 = Cyclotomic::constant(13, rat(-13));
    CHECK(r.r1 * r.r1 == m13 - sqrt13().scaled(rat(2)));
    CHECK(r.r2 * r.r2 == (m13 + sqrt13().scaled(rat(3))).scaled(rat(1, 2)));
    CHECK(r.r3 * r.r3 == m13 + sqrt13().scaled(rat(2)));
    CHECK(r.r4 * r.r4 == (m13 - sqrt13().scaled(rat(3))).scaled(rat(1, 2)));

    // principal branches: +i times a positive real
    const double s13 = 3.605551275463989;
    auto check_branch = [&](const Cyclotomic& v, double inner) {
        ComplexApprox e = embed(v);
        CHECK(std::abs(e.re.to_double()) < 1e-12);
        CHECK(std::abs(e.im.to_double() - std::sqrt(inner)) < 1e-12);
    };
    check_branch(r.r1, 13 + 2 * s13);
    check_branch(r.r2, (13 - 3 * s13) / 2);
    check_branch(r.r3, 13 - 2 * s13);
    check_branch(r.r4, (13 + 3 * s13) / 2);
}

TEST_CASE("both cubic transformation laws hold for every twist") {
    FormSystem fs;
    RConstants r = derive_r_constants(fs);
    Cyclotomic scale = sqrt13().scaled(rat(-13));
    const auto& D = fs.catalogs().D;

    auto rhs_for = [&](const CubicLawPattern& pat, int nu) {
        PolyC acc = lift_to_cyclotomic(D[0], 13).scaled(pat.lead);
        const Cyclotomic* rs[5] = {nullptr, &r.r1, &r.r2, &r.r3, &r.r4};
        for (int j = 1; j <= 12; ++j) {
            Cyclotomic c = *rs[pat.which[j - 1]] * zc(j * nu);
            if (pat.sign[j - 1] < 0) c = -c;
            acc = acc + lift_to_cyclotomic(D[j], 13).scaled(c);
        }
        return acc + lift_to_cyclotomic(D[13], 13).scaled(pat.tail);
    };

    CubicLawPattern p0 = d0_law_pattern(r);
    CubicLawPattern pinf = dinf_law_pattern(r);
    for (int nu = 0; nu < 13; ++nu) {
        PolyC lhs0 = fs.compose_with(D[0], fs.ST_pow(nu)).scaled(scale);
        CHECK(lhs0 == rhs_for(p0, nu));
        PolyC lhsI = fs.compose_with(D[13], fs.ST_pow(nu)).scaled(scale);
        CHECK(lhsI == rhs_for(pinf, nu));
    }
}

TEST_CASE("sextic law and stabilizer invariances") {
    FormSystem fs;
    // 169 * (G0 o S T^nu) = -13 G0 + sum zeta^(j nu) G_j  (equality of both
    // constructions checked in the dual-construction case above)
    PolyC g0 = lift_to_cyclotomic(fs.catalogs().G[0], 13);
    CycloMatrix H = h_signed_permutation();
    CHECK(fs.compose_with(fs.catalogs().G[0], H) == g0);
    CHECK(fs.compose_with(fs.catalogs().G[0], fs.T()) == g0);

    PolyQ phiinf2 = fs.catalogs().A[0] * fs.catalogs().A[0];  // phi_inf^2 / 13
    PolyC p2 = lift_to_cyclotomic(phiinf2, 13);
    CHECK(fs.compose_with(phiinf2, H) == p2);
    CHECK(fs.compose_with(phiinf2, fs.T()) == p2);
}

TEST_CASE("signed permutation action on the quadratic roots") {
    FormSystem fs;

    SignedPerm idp = phi_action_perm(fs, CycloMatrix::identity(6, 13));
    REQUIRE(idp.total);
    for (int i = 0; i < 14; ++i) {
        CHECK(idp.target[i] == i);
        CHECK(idp.sign[i] == 1);
    }

    SignedPerm pT = phi_action_perm(fs, fs.T());
    REQUIRE(pT.total);
    CHECK(pT.target[kInfinityIndex] == kInfinityIndex);
    for (int nu = 0; nu < 13; ++nu) {
        CHECK(pT.target[nu] == (nu + 1) % 13);
        CHECK(pT.sign[nu] == 1);
    }

    SignedPerm pS = phi_action_perm(fs, fs.S());
    REQUIRE(pS.total);
    // involution on the 14 indices
    for (int i = 0; i < 14; ++i) CHECK(pS.target[pS.target[i]] == i);
    CHECK(pS.target[0] == kInfinityIndex);
    CHECK(pS.target[kInfinityIndex] == 0);

    SignedPerm dT = delta_action_perm(fs, fs.T());
    REQUIRE(dT.total);
    CHECK(dT.target[kInfinityIndex] == kInfinityIndex);
    for (int nu = 0; nu < 13; ++nu) CHECK(dT.target[nu] == (nu + 1) % 13);

    SignedPerm dS = delta_action_perm(fs, fs.S());
    REQUIRE(dS.total);
    for (int i = 0; i < 14; ++i) {
        CHECK(dS.target[dS.target[i]] == i);
        CHECK(dS.sign[i] == 1);
        // the quadratic and sextic root families carry the same index action
        CHECK(dS.target[i] == pS.target[i]);
    }
}

TEST_CASE("invariant evaluation through the group action over F_p") {
    ScopedFpModulus guard(kDefaultTestPrime);
    FormSystem fs;
    FpFormEvaluator ev(fs);
    PointSource pts(7331);
    for (int d : {12, 18, 20, 30, 32, 42, 44}) {
        PowerSumForm f = capital_phi_form(d);
        for (int trial = 0; trial < 2; ++trial) {
            std::vector<Fp64> v = pts.next_point(6);
            Fp64 base = ev.capital_phi_value(f, v);
            std::vector<Fp64> sv = ev.apply_S(v);
            std::vector<Fp64> tv = ev.apply_T(v);
            CHECK(ev.capital_phi_value(f, sv) == base);
            CHECK(ev.capital_phi_value(f, tv) == base);
        }
    }
}

TEST_CASE("the singularity relations do not hold off the theta locus") {
    // the degree-14 root identities are not polynomial identities in z:
    // at a generic point the combination is nonzero
    ScopedFpModulus guard(kDefaultTestPrime);
    FormSystem fs;
    FpFormEvaluator ev(fs);
    PointSource pts(99);
    std::vector<Fp64> v = pts.next_point(6);
    Fp64 p12 = ev.capital_phi_value(capital_phi_form(12), v);
    Fp64 p20 = ev.capital_phi_value(capital_phi_form(20), v);
    Fp64 p30 = ev.capital_phi_value(capital_phi_form(30), v);
    Fp64 lhs = p20.pow(3) - p30.pow(2) - Fp64::from_int(1728) * p12.pow(5);
    CHECK_FALSE(lhs.is_zero());
}

TEST_CASE("mutation of the cubic table is caught") {
    // three prescribed single-sign corruptions
    Monomial m1;  // 3 z3 z5 z6 inside the second cubic
    m1.e[2] = 1; m1.e[4] = 1; m1.e[5] = 1;
    Monomial m2;  // -3 z1 z3 z4 inside the eighth cubic
    m2.e[0] = 1; m2.e[2] = 1; m2.e[3] = 1;
    Monomial m3;  // z1 z2 z3, the ground cubic
    m3.e[0] = 1; m3.e[1] = 1; m3.e[2] = 1;

    SUBCASE("sign flip in D2 breaks the dual construction") {
        FormSystem fs(DTableMutation{2, m1});
        bool all_match = true;
        for (int nu = 0; nu < 13 && all_match; ++nu)
            all_match = fs.delta_composed(nu) == fs.delta_twisted(nu);
        CHECK_FALSE(all_match);
    }
    SUBCASE("sign flip in D8 breaks the dual construction") {
        FormSystem fs(DTableMutation{8, m2});
        bool all_match = true;
        for (int nu = 0; nu < 13 && all_match; ++nu)
            all_match = fs.delta_composed(nu) == fs.delta_twisted(nu);
        CHECK_FALSE(all_match);
    }
    SUBCASE("sign flip in D0 breaks the cubic law constants") {
        FormSystem fs(DTableMutation{0, m3});
        RConstants r = derive_r_constants(fs);
        PeriodSet th = periods();
        Cyclotomic exp_rinf =
            (th.theta4 - th.theta2).scaled(rat(2)) - (th.theta1 - th.theta3).scaled(rat(3));
        CHECK(r.rinf != exp_rinf);
    }
    SUBCASE("mutation of an absent monomial is rejected") {
        Monomial bogus;
        bogus.e[0] = 3;
        CHECK_THROWS_AS(FormSystem fs((DTableMutation{1, bogus})), std::invalid_argument);
    }
}
