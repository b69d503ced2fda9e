#include "psl213/suites.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "psl213/forms.hpp"
#include "psl213/group13.hpp"
#include "psl213/icosahedral.hpp"
#include "psl213/qmodular.hpp"
#include "psl213/theta_numeric.hpp"

namespace psl213 {

namespace {

class SuiteBuilder {
public:
    explicit SuiteBuilder(std::string suite, const RunConfig& cfg) {
        report_.suite = std::move(suite);
        report_.config = cfg;
    }

    void add(const std::string& id, const std::function<CheckResult()>& body) {
        auto t0 = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = body();
        } catch (const std::exception& e) {
            r.status = CheckStatus::Fail;
            r.detail = std::string("exception: ") + e.what();
        }
        r.check_id = id;
        r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
        report_.results.push_back(std::move(r));
    }

    VerificationReport finish() {
        report_.sort_canonical();
        return std::move(report_);
    }

private:
    VerificationReport report_;
};

CheckResult pass(std::string detail, std::optional<long> order = std::nullopt) {
    return CheckResult{"", CheckStatus::Pass, std::move(detail), order, 0};
}
CheckResult fail(std::string detail) {
    return CheckResult{"", CheckStatus::Fail, std::move(detail), std::nullopt, 0};
}
CheckResult reported(std::string detail) {
    return CheckResult{"", CheckStatus::Reported, std::move(detail), std::nullopt, 0};
}
CheckResult verdict(bool ok, std::string okd, std::string badd,
                    std::optional<long> order = std::nullopt) {
    return ok ? pass(std::move(okd), order) : fail(std::move(badd));
}

std::string scalar_str(const std::optional<Cyclotomic>& c) {
    if (!c) return "non-scalar";
    return c->to_string();
}

}  // namespace

// ---------------------------------------------------------------------------
// group
// ---------------------------------------------------------------------------

VerificationReport run_group_suite(const RunConfig& cfg) {
    SuiteBuilder b("group", cfg);

    b.add("eq-3.3-relations", [&] {
        RelationsResult r = relations_check();
        std::ostringstream d;
        d << "S^2 = " << scalar_str(r.s_squared) << " * I, T^13 = " << scalar_str(r.t_pow13)
          << " * I, (ST)^3 = " << scalar_str(r.st_cubed)
          << " * I; relations hold in PGL(6) with scalars in {+1,-1}";
        return verdict(r.projectively_trivial(), d.str(),
                       "defining relations fail even projectively: " + d.str());
    });

    CycloMatrix S = gen_S(), T = gen_T();
    MatrixGroup g = closure(std::vector<CycloMatrix>{S, T}, cfg.closure_bound);

    b.add("grp-order-1092", [&] {
        if (g.bound_exceeded)
            return fail("closure exceeded the configured bound " +
                        std::to_string(cfg.closure_bound));
        std::ostringstream d;
        d << "projective order " << g.projective_order << "; strict matrix order " << g.order
          << " = 2 x 1092 (contains -I); consistent with a simple group of order 1092";
        return verdict(g.projective_order == 1092 && g.order == 2184 && g.contains_minus_identity,
                       d.str(), "unexpected closure sizes: " + d.str());
    });

    b.add("grp-subgroup-78", [&] {
        MatrixGroup sub =
            closure(std::vector<CycloMatrix>{h_signed_permutation(), T}, cfg.closure_bound);
        std::ostringstream d;
        d << "projective order " << sub.projective_order << "; strict matrix order " << sub.order
          << "; index 14 in the projective group";
        return verdict(sub.projective_order == 78 && sub.order == 156, d.str(),
                       "unexpected subgroup sizes: " + d.str());
    });

    CycloMatrix H = build_H_word();
    b.add("eq-3.9-h-word", [&] {
        bool neg = H == -h_signed_permutation();
        bool proj = H.projective_rep() == h_signed_permutation();
        return verdict(neg && proj,
                       "the word in P and Q evaluates to the negative of the displayed signed "
                       "permutation; its projective representative matches the display exactly",
                       "word does not reproduce the displayed matrix up to sign");
    });

    b.add("grp-h-order", [&] {
        CycloMatrix I = CycloMatrix::identity(6, 13);
        bool six = H.pow(6) == -I;
        bool twelve = H.pow(12) == I;
        return verdict(six && twelve,
                       "H^6 = -I (the projective identity); strict matrix order 12",
                       "unexpected order of H");
    });

    b.add("grp-h-conjugation", [&] {
        CycloMatrix T4 = T.pow(4);
        bool displayed = H.pow(5) * T * H == -T4;  // H^5 is the projective inverse
        bool strict = H.inverse() * T * H == T4;
        return verdict(displayed && strict,
                       "H^5 T H = -T^4 entrywise and H^-1 T H = T^4; the conjugation exponent 4 "
                       "has order 6 mod 13",
                       "conjugation law failed");
    });

    if (cfg.cache_path) {
        if (!g.bound_exceeded) save_group_cache(*cfg.cache_path, g);
    }
    return b.finish();
}

// ---------------------------------------------------------------------------
// forms
// ---------------------------------------------------------------------------

VerificationReport run_forms_suite(const RunConfig& cfg,
                                   const std::optional<DTableMutation>& mutation) {
    SuiteBuilder b("forms", cfg);
    FormSystem fs(mutation);

    b.add("eq-3.6-phi-dual", [&] {
        for (int nu = 0; nu < 13; ++nu)
            if (fs.phi_composed(nu) != fs.phi_twisted(nu))
                return fail("twist " + std::to_string(nu) + " disagrees");
        return pass("composition route equals the zeta-twisted combination for all 13 twists");
    });

    b.add("eq-1.2-w-forms", [&] {
        PolyC a0 = lift_to_cyclotomic(fs.catalogs().A[0], 13);
        if (fs.w_form(kInfinityIndex) != (a0 * a0).scaled(rat(13)))
            return fail("infinite root is not 13 A0^2");
        for (int nu = 0; nu < 13; ++nu) {
            PolyC phi = fs.phi_composed(nu);
            if (fs.w_form(nu) != phi * phi)
                return fail("squared root mismatch at twist " + std::to_string(nu));
        }
        return pass("degree-four roots are the squares of the quadratic family; infinite root "
                    "equals 13 A0^2");
    });

    b.add("eq-3.8-A-law", [&] {
        for (int nu = 0; nu < 13; ++nu) {
            PolyC lhs = fs.compose_with(fs.catalogs().A[0], fs.ST_pow(nu)).scaled(sqrt13());
            PolyC rhs = PolyC::zero(6);
            for (int j = 0; j < 7; ++j)
                rhs = rhs + lift_to_cyclotomic(fs.catalogs().A[j], 13)
                                .scaled(Cyclotomic::zeta(13, kAPattern[j] * nu));
            if (lhs != rhs) return fail("quadratic law fails at twist " + std::to_string(nu));
        }
        return pass("sqrt(13) * (A0 o S T^nu) equals the displayed combination for all 13 twists");
    });

    std::optional<RConstants> rc;
    std::string rc_error;
    try {
        rc = derive_r_constants(fs);
    } catch (const std::exception& e) {
        rc_error = e.what();
    }
    Cyclotomic scale = sqrt13().scaled(rat(-13));
    auto cubic_rhs = [&](const CubicLawPattern& pat, int nu) {
        const RConstants& r = *rc;
        const auto& D = fs.catalogs().D;
        PolyC acc = lift_to_cyclotomic(D[0], 13).scaled(pat.lead);
        const Cyclotomic* rs[5] = {nullptr, &r.r1, &r.r2, &r.r3, &r.r4};
        for (int j = 1; j <= 12; ++j) {
            Cyclotomic c = *rs[pat.which[j - 1]] * Cyclotomic::zeta(13, j * nu);
            if (pat.sign[j - 1] < 0) c = -c;
            acc = acc + lift_to_cyclotomic(D[j], 13).scaled(c);
        }
        return acc + lift_to_cyclotomic(D[13], 13).scaled(pat.tail);
    };

    b.add("sec3-r-constants", [&] {
        if (!rc) return fail("coefficient solve failed: " + rc_error);
        const RConstants& r = *rc;
        PeriodSet th = periods();
        Cyclotomic exp_r0 =
            (th.theta1 - th.theta3).scaled(rat(2)) - (th.theta2 - th.theta4).scaled(rat(3));
        Cyclotomic exp_rinf =
            (th.theta4 - th.theta2).scaled(rat(2)) - (th.theta1 - th.theta3).scaled(rat(3));
        if (r.r0 != exp_r0 || r.rinf != exp_rinf)
            return fail("period expressions for the boundary coefficients do not match");
        Cyclotomic m13 = Cyclotomic::constant(13, rat(-13));
        bool squares = r.r1 * r.r1 == m13 - sqrt13().scaled(rat(2)) &&
                       r.r2 * r.r2 == (m13 + sqrt13().scaled(rat(3))).scaled(rat(1, 2)) &&
                       r.r3 * r.r3 == m13 + sqrt13().scaled(rat(2)) &&
                       r.r4 * r.r4 == (m13 - sqrt13().scaled(rat(3))).scaled(rat(1, 2));
        if (!squares) return fail("square relations of the solved constants fail");
        const double s13 = 3.605551275463989;
        const double want[4] = {std::sqrt(13 + 2 * s13), std::sqrt((13 - 3 * s13) / 2),
                                std::sqrt(13 - 2 * s13), std::sqrt((13 + 3 * s13) / 2)};
        const Cyclotomic* rv[4] = {&r.r1, &r.r2, &r.r3, &r.r4};
        for (int i = 0; i < 4; ++i) {
            ComplexApprox e = embed(*rv[i], cfg.precision);
            if (std::abs(e.re.to_double()) > 1e-12 ||
                std::abs(e.im.to_double() - want[i]) > 1e-12)
                return fail("principal branch mismatch for constant " + std::to_string(i + 1));
        }
        return pass("solved constants satisfy the period expressions, the four square relations, "
                    "and the principal +i branches within 1e-12");
    });

    b.add("sec3-D0-law", [&] {
        if (!rc) return fail("coefficient solve failed: " + rc_error);
        CubicLawPattern pat = d0_law_pattern(*rc);
        for (int nu = 0; nu < 13; ++nu) {
            PolyC lhs = fs.compose_with(fs.catalogs().D[0], fs.ST_pow(nu)).scaled(scale);
            if (lhs != cubic_rhs(pat, nu))
                return fail("ground-cubic law fails at twist " + std::to_string(nu));
        }
        return pass("-13 sqrt(13) * (D0 o S T^nu) matches the displayed combination for all 13 "
                    "twists");
    });

    b.add("sec3-Dinf-law", [&] {
        if (!rc) return fail("coefficient solve failed: " + rc_error);
        CubicLawPattern pat = dinf_law_pattern(*rc);
        for (int nu = 0; nu < 13; ++nu) {
            PolyC lhs = fs.compose_with(fs.catalogs().D[13], fs.ST_pow(nu)).scaled(scale);
            if (lhs != cubic_rhs(pat, nu))
                return fail("boundary-cubic law fails at twist " + std::to_string(nu));
        }
        return pass("-13 sqrt(13) * (Dinf o S T^nu) matches the displayed combination for all 13 "
                    "twists");
    });

    b.add("eq-3.13-delta-dual", [&] {
        for (int nu = 0; nu < 13; ++nu)
            if (fs.delta_composed(nu) != fs.delta_twisted(nu))
                return fail("sextic law fails at twist " + std::to_string(nu));
        return pass("169 * (G0 o S T^nu) equals -13 G0 + sum zeta^(j nu) G_j for all 13 twists");
    });

    b.add("sec3-delta-sum", [&] {
        PolyC total = PolyC::zero(6);
        for (int i = 0; i < 14; ++i) total = total + fs.delta_twisted(i);
        if (!total.is_zero()) {
            std::ostringstream d;
            d << "nonzero remainder with " << total.term_count() << " terms";
            return fail(d.str());
        }
        return pass("the fourteen degree-six roots sum to zero exactly");
    });

    b.add("sec3-G0-invariance", [&] {
        PolyC g0 = lift_to_cyclotomic(fs.catalogs().G[0], 13);
        bool okH = fs.compose_with(fs.catalogs().G[0], h_signed_permutation()) == g0;
        bool okT = fs.compose_with(fs.catalogs().G[0], fs.T()) == g0;
        return verdict(okH && okT, "G0 is fixed by both generators of the order-78 subgroup",
                       "G0 moves under the subgroup generators");
    });

    b.add("sec3-phiinf2-invariance", [&] {
        PolyQ p = fs.catalogs().A[0] * fs.catalogs().A[0];
        PolyC p2 = lift_to_cyclotomic(p, 13);
        bool okH = fs.compose_with(p, h_signed_permutation()) == p2;
        bool okT = fs.compose_with(p, fs.T()) == p2;
        return verdict(okH && okT,
                       "the squared infinite quadratic root is fixed by both subgroup generators",
                       "squared infinite root moves under the subgroup generators");
    });

    b.add("rep-w-sum", [&] {
        PolyC total = PolyC::zero(6);
        for (int i = 0; i < 14; ++i) total = total + fs.w_form(i);
        std::ostringstream d;
        d << "sum of the fourteen degree-four roots has " << total.term_count()
          << " terms (nonzero, unlike the degree-six family)";
        return reported(d.str());
    });

    return b.finish();
}

// ---------------------------------------------------------------------------
// invariance
// ---------------------------------------------------------------------------

namespace {

std::string perm_to_string(const SignedPerm& p) {
    std::ostringstream os;
    for (int i = 0; i < 14; ++i) {
        if (i) os << ' ';
        os << i << "->";
        if (p.sign[i] < 0) os << '-';
        os << (p.target[i] == kInfinityIndex ? std::string("inf") : std::to_string(p.target[i]));
    }
    return os.str();
}

}  // namespace

VerificationReport run_invariance_suite(const RunConfig& cfg) {
    SuiteBuilder b("invariance", cfg);
    ScopedFpModulus guard(cfg.effective_prime());
    FormSystem fs;

    auto add_perm = [&](const std::string& id, const CycloMatrix& g, bool phi) {
        b.add(id, [&] {
            SignedPerm p = phi ? phi_action_perm(fs, g) : delta_action_perm(fs, g);
            if (!p.total) return fail("a composed form matched no catalog member");
            bool signless = true;
            for (int i = 0; i < 14; ++i) signless = signless && p.sign[i] == 1;
            std::string d = (phi ? std::string("signed permutation: ")
                                 : std::string("permutation: ")) +
                            perm_to_string(p);
            if (!phi && !signless) return fail("unexpected sign in the degree-six action");
            return pass(d);
        });
    };
    add_perm("inv-phi-signed-perm-S", fs.S(), true);
    add_perm("inv-phi-signed-perm-T", fs.T(), true);
    add_perm("inv-delta-perm-S", fs.S(), false);
    add_perm("inv-delta-perm-T", fs.T(), false);

    FpFormEvaluator ev(fs);
    PointSource pts(cfg.seed);
    for (int deg : {12, 18, 20, 30, 32, 42, 44}) {
        b.add("inv-Phi" + std::to_string(deg), [&] {
            PowerSumForm f = capital_phi_form(deg);
            for (int t = 0; t < cfg.trials; ++t) {
                std::vector<Fp64> v = pts.next_point(6);
                Fp64 base = ev.capital_phi_value(f, v);
                if (ev.capital_phi_value(f, ev.apply_S(v)) != base)
                    return fail("changed under the symmetric generator at a random point");
                if (ev.capital_phi_value(f, ev.apply_T(v)) != base)
                    return fail("changed under the diagonal generator at a random point");
            }
            std::ostringstream d;
            d << "invariant under both generators at " << cfg.trials
              << " random points; failure odds below (" << deg << "/p)^" << cfg.trials
              << " with p = " << Fp64::modulus();
            return pass(d.str());
        });
    }
    return b.finish();
}

// ---------------------------------------------------------------------------
// modular
// ---------------------------------------------------------------------------

namespace {

struct LeadClaim {
    long num, den;  // expected leading exponent as a fraction
    long coeff;
};

CheckResult check_leads(const std::vector<SeriesQ>& series, const LeadClaim* claims,
                        std::size_t n, const char* what) {
    for (std::size_t j = 0; j < n; ++j) {
        const SeriesQ& s = series[j];
        if (s.known_zero()) return fail(std::string(what) + ": component is zero");
        if (s.ord() * claims[j].den != claims[j].num * s.denom())
            return fail(std::string(what) + ": leading exponent mismatch at index " +
                        std::to_string(j));
        if (s.coeff(s.ord()) != rat(claims[j].coeff))
            return fail(std::string(what) + ": leading coefficient mismatch at index " +
                        std::to_string(j));
    }
    return pass(std::string(what) + ": all leading terms match the display");
}

}  // namespace

VerificationReport run_modular_suite(const RunConfig& cfg) {
    SuiteBuilder b("modular", cfg);
    ModularData md(cfg.order);

    b.add("eq-3.15-theta-leading", [&] {
        static const LeadClaim claims[6] = {{121, 104, 1}, {49, 104, 1}, {25, 104, 1},
                                            {9, 104, -1},  {81, 104, 1}, {1, 104, 1}};
        std::vector<SeriesQ> comps(md.theta_point().begin(), md.theta_point().end());
        return check_leads(comps, claims, 6, "theta constants");
    });

    b.add("sec3-A-table", [&] {
        static const LeadClaim claims[7] = {{1, 4, 1},    {17, 52, 2}, {29, 52, 2}, {49, 52, 1},
                                            {25, 52, -1}, {9, 52, -1}, {1, 52, -1}};
        return check_leads(md.a_series(), claims, 7, "quadratic table");
    });

    b.add("sec3-D-table", [&] {
        static const LeadClaim claims[14] = {
            {15, 8, 1},    {99, 104, 2},  {3, 104, -1},  {11, 104, 1},  {19, 104, -2},
            {27, 104, -1}, {35, 104, -1}, {43, 104, 1},  {51, 104, 3},  {59, 104, -2},
            {67, 104, 1},  {75, 104, -4}, {83, 104, -1}, {7, 8, -1}};
        return check_leads(md.d_series(), claims, 14, "cubic table");
    });

    b.add("sec3-G-table", [&] {
        static const LeadClaim claims[13] = {{7, 4, 1},    {43, 52, 13}, {47, 52, -22},
                                             {51, 52, -21}, {3, 52, -1},  {7, 52, 2},
                                             {11, 52, 2},   {15, 52, -2}, {19, 52, -8},
                                             {23, 52, 6},   {27, 52, 1},  {31, 52, -8},
                                             {35, 52, 17}};
        return check_leads(md.g_series(), claims, 13, "sextic table");
    });

    b.add("sec3-w-combo-table", [&] {
        const auto& A = md.a_series();
        auto two = [](const SeriesQ& s) { return s.scaled(rat(2)); };
        struct Combo {
            SeriesQ s;
            LeadClaim lead;
        };
        std::vector<Combo> combos;
        combos.push_back({A[0] * A[0] + two(A[1] * A[5] + A[2] * A[3] + A[4] * A[6]), {1, 2, -1}});
        combos.push_back({A[0] * A[1] + A[2] * A[6], {41, 26, -3}});
        combos.push_back({A[0] * A[4] + A[2] * A[5], {19, 26, -3}});
        combos.push_back({A[0] * A[3] + A[5] * A[6], {5, 26, 1}});
        combos.push_back({A[0] * A[5] + A[3] * A[4], {11, 26, -1}});
        combos.push_back({A[0] * A[6] + A[1] * A[3], {7, 26, -1}});
        combos.push_back({A[0] * A[2] + A[1] * A[4], {47, 26, -1}});
        combos.push_back({A[1] * A[1] + two(A[4] * A[5]), {17, 26, 6}});
        combos.push_back({A[3] * A[3] + two(A[1] * A[2]), {23, 26, 8}});
        combos.push_back({A[4] * A[4] + two(A[3] * A[6]), {25, 26, -1}});
        combos.push_back({A[5] * A[5] + two(A[1] * A[6]), {9, 26, -3}});
        combos.push_back({A[2] * A[2] + two(A[3] * A[5]), {29, 26, 2}});
        combos.push_back({A[6] * A[6] + two(A[2] * A[4]), {1, 26, 1}});
        std::vector<SeriesQ> ss;
        std::vector<LeadClaim> cl;
        for (auto& c : combos) {
            ss.push_back(std::move(c.s));
            cl.push_back(c.lead);
        }
        return check_leads(ss, cl.data(), cl.size(), "squared-root combination table");
    });

    const SeriesQ& e4 = md.e4();
    const SeriesQ& e6 = md.e6();
    const SeriesQ& dd = md.discriminant();
    SeriesQ eta8 = md.eta_power(8);
    struct Ident {
        int degree;
        const char* id;
        SeriesQ rhs;
        const char* text;
    };
    std::vector<Ident> idents;
    idents.push_back({12, "eq-3.19-phi12", dd, "discriminant"});
    idents.push_back({18, "eq-3.19-phi18", dd * e6, "Delta E6"});
    idents.push_back({20, "eq-3.19-phi20", eta8 * dd * e4, "eta^8 Delta E4"});
    idents.push_back({30, "eq-3.19-phi30", dd.pow(2) * e6, "Delta^2 E6"});
    idents.push_back({32, "eq-4.3-phi32", eta8 * dd.pow(2) * e4, "eta^8 Delta^2 E4"});
    idents.push_back({42, "eq-4.3-phi42", dd.pow(3) * e6, "Delta^3 E6"});
    idents.push_back({44, "eq-4.3-phi44", eta8 * dd.pow(3) * e4, "eta^8 Delta^3 E4"});
    for (const auto& id : idents) {
        b.add(id.id, [&] {
            SeriesAgreement agree = compare_series(md.capital_phi_x(id.degree), id.rhs);
            if (!agree.equal || agree.verified_q_order < cfg.order) {
                std::ostringstream d;
                d << "mismatch";
                if (agree.mismatch) d << " at exponent " << *agree.mismatch << "/" << md.grid();
                return fail(d.str());
            }
            return pass(std::string("equals ") + id.text + " coefficientwise",
                        agree.verified_q_order);
        });
    }

    struct Lead {
        int degree;
        int level;
        long order;
        long coeff;
    };
    const Lead leads[] = {{12, 1, 1, -676},      {18, 1, 1, 78},
                          {20, 3, 3, 325},       {30, 1, 2, -17095},
                          {32, 3, 5, -23920},    {42, 1, 3, 2948946},
                          {44, 3, 7, 1909765}};
    for (const Lead& l : leads) {
        b.add("lead-phi" + std::to_string(l.degree), [&] {
            SeriesQ s = md.capital_phi_unnormalized(l.degree, l.level);
            bool ok = !s.known_zero() && s.ord() == l.order * md.grid() &&
                      s.coeff(s.ord()) == rat(l.coeff);
            std::ostringstream d;
            d << "unnormalized sum at the weight-" << (l.level == 1 ? "one" : "two")
              << " point starts as " << l.coeff << " q^" << l.order;
            return verdict(ok, d.str(), "leading term mismatch: " + d.str());
        });
    }

    return b.finish();
}

// ---------------------------------------------------------------------------
// singularity
// ---------------------------------------------------------------------------

namespace {

// symbolic side: each invariant as eta^(8a) Delta^b E4^c E6^d with the
// eta-powers folding into Delta via eta^24 = Delta; the reduction target is
// a two-variable polynomial identity in (E4, E6) after Delta = (E4^3-E6^2)/1728
struct SymbolicPhi {
    int eta8;
    int delta;
    int e4;
    int e6;
};

SymbolicPhi symbolic_phi(int degree) {
    switch (degree) {
        case 12: return {0, 1, 0, 0};
        case 18: return {0, 1, 0, 1};
        case 20: return {1, 1, 1, 0};
        case 30: return {0, 2, 0, 1};
        case 32: return {1, 2, 1, 0};
        case 42: return {0, 3, 0, 1};
        case 44: return {1, 3, 1, 0};
        default: throw std::invalid_argument("no invariant of that degree");
    }
}

// product of invariant powers as a polynomial in Q[E4, E6]
PolyQ reduce_product(std::span<const std::pair<int, int>> factors) {
    int eta8 = 0, delta = 0, e4 = 0, e6 = 0;
    for (auto [deg, pw] : factors) {
        SymbolicPhi s = symbolic_phi(deg);
        eta8 += s.eta8 * pw;
        delta += s.delta * pw;
        e4 += s.e4 * pw;
        e6 += s.e6 * pw;
    }
    if (eta8 % 3 != 0) throw std::logic_error("eta powers do not fold into the discriminant");
    delta += eta8 / 3;  // eta^24 = Delta
    PolyQ E4 = PolyQ::variable(2, 0, rat(1));
    PolyQ E6 = PolyQ::variable(2, 1, rat(1));
    PolyQ D = (E4.pow(3) - E6.pow(2)).scaled(rat(1, 1728));
    PolyQ out = PolyQ::constant(2, rat(1));
    if (delta > 0) out = out * D.pow(delta);
    if (e4 > 0) out = out * E4.pow(e4);
    if (e6 > 0) out = out * E6.pow(e6);
    return out;
}

struct Relation {
    const char* id;
    std::vector<std::pair<int, int>> lhs_a;  // first product of invariant powers
    std::vector<std::pair<int, int>> lhs_b;  // subtracted product
    std::vector<std::pair<int, int>> rhs;    // times 1728
};

const std::vector<Relation>& relations() {
    static const std::vector<Relation> rels = {
        {"eq-1.10-a", {{20, 3}}, {{30, 2}}, {{12, 5}}},
        {"eq-1.10-b", {{20, 3}}, {{12, 2}, {18, 2}}, {{12, 5}}},
        {"eq-1.13-1", {{20, 3}, {12, 2}}, {{42, 2}}, {{12, 7}}},
        {"eq-1.13-2", {{32, 3}}, {{12, 5}, {18, 2}}, {{12, 8}}},
        {"eq-1.13-3", {{32, 3}}, {{12, 3}, {30, 2}}, {{12, 8}}},
        {"eq-1.13-4", {{32, 3}}, {{12, 1}, {42, 2}}, {{12, 8}}},
        {"eq-1.13-5", {{44, 3}}, {{12, 8}, {18, 2}}, {{12, 11}}},
        {"eq-1.13-6", {{44, 3}}, {{12, 6}, {30, 2}}, {{12, 11}}},
        {"eq-1.13-7", {{44, 3}}, {{12, 4}, {42, 2}}, {{12, 11}}},
    };
    return rels;
}

SeriesQ series_product(const ModularData& md, std::span<const std::pair<int, int>> factors) {
    SeriesQ out = md.capital_phi_x(factors[0].first).pow(factors[0].second);
    for (std::size_t i = 1; i < factors.size(); ++i)
        out = out * md.capital_phi_x(factors[i].first).pow(factors[i].second);
    return out;
}

}  // namespace

VerificationReport run_singularity_suite(const RunConfig& cfg) {
    SuiteBuilder b("singularity", cfg);
    ModularData md(cfg.order);

    b.add("eq-3.20-e4e6delta", [&] {
        SeriesQ e4 = eisenstein_series(4, cfg.order + 2, 24);
        SeriesQ e6 = eisenstein_series(6, cfg.order + 2, 24);
        SeriesQ d = delta_series(cfg.order + 2, 24);
        SeriesQ resid = e4.pow(3) - e6.pow(2) - d.scaled(rat(1728));
        long window = resid.trunc();
        if (!resid.known_zero()) return fail("weight-twelve relation fails");
        return pass("E4^3 - E6^2 - 1728 Delta vanishes", (window - 1) / 24);
    });

    for (const Relation& rel : relations()) {
        b.add(std::string(rel.id) + "-series", [&] {
            SeriesQ lhs = series_product(md, rel.lhs_a) - series_product(md, rel.lhs_b);
            SeriesQ rhs = series_product(md, rel.rhs).scaled(rat(1728));
            SeriesAgreement agree = compare_series(lhs, rhs);
            if (!agree.equal || agree.verified_q_order < cfg.order) {
                std::ostringstream d;
                d << "series mismatch";
                if (agree.mismatch) d << " at exponent " << *agree.mismatch << "/" << md.grid();
                return fail(d.str());
            }
            return pass("identity holds at the weighted theta point", agree.verified_q_order);
        });
        b.add(std::string(rel.id) + "-reduction", [&] {
            PolyQ lhs = reduce_product(rel.lhs_a) - reduce_product(rel.lhs_b);
            PolyQ rhs = reduce_product(rel.rhs).scaled(rat(1728));
            return verdict(lhs == rhs,
                           "substituting the certified identifications reduces the identity to "
                           "E4^3 - E6^2 = 1728 Delta",
                           "algebraic reduction failed");
        });
    }

    b.add("rep-z-syzygy", [&] {
        // candidates as identities in the six ambient variables: probed, not asserted
        ScopedFpModulus guard(cfg.effective_prime());
        FormSystem fs;
        FpFormEvaluator ev(fs);
        PointSource pts(cfg.seed + 1);
        int vanishing = 0;
        for (const Relation& rel : relations()) {
            bool zero_everywhere = true;
            for (int t = 0; t < cfg.trials; ++t) {
                std::vector<Fp64> v = pts.next_point(6);
                auto value = [&](std::span<const std::pair<int, int>> fac) {
                    Fp64 acc(1);
                    for (auto [deg, pw] : fac)
                        acc *= ev.capital_phi_value(capital_phi_form(deg), v).pow(pw);
                    return acc;
                };
                Fp64 lhs = value(rel.lhs_a) - value(rel.lhs_b) -
                           Fp64::from_int(1728) * value(rel.rhs);
                if (!lhs.is_zero()) zero_everywhere = false;
            }
            if (zero_everywhere) ++vanishing;
        }
        std::ostringstream d;
        d << vanishing
          << " of 9 candidate identities vanish at random ambient points; the relations hold on "
             "the theta locus, not identically in the six variables";
        return reported(d.str());
    });

    return b.finish();
}

// ---------------------------------------------------------------------------
// icosahedral
// ---------------------------------------------------------------------------

VerificationReport run_icosahedral_suite(const RunConfig& cfg) {
    SuiteBuilder b("icosahedral", cfg);
    PolyQ f = icosa_f();
    PolyQ h = icosa_hessian(f);
    PolyQ t = icosa_jacobian_cov(f, h);

    b.add("sec2-hessian-covariant", [&] {
        return verdict(h == icosa_hessian_expected(),
                       "second-derivative determinant over 121 reproduces the displayed degree-20 "
                       "form (coefficients -1, 228, -494)",
                       "hessian covariant mismatch");
    });
    b.add("sec2-jacobian-covariant", [&] {
        return verdict(t == icosa_jacobian_expected(),
                       "first-derivative determinant over 20 reproduces the displayed degree-30 "
                       "form (coefficients 1, 522, -10005)",
                       "jacobian covariant mismatch");
    });
    b.add("eq-2.1-icosahedral", [&] {
        return verdict(icosa_syzygy_residual(f, h, t).is_zero(),
                       "T^2 + H^3 = 1728 f^5 exactly in the two ambient variables",
                       "degree-60 syzygy fails");
    });

    IcosaModularData md(cfg.order);
    b.add("sec2-theta5-leading", [&] {
        bool ok = md.theta_a().ord() * 40 == 9 * kGrid5 && md.theta_a().coeff(md.theta_a().ord()) == rat(1) &&
                  md.theta_b().ord() * 40 == 1 * kGrid5 && md.theta_b().coeff(md.theta_b().ord()) == rat(1);
        return verdict(ok, "order-five theta constants start at q^(9/40) and q^(1/40)",
                       "order-five leading terms mismatch");
    });

    struct Ident {
        const char* id;
        const PolyQ* form;
        SeriesQ rhs;
        const char* text;
    };
    std::vector<Ident> idents;
    idents.push_back({"sec2-f-modular", &f, -md.discriminant(), "-Delta"});
    idents.push_back({"sec2-H-modular", &h, -(md.eta_power(8) * md.discriminant() * md.e4()),
                      "-eta^8 Delta E4"});
    idents.push_back({"sec2-T-modular", &t, md.discriminant().pow(2) * md.e6(), "Delta^2 E6"});
    for (const auto& id : idents) {
        b.add(id.id, [&] {
            SeriesAgreement agree = compare_series(md.at_weighted_point(*id.form), id.rhs);
            if (!agree.equal || agree.verified_q_order < cfg.order)
                return fail("series mismatch");
            return pass(std::string("equals ") + id.text + " coefficientwise",
                        agree.verified_q_order);
        });
    }
    return b.finish();
}

// ---------------------------------------------------------------------------
// translation / inversion functional equations
// ---------------------------------------------------------------------------

VerificationReport run_prop32_suite(const RunConfig& cfg) {
    SuiteBuilder b("prop32", cfg);

    b.add("eq-3.16-translation", [&] {
        static const int tpow[6] = {7, 11, 8, 6, 2, 5};
        long verified = 0;
        for (int i = 1; i <= 6; ++i) {
            SeriesQ aq = theta13_series(i, cfg.order);
            std::vector<SeriesC::Term> ts;
            for (const auto& [k, c] : aq.terms())
                ts.emplace_back(k, Cyclotomic::constant(104, c));
            SeriesC a = SeriesC::from_terms(104, aq.trunc(), std::move(ts));
            SeriesC shifted = shift_z_plus_1(a);
            Cyclotomic mult = Cyclotomic::zeta(104, 65 + 8 * tpow[i - 1]);
            SeriesAgreement agree = compare_series(shifted, a.scaled(mult));
            if (!agree.equal)
                return fail("translation eigenrelation fails on component " + std::to_string(i));
            verified = agree.verified_q_order;
        }
        return pass("each component is an exact eigenvector of the translation twist with "
                    "eigenvalue e^(-3 pi i/4) times its diagonal entry",
                    verified);
    });

    b.add("eq-3.16-inversion", [&] {
        const std::pair<double, double> samples[] = {{0.0, 1.0}, {0.5, 2.0}, {0.3, 0.7}};
        std::ostringstream d;
        d << "residuals:";
        for (auto [re, im] : samples) {
            InversionCheck chk = check_theta_inversion(re, im, cfg.precision);
            d << " " << chk.max_residual;
            if (chk.max_residual > 1e-9)
                return fail("inversion residual above 1e-9 at a sample point");
        }
        d << " (all below 1e-9; includes the fixed point of the inversion)";
        return pass(d.str());
    });

    return b.finish();
}

// ---------------------------------------------------------------------------
// orchestration + manifest
// ---------------------------------------------------------------------------

std::vector<std::string> suite_names() {
    return {"group", "forms", "invariance", "modular", "singularity", "icosahedral", "prop32"};
}

bool known_suite(const std::string& name) {
    if (name == "all") return true;
    for (const auto& s : suite_names())
        if (s == name) return true;
    return false;
}

std::vector<VerificationReport> run_suites(const RunConfig& cfg) {
    std::vector<VerificationReport> out;
    auto want = [&](const char* s) { return cfg.suite == "all" || cfg.suite == s; };
    if (want("group")) out.push_back(run_group_suite(cfg));
    if (want("forms")) out.push_back(run_forms_suite(cfg));
    if (want("invariance")) out.push_back(run_invariance_suite(cfg));
    if (want("modular")) out.push_back(run_modular_suite(cfg));
    if (want("singularity")) out.push_back(run_singularity_suite(cfg));
    if (want("icosahedral")) out.push_back(run_icosahedral_suite(cfg));
    if (want("prop32")) out.push_back(run_prop32_suite(cfg));
    return out;
}

namespace {

constexpr ManifestEntry kManifest[] = {
    {"eq-3.3-relations", "group", "eq-3.1,eq-3.2,eq-3.3"},
    {"grp-order-1092", "group", "eq-3.3"},
    {"grp-subgroup-78", "group", "sec3-subgroup"},
    {"eq-3.9-h-word", "group", "eq-3.9"},
    {"grp-h-order", "group", "sec3-h-order"},
    {"grp-h-conjugation", "group", "sec3-h-conjugation"},

    {"eq-3.6-phi-dual", "forms", "eq-3.4,eq-3.5,eq-3.6"},
    {"eq-1.2-w-forms", "forms", "eq-1.2"},
    {"eq-3.8-A-law", "forms", "eq-1.3,eq-3.7,eq-3.8"},
    {"sec3-r-constants", "forms", "sec3-r-constants"},
    {"sec3-D0-law", "forms", "eq-1.6,eq-3.10,sec3-D0-transform"},
    {"sec3-Dinf-law", "forms", "sec3-Dinf-transform"},
    {"eq-3.13-delta-dual", "forms", "eq-1.4,eq-1.5,eq-3.11,eq-3.12,eq-3.13,eq-3.14"},
    {"sec3-delta-sum", "forms", "sec3-delta-sum"},
    {"sec3-G0-invariance", "forms", "sec3-G0-invariance"},
    {"sec3-phiinf2-invariance", "forms", "sec3-phiinf2-invariance"},
    {"rep-w-sum", "forms", "sec3-jacobian-root-sum"},

    {"inv-phi-signed-perm-S", "invariance", "thm-1.1-invariance"},
    {"inv-phi-signed-perm-T", "invariance", "thm-1.1-invariance"},
    {"inv-delta-perm-S", "invariance", "thm-1.1-invariance"},
    {"inv-delta-perm-T", "invariance", "thm-1.1-invariance"},
    {"inv-Phi12", "invariance", "eq-1.7,thm-1.1-invariance"},
    {"inv-Phi18", "invariance", "eq-1.7,thm-1.1-invariance"},
    {"inv-Phi20", "invariance", "eq-1.8,thm-1.1-invariance"},
    {"inv-Phi30", "invariance", "eq-1.8,thm-1.1-invariance"},
    {"inv-Phi32", "invariance", "eq-1.11,thm-1.2-invariance"},
    {"inv-Phi42", "invariance", "eq-1.11,thm-1.2-invariance"},
    {"inv-Phi44", "invariance", "eq-1.12,thm-1.2-invariance"},

    {"eq-3.15-theta-leading", "modular", "eq-1.9,eq-3.15"},
    {"sec3-A-table", "modular", "sec3-A-table"},
    {"sec3-D-table", "modular", "sec3-D-table"},
    {"sec3-G-table", "modular", "sec3-G-table"},
    {"sec3-w-combo-table", "modular", "sec3-w-combo-table"},
    {"eq-3.19-phi12", "modular", "eq-1.7,eq-3.17,eq-3.19,thm-1.1-E8"},
    {"eq-3.19-phi18", "modular", "eq-1.7,eq-3.17,eq-3.19,thm-1.1-E8"},
    {"eq-3.19-phi20", "modular", "eq-1.8,eq-3.18,eq-3.19,thm-1.1-E8"},
    {"eq-3.19-phi30", "modular", "eq-1.8,eq-3.18,eq-3.19,thm-1.1-E8"},
    {"eq-4.3-phi32", "modular", "eq-1.11,eq-4.1,eq-4.3,thm-1.2"},
    {"eq-4.3-phi42", "modular", "eq-1.11,eq-4.1,eq-4.3,thm-1.2"},
    {"eq-4.3-phi44", "modular", "eq-1.12,eq-4.2,eq-4.3,thm-1.2"},
    {"lead-phi12", "modular", "sec3-lead-phi12"},
    {"lead-phi18", "modular", "sec3-lead-phi18"},
    {"lead-phi20", "modular", "sec3-lead-phi20"},
    {"lead-phi30", "modular", "sec3-lead-phi30"},
    {"lead-phi32", "modular", "sec4-lead-phi32"},
    {"lead-phi42", "modular", "sec4-lead-phi42"},
    {"lead-phi44", "modular", "sec4-lead-phi44"},

    {"eq-3.20-e4e6delta", "singularity", "eq-3.20,eq-4.4"},
    {"eq-1.10-a-series", "singularity", "eq-1.10,eq-3.21,thm-1.1-E8"},
    {"eq-1.10-a-reduction", "singularity", "eq-1.10,eq-3.20,eq-3.21"},
    {"eq-1.10-b-series", "singularity", "eq-1.10,eq-3.21,thm-1.1-E8"},
    {"eq-1.10-b-reduction", "singularity", "eq-1.10,eq-3.20,eq-3.21"},
    {"eq-1.13-1-series", "singularity", "eq-1.13,eq-4.5"},
    {"eq-1.13-1-reduction", "singularity", "eq-1.13,eq-4.4,eq-4.5"},
    {"eq-1.13-2-series", "singularity", "eq-1.13,eq-4.5,thm-1.2-Q18"},
    {"eq-1.13-2-reduction", "singularity", "eq-1.13,eq-4.4,eq-4.5"},
    {"eq-1.13-3-series", "singularity", "eq-1.13,eq-4.5"},
    {"eq-1.13-3-reduction", "singularity", "eq-1.13,eq-4.4,eq-4.5"},
    {"eq-1.13-4-series", "singularity", "eq-1.13,eq-4.5"},
    {"eq-1.13-4-reduction", "singularity", "eq-1.13,eq-4.4,eq-4.5"},
    {"eq-1.13-5-series", "singularity", "eq-1.13,eq-1.14,eq-4.5,thm-1.2-E20,cor-1.3"},
    {"eq-1.13-5-reduction", "singularity", "eq-1.13,eq-1.14,eq-4.4,eq-4.5,cor-1.3"},
    {"eq-1.13-6-series", "singularity", "eq-1.13,eq-1.14,eq-4.5,cor-1.3"},
    {"eq-1.13-6-reduction", "singularity", "eq-1.13,eq-1.14,eq-4.4,eq-4.5,cor-1.3"},
    {"eq-1.13-7-series", "singularity", "eq-1.13,eq-1.14,eq-4.5,thm-1.2-x7,cor-1.3"},
    {"eq-1.13-7-reduction", "singularity", "eq-1.13,eq-1.14,eq-4.4,eq-4.5,cor-1.3"},
    {"rep-z-syzygy", "singularity", "sec1-syzygy-candidates"},

    {"sec2-hessian-covariant", "icosahedral", "sec2-hessian"},
    {"sec2-jacobian-covariant", "icosahedral", "sec2-jacobian"},
    {"eq-2.1-icosahedral", "icosahedral", "eq-2.1"},
    {"sec2-theta5-leading", "icosahedral", "sec2-theta5"},
    {"sec2-f-modular", "icosahedral", "sec2-f-modular"},
    {"sec2-H-modular", "icosahedral", "sec2-H-modular"},
    {"sec2-T-modular", "icosahedral", "sec2-T-modular"},

    {"eq-3.16-translation", "prop32", "eq-3.16,prop-3.2"},
    {"eq-3.16-inversion", "prop32", "eq-3.16,prop-3.2"},
};

constexpr const char* kRequiredLabels[] = {
    "eq-1.2",  "eq-1.3",  "eq-1.4",  "eq-1.5",  "eq-1.6",  "eq-1.7",  "eq-1.8",
    "eq-1.9",  "eq-1.10", "eq-1.11", "eq-1.12", "eq-1.13", "eq-1.14", "eq-2.1",
    "eq-3.1",  "eq-3.2",  "eq-3.3",  "eq-3.4",  "eq-3.5",  "eq-3.6",  "eq-3.7",
    "eq-3.8",  "eq-3.9",  "eq-3.10", "eq-3.11", "eq-3.12", "eq-3.13", "eq-3.14",
    "eq-3.15", "eq-3.16", "eq-3.17", "eq-3.18", "eq-3.19", "eq-3.20", "eq-3.21",
    "eq-4.1",  "eq-4.2",  "eq-4.3",  "eq-4.4",  "eq-4.5",  "prop-3.2", "cor-1.3",
    "thm-1.1-E8", "thm-1.1-invariance", "thm-1.2-invariance",
};

}  // namespace

std::span<const ManifestEntry> check_manifest() { return kManifest; }

std::span<const char* const> required_identity_labels() { return kRequiredLabels; }

}  // namespace psl213
