#include "psl213/forms.hpp"
#include "psl213/icosahedral.hpp"

#include "psl213/group13.hpp"

namespace psl213 {

namespace {

const char* kATable[7] = {
    "z1 z4 + z2 z5 + z3 z6",
    "z1^2 - 2 z3 z4",
    "-z5^2 - 2 z2 z4",
    "z2^2 - 2 z1 z5",
    "z3^2 - 2 z2 z6",
    "-z4^2 - 2 z1 z6",
    "-z6^2 - 2 z3 z5",
};

const char* kDTable[14] = {
    "z1 z2 z3",
    "2 z2 z3^2 + z2^2 z6 - z4^2 z5 + z1 z5 z6",
    "-z6^3 + z2^2 z4 - 2 z2 z5^2 + z1 z4 z5 + 3 z3 z5 z6",
    "2 z1 z2^2 + z1^2 z5 - z4 z6^2 + z3 z4 z5",
    "-z2^2 z3 + z1 z6^2 - 2 z4^2 z6 - z1 z3 z5",
    "-z4^3 + z3^2 z5 - 2 z3 z6^2 + z2 z5 z6 + 3 z1 z4 z6",
    "-z5^3 + z1^2 z6 - 2 z1 z4^2 + z3 z4 z6 + 3 z2 z4 z5",
    "-z2^3 + z3 z4^2 - z1 z3 z6 - 3 z1 z2 z5 + 2 z1^2 z4",
    "-z1^3 + z2 z6^2 - z2 z3 z5 - 3 z1 z3 z4 + 2 z3^2 z6",
    "2 z1^2 z3 + z3^2 z4 - z5^2 z6 + z2 z4 z6",
    "-z1 z3^2 + z2 z4^2 - 2 z4 z5^2 - z1 z2 z6",
    "-z3^3 + z1 z5^2 - z1 z2 z4 - 3 z2 z3 z6 + 2 z2^2 z5",
    "-z1^2 z2 + z3 z5^2 - 2 z5 z6^2 - z2 z3 z4",
    "z4 z5 z6",
};

// G_j as integer combinations of products D_a * D_b (a or b may be 13 = infinity)
struct GTerm {
    int c, a, b;
};
const std::vector<GTerm> kGTable[13] = {
    {{1, 0, 0}, {1, 13, 13}},
    {{-1, 7, 7}, {2, 0, 1}, {10, 13, 1}, {2, 2, 12}, {-2, 3, 11}, {-4, 4, 10}, {-2, 9, 5}},
    {{-2, 1, 1}, {-4, 0, 2}, {6, 13, 2}, {-2, 4, 11}, {2, 5, 10}, {-2, 6, 9}, {-2, 7, 8}},
    {{-1, 8, 8}, {2, 0, 3}, {10, 13, 3}, {2, 6, 10}, {-2, 9, 7}, {-4, 12, 4}, {-2, 1, 2}},
    {{-1, 2, 2}, {10, 0, 4}, {-2, 13, 4}, {2, 5, 12}, {-2, 9, 8}, {-4, 1, 3}, {-2, 10, 7}},
    {{-2, 9, 9}, {-4, 0, 5}, {6, 13, 5}, {-2, 10, 8}, {2, 6, 12}, {-2, 2, 3}, {-2, 11, 7}},
    {{-2, 3, 3}, {-4, 0, 6}, {6, 13, 6}, {-2, 12, 7}, {2, 2, 4}, {-2, 5, 1}, {-2, 8, 11}},
    {{-2, 10, 10}, {6, 0, 7}, {4, 13, 7}, {-2, 1, 6}, {-2, 2, 5}, {-2, 8, 12}, {-2, 9, 11}},
    {{-2, 4, 4}, {6, 0, 8}, {4, 13, 8}, {-2, 3, 5}, {-2, 6, 2}, {-2, 11, 10}, {-2, 1, 7}},
    {{-1, 11, 11}, {2, 0, 9}, {10, 13, 9}, {2, 5, 4}, {-2, 1, 8}, {-4, 10, 12}, {-2, 3, 6}},
    {{-1, 5, 5}, {10, 0, 10}, {-2, 13, 10}, {2, 6, 4}, {-2, 3, 7}, {-4, 9, 1}, {-2, 12, 11}},
    {{-2, 12, 12}, {6, 0, 11}, {4, 13, 11}, {-2, 9, 2}, {-2, 5, 6}, {-2, 7, 4}, {-2, 3, 8}},
    {{-1, 6, 6}, {10, 0, 12}, {-2, 13, 12}, {2, 2, 10}, {-2, 1, 11}, {-4, 3, 9}, {-2, 4, 8}},
};

std::vector<PolyC> matrix_images(const CycloMatrix& M) {
    std::vector<PolyC> rows;
    rows.reserve(M.size());
    for (int i = 0; i < M.size(); ++i) {
        std::vector<PolyC::Term> ts;
        for (int j = 0; j < M.size(); ++j)
            if (!M.at(i, j).is_zero()) ts.emplace_back(Monomial::unit(j), M.at(i, j));
        rows.push_back(PolyC::from_terms(M.size(), std::move(ts)));
    }
    return rows;
}

}  // namespace

Catalogs build_catalogs(const std::optional<DTableMutation>& mutation) {
    Catalogs cat;
    for (const char* s : kATable) cat.A.push_back(parse_poly(6, s));
    for (const char* s : kDTable) cat.D.push_back(parse_poly(6, s));
    if (mutation) {
        PolyQ& d = cat.D.at(mutation->form_index);
        Rational c = d.coeff(mutation->monomial);
        if (is_zero(c)) throw std::invalid_argument("mutation targets an absent monomial");
        std::vector<PolyQ::Term> ts(d.terms().begin(), d.terms().end());
        for (auto& [m, cc] : ts)
            if (m == mutation->monomial) cc = -cc;
        d = PolyQ::from_terms(6, std::move(ts));
    }
    for (const auto& gdef : kGTable) {
        PolyQ g = PolyQ::zero(6);
        for (const auto& t : gdef) g = g + (cat.D[t.a] * cat.D[t.b]).scaled(rat(t.c));
        cat.G.push_back(g);
    }
    return cat;
}

FormSystem::FormSystem(const std::optional<DTableMutation>& mutation)
    : cat_(build_catalogs(mutation)), S_(gen_S()), T_(gen_T()) {
    CycloMatrix cur = S_;
    for (int nu = 0; nu < 13; ++nu) {
        STnu_[nu] = cur;
        cur = cur * T_;
    }
}

PolyC FormSystem::compose_with(const PolyQ& form, const CycloMatrix& M) const {
    return lift_to_cyclotomic(form, M.order()).compose_linear(matrix_images(M));
}

PolyC FormSystem::phi_twisted(int idx) const {
    if (idx == kInfinityIndex) return lift_to_cyclotomic(cat_.A[0], 13).scaled(sqrt13());
    PolyC acc = PolyC::zero(6);
    for (int j = 0; j < 7; ++j)
        acc = acc + lift_to_cyclotomic(cat_.A[j], 13).scaled(Cyclotomic::zeta(13, kAPattern[j] * idx));
    return acc;
}

PolyC FormSystem::phi_composed(int idx) const {
    if (idx == kInfinityIndex) return phi_twisted(idx);
    return compose_with(cat_.A[0], STnu_[idx]).scaled(sqrt13());
}

PolyC FormSystem::w_form(int idx) const {
    PolyC p = phi_twisted(idx);
    return p * p;
}

PolyC FormSystem::delta_twisted(int idx) const {
    if (idx == kInfinityIndex) return lift_to_cyclotomic(cat_.G[0], 13).scaled(rat(169));
    PolyC acc = lift_to_cyclotomic(cat_.G[0], 13).scaled(rat(-13));
    for (int j = 1; j <= 12; ++j)
        acc = acc + lift_to_cyclotomic(cat_.G[j], 13).scaled(Cyclotomic::zeta(13, j * idx));
    return acc;
}

PolyC FormSystem::delta_composed(int idx) const {
    if (idx == kInfinityIndex) return delta_twisted(idx);
    return compose_with(cat_.G[0], STnu_[idx]).scaled(rat(169));
}

std::vector<PolyC> FormSystem::phi_catalog() const {
    std::vector<PolyC> out;
    for (int i = 0; i < 14; ++i) out.push_back(phi_twisted(i));
    return out;
}

std::vector<PolyC> FormSystem::delta_catalog() const {
    std::vector<PolyC> out;
    for (int i = 0; i < 14; ++i) out.push_back(delta_twisted(i));
    return out;
}

std::vector<Cyclotomic> solve_in_cubic_span(const FormSystem& fs, const PolyC& target) {
    const auto& D = fs.catalogs().D;
    // monomial index
    std::vector<Monomial> monos;
    auto add_monos = [&](auto const& terms) {
        for (const auto& [m, c] : terms) monos.push_back(m);
    };
    for (const auto& d : D) add_monos(d.terms());
    add_monos(target.terms());
    std::sort(monos.begin(), monos.end());
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());

    const int rows = static_cast<int>(monos.size());
    const int cols = 14;
    std::vector<std::vector<Cyclotomic>> mat(rows, std::vector<Cyclotomic>(cols, Cyclotomic::zero(13)));
    std::vector<Cyclotomic> rhs(rows, Cyclotomic::zero(13));
    auto mono_row = [&](const Monomial& m) {
        return static_cast<int>(std::lower_bound(monos.begin(), monos.end(), m) - monos.begin());
    };
    for (int j = 0; j < cols; ++j)
        for (const auto& [m, c] : D[j].terms()) mat[mono_row(m)][j] = Cyclotomic::constant(13, c);
    for (const auto& [m, c] : target.terms()) rhs[mono_row(m)] = c;

    std::vector<Cyclotomic> sol(cols, Cyclotomic::zero(13));
    int r = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (!mat[i][c].is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(mat[pr], mat[r]);
        std::swap(rhs[pr], rhs[r]);
        Cyclotomic inv = mat[r][c].inverse();
        for (int j = c; j < cols; ++j) mat[r][j] *= inv;
        rhs[r] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || mat[i][c].is_zero()) continue;
            Cyclotomic f = mat[i][c];
            for (int j = c; j < cols; ++j) mat[i][j] -= f * mat[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (static_cast<int>(pivot_col.size()) != cols)
        throw std::logic_error("cubic forms are not linearly independent");
    for (int i = r; i < rows; ++i)
        if (!rhs[i].is_zero()) throw std::logic_error("target outside the cubic span");
    for (int k = 0; k < cols; ++k) sol[pivot_col[k]] = rhs[k];
    return sol;
}

RConstants derive_r_constants(const FormSystem& fs) {
    Cyclotomic scale = sqrt13().scaled(rat(-13));
    PolyC target = fs.compose_with(fs.catalogs().D[0], fs.S()).scaled(scale);
    std::vector<Cyclotomic> sol = solve_in_cubic_span(fs, target);
    return RConstants{sol[0], sol[1], sol[2], sol[4], sol[7], sol[13]};
}

CubicLawPattern d0_law_pattern(const RConstants& r) {
    return CubicLawPattern{{1, 2, 1, 3, 2, 2, 4, 4, 1, 3, 4, 3},
                           {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                           r.r0,
                           r.rinf};
}

CubicLawPattern dinf_law_pattern(const RConstants& r) {
    return CubicLawPattern{{3, 4, 3, 1, 4, 4, 2, 2, 3, 1, 2, 1},
                           {-1, -1, -1, 1, -1, -1, 1, 1, -1, 1, 1, 1},
                           r.rinf,
                           -r.r0};
}

namespace {

SignedPerm match_against(const std::vector<PolyC>& composed, const std::vector<PolyC>& family,
                         bool allow_sign) {
    SignedPerm perm;
    for (int i = 0; i < 14; ++i) {
        bool found = false;
        for (int j = 0; j < 14 && !found; ++j) {
            if (composed[i] == family[j]) {
                perm.target[i] = j;
                perm.sign[i] = 1;
                found = true;
            } else if (allow_sign && composed[i] == -family[j]) {
                perm.target[i] = j;
                perm.sign[i] = -1;
                found = true;
            }
        }
        if (!found) {
            perm.target[i] = -1;
            perm.sign[i] = 0;
            perm.total = false;
        }
    }
    return perm;
}

}  // namespace

SignedPerm phi_action_perm(const FormSystem& fs, const CycloMatrix& g) {
    std::vector<PolyC> composed;
    for (int i = 0; i < 13; ++i)
        composed.push_back(fs.compose_with(fs.catalogs().A[0], fs.ST_pow(i) * g).scaled(sqrt13()));
    composed.push_back(fs.compose_with(fs.catalogs().A[0], g).scaled(sqrt13()));
    return match_against(composed, fs.phi_catalog(), true);
}

SignedPerm delta_action_perm(const FormSystem& fs, const CycloMatrix& g) {
    std::vector<PolyC> composed;
    for (int i = 0; i < 13; ++i)
        composed.push_back(fs.compose_with(fs.catalogs().G[0], fs.ST_pow(i) * g).scaled(rat(169)));
    composed.push_back(fs.compose_with(fs.catalogs().G[0], g).scaled(rat(169)));
    return match_against(composed, fs.delta_catalog(), false);
}

PowerSumForm capital_phi_form(int degree) {
    switch (degree) {
        case 12: return {12, RootFamily::Exotic, 2, rat(-1) / rat(13 * 52)};
        case 18: return {18, RootFamily::Exotic, 3, rat(1) / rat(13 * 6)};
        case 20: return {20, RootFamily::Jacobian, 5, rat(1) / rat(13 * 25)};
        case 30: return {30, RootFamily::Exotic, 5, rat(-1) / rat(13 * 1315)};
        case 32: return {32, RootFamily::Jacobian, 8, rat(-1) / rat(13 * 1840)};
        case 42: return {42, RootFamily::Exotic, 7, rat(1) / rat(13 * 226842)};
        case 44: return {44, RootFamily::Jacobian, 11, rat(1) / rat(13 * 146905)};
        default: throw std::invalid_argument("no invariant of that degree");
    }
}

FpFormEvaluator::FpFormEvaluator(const FormSystem& fs) : img_(13) {
    sq13_ = img_.map(sqrt13());
    auto map_matrix = [&](const CycloMatrix& m) {
        std::vector<Fp64> out(36);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) out[i * 6 + j] = img_.map(m.at(i, j));
        return out;
    };
    for (int nu = 0; nu < 13; ++nu) stnu_[nu] = map_matrix(fs.ST_pow(nu));
    s_ = map_matrix(fs.S());
    t_ = map_matrix(fs.T());
}

std::vector<Fp64> FpFormEvaluator::matvec(const std::vector<Fp64>& m, std::span<const Fp64> v) const {
    std::vector<Fp64> out(6);
    for (int i = 0; i < 6; ++i) {
        Fp64 acc;
        for (int j = 0; j < 6; ++j) acc += m[i * 6 + j] * v[j];
        out[i] = acc;
    }
    return out;
}

std::vector<Fp64> FpFormEvaluator::apply_matrix(int which, std::span<const Fp64> v) const {
    return matvec(stnu_[which], v);
}
std::vector<Fp64> FpFormEvaluator::apply_S(std::span<const Fp64> v) const { return matvec(s_, v); }
std::vector<Fp64> FpFormEvaluator::apply_T(std::span<const Fp64> v) const { return matvec(t_, v); }

Fp64 FpFormEvaluator::phi_value(int idx, std::span<const Fp64> v) const {
    auto base = [&](std::span<const Fp64> u) {
        return sq13_ * (u[0] * u[3] + u[1] * u[4] + u[2] * u[5]);
    };
    if (idx == kInfinityIndex) return base(v);
    std::vector<Fp64> u = apply_matrix(idx, v);
    return base(u);
}

Fp64 FpFormEvaluator::delta_value(int idx, std::span<const Fp64> v) const {
    auto base = [&](std::span<const Fp64> u) {
        Fp64 a = u[0] * u[1] * u[2];
        Fp64 b = u[3] * u[4] * u[5];
        return Fp64(169) * (a * a + b * b);
    };
    if (idx == kInfinityIndex) return base(v);
    std::vector<Fp64> u = apply_matrix(idx, v);
    return base(u);
}

Fp64 FpFormEvaluator::w_value(int idx, std::span<const Fp64> v) const {
    Fp64 p = phi_value(idx, v);
    return p * p;
}

Fp64 FpFormEvaluator::capital_phi_value(const PowerSumForm& f, std::span<const Fp64> v) const {
    Fp64 acc;
    for (int i = 0; i < 14; ++i) {
        Fp64 root = f.family == RootFamily::Jacobian ? w_value(i, v) : delta_value(i, v);
        acc += root.pow(f.exponent);
    }
    return acc * Fp64::from_rational(f.normalization);
}

// ---------------------------------------------------------------------------
// Expansion of the low-degree invariants through the Z/13-graded algebra:
// a root family r_nu = sum_j zeta^(j nu) B_j with rational components B_j, so
// sum_nu r_nu^k picks out 13 times the grade-zero component of (sum B_j e_j)^k
// in Q[z][Z/13]. Only full graded powers up to the square/cube are needed.
// ---------------------------------------------------------------------------

namespace {

using Graded = std::array<PolyQ, 13>;

Graded graded_zero() {
    Graded g;
    g.fill(PolyQ::zero(6));
    return g;
}

Graded graded_mul(const Graded& x, const Graded& y) {
    Graded out = graded_zero();
    for (int i = 0; i < 13; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < 13; ++j) {
            if (y[j].is_zero()) continue;
            int k = (i + j) % 13;
            out[k] = out[k] + x[i] * y[j];
        }
    }
    return out;
}

PolyQ graded_comp0(const Graded& x, const Graded& y) {
    PolyQ acc = PolyQ::zero(6);
    for (int i = 0; i < 13; ++i) {
        if (x[i].is_zero()) continue;
        int j = (13 - i) % 13;
        if (y[j].is_zero()) continue;
        acc = acc + x[i] * y[j];
    }
    return acc;
}

}  // namespace

bool capital_phi_expandable(int degree) { return degree == 12 || degree == 18 || degree == 20; }

PolyQ expand_capital_phi(const FormSystem& fs, int degree) {
    PowerSumForm f = capital_phi_form(degree);
    const Catalogs& cat = fs.catalogs();
    Graded root = graded_zero();
    PolyQ inf_root(6);
    if (f.family == RootFamily::Exotic) {
        root[0] = cat.G[0].scaled(rat(-13));
        for (int j = 1; j <= 12; ++j) root[j] = cat.G[j];
        inf_root = cat.G[0].scaled(rat(169));
    } else {
        Graded phi = graded_zero();
        for (int j = 0; j < 7; ++j)
            phi[kAPattern[j]] = phi[kAPattern[j]] + cat.A[j];
        root = graded_mul(phi, phi);
        inf_root = (cat.A[0] * cat.A[0]).scaled(rat(13));
    }
    PolyQ sum_over_nu(6);
    switch (f.exponent) {
        case 2:
            sum_over_nu = graded_comp0(root, root);
            break;
        case 3: {
            Graded sq = graded_mul(root, root);
            sum_over_nu = graded_comp0(sq, root);
            break;
        }
        case 5: {
            Graded sq = graded_mul(root, root);
            Graded cube = graded_mul(sq, root);
            sum_over_nu = graded_comp0(sq, cube);
            break;
        }
        default:
            throw std::invalid_argument("expansion supported only for degrees 12, 18, 20");
    }
    PolyQ total = sum_over_nu.scaled(rat(13)) + inf_root.pow(f.exponent);
    return total.scaled(f.normalization);
}

namespace {

std::string index_label(int i) { return i == kInfinityIndex ? "inf" : std::to_string(i); }

void emit_form(std::ostringstream& os, const std::string& family, const std::string& index,
               const PolyC& p) {
    os << "form " << family << " " << index << " terms " << p.term_count() << "\n";
    os << poly_to_text(p);
}

}  // namespace

std::string export_catalog_text(const std::string& family) {
    FormSystem fs;
    std::ostringstream os;
    os << "catalog " << family << " v1\n";
    if (family == "A" || family == "D" || family == "G") {
        const auto& tab = family == "A"   ? fs.catalogs().A
                          : family == "D" ? fs.catalogs().D
                                          : fs.catalogs().G;
        for (std::size_t i = 0; i < tab.size(); ++i) {
            std::string label = (family == "D" && i == 13) ? "inf" : std::to_string(i);
            emit_form(os, family, label, lift_to_cyclotomic(tab[i], 13));
        }
    } else if (family == "phi" || family == "w" || family == "delta") {
        for (int i = 0; i < 14; ++i) {
            PolyC p = family == "phi"   ? fs.phi_twisted(i)
                      : family == "w"   ? fs.w_form(i)
                                        : fs.delta_twisted(i);
            emit_form(os, family, index_label(i), p);
        }
    } else if (family == "Phi") {
        for (int deg : {12, 18, 20})
            emit_form(os, "Phi", std::to_string(deg),
                      lift_to_cyclotomic(expand_capital_phi(fs, deg), 13));
        os << "note degrees 30, 32, 42, 44 are evaluation-only power-sum forms\n";
    } else if (family == "icosahedral") {
        PolyQ f = icosa_f();
        PolyQ h = icosa_hessian(f);
        PolyQ t = icosa_jacobian_cov(f, h);
        emit_form(os, "icosahedral", "f", lift_to_cyclotomic(f, 1));
        emit_form(os, "icosahedral", "H", lift_to_cyclotomic(h, 1));
        emit_form(os, "icosahedral", "T", lift_to_cyclotomic(t, 1));
    } else {
        throw std::invalid_argument("unknown catalog family: " + family);
    }
    return os.str();
}

}  // namespace psl213
