#pragma once

#include <array>
#include <optional>

#include "psl213/matrix.hpp"
#include "psl213/poly.hpp"

namespace psl213 {

// Index convention for the degree-14 root families: 0..12 then 13 = infinity.
inline constexpr int kInfinityIndex = 13;

// A single-sign corruption of one cubic-table entry, for mutation-sensitivity
// tests: flips the sign of the coefficient at `monomial` in D[form_index].
struct DTableMutation {
    int form_index;
    Monomial monomial;
};

// The senary form tables: 7 quadratics A, 14 cubics D (last = infinity),
// 13 sextics G built from quadratic expressions in the D's.
struct Catalogs {
    std::vector<PolyQ> A;  // 7
    std::vector<PolyQ> D;  // 14
    std::vector<PolyQ> G;  // 13
};
Catalogs build_catalogs(const std::optional<DTableMutation>& mutation = std::nullopt);

// zeta-power pattern attached to A_1..A_6 in the quadratic transformation law.
inline constexpr int kAPattern[7] = {0, 1, 4, 9, 3, 12, 10};

// All members of a root family as polynomials over Q(zeta_13).
struct FormFamily {
    std::vector<PolyC> forms;  // 14 entries, infinity last
};

class FormSystem {
public:
    explicit FormSystem(const std::optional<DTableMutation>& mutation = std::nullopt);

    const Catalogs& catalogs() const { return cat_; }
    const CycloMatrix& S() const { return S_; }
    const CycloMatrix& T() const { return T_; }
    const CycloMatrix& ST_pow(int nu) const { return STnu_[nu]; }

    // phi_nu as the zeta-twisted combination of the A table; infinity = sqrt13 * A0
    PolyC phi_twisted(int idx) const;
    // phi_nu as composition of phi_infinity with S T^nu
    PolyC phi_composed(int idx) const;
    PolyC w_form(int idx) const;  // phi^2, with w_infinity = 13 A0^2
    // delta_nu as the zeta-twisted combination of the G table; infinity = 169 G0
    PolyC delta_twisted(int idx) const;
    // delta_nu as 169 * (G0 o S T^nu)
    PolyC delta_composed(int idx) const;

    // p(Mz) for a rational-coefficient form (lift + memoized-power substitution)
    PolyC compose_with(const PolyQ& form, const CycloMatrix& M) const;

    std::vector<PolyC> phi_catalog() const;    // twisted construction, 14 forms
    std::vector<PolyC> delta_catalog() const;  // twisted construction, 14 forms

private:
    Catalogs cat_;
    CycloMatrix S_, T_;
    std::array<CycloMatrix, 13> STnu_;
};

// Coefficients of the cubic-table transformation law, solved exactly.
struct RConstants {
    Cyclotomic r0, r1, r2, r3, r4, rinf;
};

// Expresses -13*sqrt13*(D0 o S) in the span of the 14 cubics and reads the
// six distinct coefficients off the solved vector (positions 0,1,2,4,7,13).
RConstants derive_r_constants(const FormSystem& fs);

// Solved coefficient vectors for both cubic laws at nu = 0, in table order.
std::vector<Cyclotomic> solve_in_cubic_span(const FormSystem& fs, const PolyC& target);

// coefficient patterns of the two cubic transformation laws (indices into r1..r4)
struct CubicLawPattern {
    std::array<int, 12> which;  // for D_1..D_12: 1..4 selects r1..r4
    std::array<int, 12> sign;
    Cyclotomic lead, tail;      // coefficients of D_0 and D_infinity
};
CubicLawPattern d0_law_pattern(const RConstants& r);
CubicLawPattern dinf_law_pattern(const RConstants& r);

// signed permutation matching: target[i] = j and sign[i] = s with
// form_i o g = s * family[j]; composition runs through the factored
// definitions (A0 resp. G0 composed with S T^nu g), never the expanded
// degree-6 family members.
struct SignedPerm {
    std::array<int, 14> target{};
    std::array<int, 14> sign{};
    bool total = true;  // every composed form matched some catalog member
};
SignedPerm phi_action_perm(const FormSystem& fs, const CycloMatrix& g);
SignedPerm delta_action_perm(const FormSystem& fs, const CycloMatrix& g);

// --- the seven invariants as normalized power sums of a root family ---

enum class RootFamily { Jacobian, Exotic };  // w-roots vs delta-roots

struct PowerSumForm {
    int degree;            // 12, 18, 20, 30, 32, 42, 44
    RootFamily family;
    unsigned exponent;     // power applied to each root
    Rational normalization;
};
PowerSumForm capital_phi_form(int degree);

// exact evaluation over F_p through the matrix action (no expansion needed)
class FpFormEvaluator {
public:
    explicit FpFormEvaluator(const FormSystem& fs);

    std::vector<Fp64> apply_matrix(int which_stnu, std::span<const Fp64> v) const;  // S T^nu
    std::vector<Fp64> apply_S(std::span<const Fp64> v) const;
    std::vector<Fp64> apply_T(std::span<const Fp64> v) const;
    Fp64 phi_value(int idx, std::span<const Fp64> v) const;
    Fp64 delta_value(int idx, std::span<const Fp64> v) const;
    Fp64 w_value(int idx, std::span<const Fp64> v) const;
    Fp64 capital_phi_value(const PowerSumForm& f, std::span<const Fp64> v) const;

    const CycloToFp& image() const { return img_; }

private:
    std::vector<Fp64> matvec(const std::vector<Fp64>& m, std::span<const Fp64> v) const;
    CycloToFp img_;
    Fp64 sq13_;
    std::array<std::vector<Fp64>, 13> stnu_;  // row-major 6x6 images
    std::vector<Fp64> s_, t_;
};

// Expanded polynomial for the low-degree invariants (12, 18, 20); the higher
// ones are evaluation-only (their dense expansions are enormous and nothing
// downstream needs them).
PolyQ expand_capital_phi(const FormSystem& fs, int degree);
bool capital_phi_expandable(int degree);

// Canonical text export of a form catalog: one record per form, each term as
// "e1 .. e6 : exponent:rational[,exponent:rational...]". Families: A, D, G,
// phi, w, delta, Phi (the three expandable ones), icosahedral.
std::string export_catalog_text(const std::string& family);

}  // namespace psl213
