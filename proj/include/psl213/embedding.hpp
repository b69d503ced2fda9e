#pragma once

#include <mpfr.h>

#include <string>

#include "psl213/cyclotomic.hpp"

namespace psl213 {

// Thin RAII wrapper over mpfr_t with value-semantics at a fixed precision.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(BigFloat o) { mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from(const Rational& r, mpfr_prec_t prec) {
        BigFloat x(prec);
        mpfr_set_q(x.v_, r.get_mpq_t(), MPFR_RNDN);
        return x;
    }
    static BigFloat from(double d, mpfr_prec_t prec) {
        BigFloat x(prec);
        mpfr_set_d(x.v_, d, MPFR_RNDN);
        return x;
    }
    static BigFloat pi(mpfr_prec_t prec) {
        BigFloat x(prec);
        mpfr_const_pi(x.v_, MPFR_RNDN);
        return x;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_add); }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_sub); }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_mul); }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_div); }
    BigFloat operator-() const { BigFloat r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    BigFloat sqrt() const { BigFloat r(prec()); mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat cos() const { BigFloat r(prec()); mpfr_cos(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat sin() const { BigFloat r(prec()); mpfr_sin(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat exp() const { BigFloat r(prec()); mpfr_exp(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat abs() const { BigFloat r(prec()); mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat atan2(const BigFloat& x) const {  // atan2(this, x)
        BigFloat r(prec());
        mpfr_atan2(r.v_, v_, x.v_, MPFR_RNDN);
        return r;
    }

    int sign() const { return mpfr_sgn(v_); }

private:
    using BinOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static BigFloat bin(const BigFloat& a, const BigFloat& b, BinOp op) {
        BigFloat r(std::max(a.prec(), b.prec()));
        op(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

// Complex value with a tracked absolute error bound. The bound is deliberately
// coarse (a few ulps per operation, propagated linearly); at 128-bit working
// precision it sits around 1e-35, far below every 1e-9..1e-12 tolerance used.
struct ComplexApprox {
    BigFloat re, im;
    double err = 0.0;

    explicit ComplexApprox(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    ComplexApprox(BigFloat r, BigFloat i, double e) : re(std::move(r)), im(std::move(i)), err(e) {}

    double abs2_d() const {
        double r = re.to_double(), i = im.to_double();
        return r * r + i * i;
    }
    double abs_d() const;

    ComplexApprox operator+(const ComplexApprox& o) const;
    ComplexApprox operator-(const ComplexApprox& o) const;
    ComplexApprox operator*(const ComplexApprox& o) const;
    ComplexApprox conj() const { return ComplexApprox(re, -im, err); }

    // principal square root (argument halved); used with upper-half-plane inputs
    ComplexApprox sqrt() const;

    double dist_d(const ComplexApprox& o) const;
};

ComplexApprox complex_exp_2pi(const Rational& frac, mpfr_prec_t prec);      // e^(2 pi i frac)
ComplexApprox complex_exp_2piz(const ComplexApprox& z, mpfr_prec_t prec);   // e^(2 pi i z)

// Evaluate a cyclotomic number at zeta_n = e^(2 pi i / n).
ComplexApprox embed(const Cyclotomic& a, mpfr_prec_t prec = 128);

}  // namespace psl213
