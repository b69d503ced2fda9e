#include "psl213/embedding.hpp"

#include <cmath>

namespace psl213 {

namespace {
double ulp_at(double mag, mpfr_prec_t prec) {
    if (!std::isfinite(mag)) return 1e300;
    return std::abs(mag) * std::ldexp(4.0, -static_cast<int>(prec));
}
}  // namespace

double ComplexApprox::abs_d() const { return std::sqrt(abs2_d()); }

ComplexApprox ComplexApprox::operator+(const ComplexApprox& o) const {
    ComplexApprox r(re + o.re, im + o.im, err + o.err);
    r.err += ulp_at(r.abs_d(), re.prec());
    return r;
}

ComplexApprox ComplexApprox::operator-(const ComplexApprox& o) const {
    ComplexApprox r(re - o.re, im - o.im, err + o.err);
    r.err += ulp_at(r.abs_d(), re.prec());
    return r;
}

ComplexApprox ComplexApprox::operator*(const ComplexApprox& o) const {
    ComplexApprox r(re * o.re - im * o.im, re * o.im + im * o.re, 0.0);
    double ma = abs_d(), mb = o.abs_d();
    r.err = ma * o.err + mb * err + err * o.err + 4 * ulp_at(ma * mb, re.prec());
    return r;
}

ComplexApprox ComplexApprox::sqrt() const {
    // principal branch via modulus/argument
    BigFloat m2 = re * re + im * im;
    BigFloat mod = m2.sqrt().sqrt();
    BigFloat half = BigFloat::from(Rational(1, 2), re.prec());
    BigFloat arg = im.atan2(re) * half;
    ComplexApprox r(mod * arg.cos(), mod * arg.sin(), 0.0);
    double m = abs_d();
    double sq = std::sqrt(m);
    // |sqrt(z+e) - sqrt(z)| <= e / sqrt(|z|) for e << |z|
    r.err = (m > 0 ? err / sq : std::sqrt(err)) + 4 * ulp_at(sq, re.prec());
    return r;
}

double ComplexApprox::dist_d(const ComplexApprox& o) const {
    ComplexApprox d = *this - o;
    return d.abs_d();
}

ComplexApprox complex_exp_2pi(const Rational& frac, mpfr_prec_t prec) {
    BigFloat two_pi = BigFloat::pi(prec) + BigFloat::pi(prec);
    BigFloat t = two_pi * BigFloat::from(frac, prec);
    ComplexApprox r(t.cos(), t.sin(), 0.0);
    r.err = 8 * ulp_at(1.0, prec);
    return r;
}

ComplexApprox complex_exp_2piz(const ComplexApprox& z, mpfr_prec_t prec) {
    // e^(2 pi i (x+iy)) = e^(-2 pi y) (cos 2 pi x + i sin 2 pi x)
    BigFloat two_pi = BigFloat::pi(prec) + BigFloat::pi(prec);
    BigFloat mag = (-(two_pi * z.im)).exp();
    BigFloat ang = two_pi * z.re;
    ComplexApprox r(mag * ang.cos(), mag * ang.sin(), 0.0);
    double m = mag.to_double();
    r.err = 8 * ulp_at(m, prec) + 8.0 * m * z.err;
    return r;
}

ComplexApprox embed(const Cyclotomic& a, mpfr_prec_t prec) {
    if (prec < 53) throw std::invalid_argument("embedding precision must be >= 53 bits");
    ComplexApprox acc(prec);
    const long n = a.order();
    for (long i = 0; i < static_cast<long>(a.coeffs().size()); ++i) {
        const Rational& c = a.coeffs()[i];
        if (is_zero(c)) continue;
        ComplexApprox w = complex_exp_2pi(Rational(i, n), prec);
        ComplexApprox term(w.re * BigFloat::from(c, prec), w.im * BigFloat::from(c, prec),
                           w.err * std::abs(c.get_d()) + ulp_at(std::abs(c.get_d()), prec));
        acc = acc + term;
    }
    return acc;
}

}  // namespace psl213
