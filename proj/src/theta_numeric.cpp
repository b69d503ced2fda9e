#include "psl213/theta_numeric.hpp"

#include <cmath>

#include "psl213/group13.hpp"

namespace psl213 {

namespace {
constexpr int kThetaM[6] = {11, 7, 5, 3, 9, 1};
}

ComplexApprox make_point(double re, double im, mpfr_prec_t prec) {
    return ComplexApprox(BigFloat::from(re, prec), BigFloat::from(im, prec), 0.0);
}

ComplexApprox theta13_numeric(int i, const ComplexApprox& z, mpfr_prec_t prec, double tail_target) {
    if (i < 1 || i > 6) throw std::invalid_argument("theta component in 1..6");
    const int m = kThetaM[i - 1];
    const int sign = i == 4 ? -1 : 1;
    const double y = z.im.to_double();
    if (y <= 0) throw std::invalid_argument("point must lie in the upper half plane");

    // |q^e| = exp(-2 pi y e); the exponent of the n-th term is at least
    // (13 n^2 - 11|n|)/2 >= n^2 for |n| >= 1, so the tail beyond n0 is below
    // 2 r^((n0+1)^2) / (1 - r) with r = exp(-2 pi y)
    const double r = std::exp(-2 * M_PI * y);
    int n0 = 1;
    double tail;
    for (;; ++n0) {
        tail = 2 * std::pow(r, static_cast<double>(n0 + 1) * (n0 + 1)) / (1 - r);
        if (tail < tail_target || n0 > 300) break;
    }
    if (tail >= tail_target)
        throw std::domain_error("theta tail bound does not reach the requested target");

    ComplexApprox acc(prec);
    for (int n = -n0; n <= n0; ++n) {
        // exponent m^2/104 + (13n^2 + mn)/2
        Rational e = rat(m * m, 104) + rat(13L * n * n + m * n, 2);
        ComplexApprox ze(z.re * BigFloat::from(e, prec), z.im * BigFloat::from(e, prec), 0.0);
        ComplexApprox term = complex_exp_2piz(ze, prec);
        int s = (n % 2 == 0 ? 1 : -1) * sign;
        if (s < 0) term = ComplexApprox(-term.re, -term.im, term.err);
        acc = acc + term;
    }
    acc.err += tail;
    return acc;
}

std::array<ComplexApprox, 6> theta13_vector_numeric(const ComplexApprox& z, mpfr_prec_t prec,
                                                    double tail_target) {
    std::array<ComplexApprox, 6> out{ComplexApprox(prec), ComplexApprox(prec), ComplexApprox(prec),
                                     ComplexApprox(prec), ComplexApprox(prec), ComplexApprox(prec)};
    for (int i = 1; i <= 6; ++i) out[i - 1] = theta13_numeric(i, z, prec, tail_target);
    return out;
}

InversionCheck check_theta_inversion(double re_z, double im_z, mpfr_prec_t prec) {
    ComplexApprox z = make_point(re_z, im_z, prec);

    // -1/z
    BigFloat n2 = z.re * z.re + z.im * z.im;
    ComplexApprox minus_inv(-(z.re / n2), z.im / n2, 1e-30);

    std::array<ComplexApprox, 6> lhs = theta13_vector_numeric(minus_inv, prec);
    std::array<ComplexApprox, 6> a = theta13_vector_numeric(z, prec);

    // e^(i pi/4) sqrt(z), branch with 0 < arg sqrt(z) <= pi/2
    ComplexApprox sq = z.sqrt();
    if (sq.im.sign() < 0) sq = ComplexApprox(-sq.re, -sq.im, sq.err);
    ComplexApprox rot = complex_exp_2pi(rat(1, 8), prec);
    ComplexApprox factor = rot * sq;

    CycloMatrix S = gen_S();
    InversionCheck out{0.0, 0.0};
    for (int i = 0; i < 6; ++i) {
        ComplexApprox acc(prec);
        for (int j = 0; j < 6; ++j) acc = acc + embed(S.at(i, j), prec) * a[j];
        ComplexApprox rhs = factor * acc;
        double resid = lhs[i].dist_d(rhs);
        out.max_residual = std::max(out.max_residual, resid);
        out.error_budget = std::max(out.error_budget, lhs[i].err + rhs.err);
    }
    return out;
}

}  // namespace psl213
