#pragma once

#include "psl213/embedding.hpp"

namespace psl213 {

// Direct numeric summation of the order-13 theta constants at a point of the
// upper half plane, with a proven Gaussian tail bound folded into the error.
ComplexApprox theta13_numeric(int i, const ComplexApprox& z, mpfr_prec_t prec = 128,
                              double tail_target = 1e-13);

// componentwise evaluation of the six-vector
std::array<ComplexApprox, 6> theta13_vector_numeric(const ComplexApprox& z, mpfr_prec_t prec = 128,
                                                    double tail_target = 1e-13);

struct InversionCheck {
    double max_residual;   // max_i |A_i(-1/z) - e^(i pi/4) sqrt(z) (S A(z))_i|
    double error_budget;   // accumulated rounding + tail bounds
};

// The modular-inversion functional equation at one sample point.
InversionCheck check_theta_inversion(double re_z, double im_z, mpfr_prec_t prec = 128);

ComplexApprox make_point(double re, double im, mpfr_prec_t prec = 128);

}  // namespace psl213
