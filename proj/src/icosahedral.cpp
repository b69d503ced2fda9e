#include "psl213/icosahedral.hpp"

namespace psl213 {

PolyQ icosa_f() { return parse_poly(2, "z1^11 z2 + 11 z1^6 z2^6 - z1 z2^11"); }

PolyQ icosa_hessian(const PolyQ& f) {
    PolyQ f11 = f.derivative(0).derivative(0);
    PolyQ f12 = f.derivative(0).derivative(1);
    PolyQ f22 = f.derivative(1).derivative(1);
    return (f11 * f22 - f12 * f12).scaled(rat(1, 121));
}

PolyQ icosa_jacobian_cov(const PolyQ& f, const PolyQ& h) {
    PolyQ f1 = f.derivative(0), f2 = f.derivative(1);
    PolyQ h1 = h.derivative(0), h2 = h.derivative(1);
    return (f1 * h2 - f2 * h1).scaled(rat(1, 20));
}

PolyQ icosa_hessian_expected() {
    return parse_poly(2, "-z1^20 - z2^20 + 228 z1^15 z2^5 - 228 z1^5 z2^15 - 494 z1^10 z2^10");
}

PolyQ icosa_jacobian_expected() {
    return parse_poly(2,
                      "z1^30 + z2^30 + 522 z1^25 z2^5 - 522 z1^5 z2^25 - 10005 z1^20 z2^10 - "
                      "10005 z1^10 z2^20");
}

PolyQ icosa_syzygy_residual(const PolyQ& f, const PolyQ& h, const PolyQ& t) {
    return t * t + h.pow(3) - f.pow(5).scaled(rat(1728));
}

}  // namespace psl213
