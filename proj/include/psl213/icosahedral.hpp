#pragma once

#include "psl213/poly.hpp"

namespace psl213 {

// Binary-icosahedral invariants in two variables: the degree-12 ground form,
// its Hessian covariant (degree 20), and the degree-30 Jacobian covariant.
PolyQ icosa_f();

// det of the second-derivative matrix divided by 121
PolyQ icosa_hessian(const PolyQ& f);

// (f_1 H_2 - f_2 H_1) / 20; sign fixed by the classical expansion
// z1^30 + z2^30 + 522 (z1^25 z2^5 - z1^5 z2^25) - 10005 (z1^20 z2^10 + z1^10 z2^20)
PolyQ icosa_jacobian_cov(const PolyQ& f, const PolyQ& h);

PolyQ icosa_hessian_expected();
PolyQ icosa_jacobian_expected();

// T^2 + H^3 - 1728 f^5, identically zero
PolyQ icosa_syzygy_residual(const PolyQ& f, const PolyQ& h, const PolyQ& t);

}  // namespace psl213
