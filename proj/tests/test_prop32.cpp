#include <doctest.h>

#include "psl213/theta_numeric.hpp"

using namespace psl213;

TEST_CASE("numeric theta values stabilize quickly high in the upper half plane") {
    ComplexApprox z = make_point(0.0, 2.0);
    for (int i = 1; i <= 6; ++i) {
        ComplexApprox few = theta13_numeric(i, z, 128, 1e-13);
        ComplexApprox many = theta13_numeric(i, z, 192, 1e-25);
        CHECK(few.dist_d(many) < 1e-13);
        CHECK(few.err < 1e-12);
    }
    CHECK_THROWS_AS(theta13_numeric(1, make_point(0.0, -1.0)), std::invalid_argument);
}

TEST_CASE("inversion law numerically at the sample points") {
    // z = i is the fixed point of the inversion
    for (auto [re, im] : {std::pair{0.0, 1.0}, std::pair{0.5, 2.0}, std::pair{0.3, 0.7}}) {
        InversionCheck chk = check_theta_inversion(re, im);
        CHECK(chk.max_residual < 1e-9);
        CHECK(chk.error_budget < 1e-10);
    }
}
