#include "doctest.h"
#include "matfun.hpp"
#include "trigpoly.hpp"
#include "zoo.hpp"

#include <cmath>
#include <stdexcept>

using namespace superopt;

namespace {

MatLaurent weighted_diag_symbol() {
    // diag(zbar^3, 0.5 zbar, 0)
    MatLaurent a = make_symbol(3, 3);
    Mat m3 = Mat::Zero(3, 3);
    m3(0, 0) = 1.0;
    set_coeff(a, -3, m3);
    Mat m1 = Mat::Zero(3, 3);
    m1(1, 1) = 0.5;
    set_coeff(a, -1, m1);
    return a;
}

}  // namespace

TEST_CASE("grid guard enforces quadrature exactness") {
    MatLaurent a = make_symbol(1, 1);
    Mat one(1, 1);
    one(0, 0) = 1.0;
    set_coeff(a, -8, one);
    set_coeff(a, 8, one);
    CHECK(grid_guard(a) == 33);
    CHECK_THROWS_AS((void)sample(a, 16), std::invalid_argument);
    const GridSamples g = sample(a, 33);
    CHECK(static_cast<int>(g.points.size()) == 33);
    CHECK(g.svals[0].size() == 1);
}

TEST_CASE("mixed norms on a scaled identity") {
    MatLaurent a = scale(identity_symbol(2), 3.0);
    const GridSamples g = sample(a, 16);
    CHECK(mixed_norm(g, 1.0, inf_exponent).value == doctest::Approx(3.0));
    CHECK(mixed_norm(g, 2.0, 2.0).value ==
          doctest::Approx(3.0 * std::sqrt(2.0)));
    CHECK(mixed_norm(g, inf_exponent, 1.0).value == doctest::Approx(6.0));
    CHECK(mixed_norm(g, inf_exponent, 1.0).is_grid_max);
}

TEST_CASE("rank profile of a singular diagonal") {
    const GridSamples g = sample(weighted_diag_symbol(), 16);
    const RankProfile rp = rank_profile(g);
    CHECK(rp.essential == 2);
    CHECK(rp.max_rank == 2);
    CHECK(!rp.ambiguous);
}

TEST_CASE("unitary detection on registry symbols") {
    const ZooEntry e = zoo_entry("strict2x2");
    const GridSamples g = sample(e.phi, grid_guard(e.phi));
    CHECK(is_unitary_valued(g, 1e-10));
    CHECK(!is_unitary_valued(sample(weighted_diag_symbol(), 16), 1e-10));
}

TEST_CASE("inner test needs analyticity") {
    // z I is inner; zbar I is unitary-valued but not analytic
    CHECK(is_inner(shift(identity_symbol(2), 1), 1e-10));
    CHECK(!is_inner(shift(identity_symbol(2), -1), 1e-10));
}

TEST_CASE("norm shortcuts agree with hand values") {
    const MatLaurent d = weighted_diag_symbol();
    CHECK(norm_linf_s1(d) == doctest::Approx(1.5));
    CHECK(norm_linf_op(d) == doctest::Approx(1.0));
    CHECK(norm_l1_op(d) == doctest::Approx(1.0));

    // Frobenius L2 norm is the coefficient l2 norm
    MatLaurent a = make_symbol(1, 1);
    Mat m(1, 1);
    m(0, 0) = 3.0;
    set_coeff(a, -2, m);
    m(0, 0) = 4.0;
    set_coeff(a, 5, m);
    CHECK(norm_l2_frobenius(a) == doctest::Approx(5.0));
}
