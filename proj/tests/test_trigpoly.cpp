#include "doctest.h"
#include "trigpoly.hpp"

#include <cmath>
#include <stdexcept>

using namespace superopt;

namespace {

MatLaurent scalar(int deg, cplx c) {
    MatLaurent a = make_symbol(1, 1);
    Mat m(1, 1);
    m(0, 0) = c;
    set_coeff(a, deg, m);
    return a;
}

}  // namespace

TEST_CASE("coefficient access round trip") {
    MatLaurent a = make_symbol(2, 3);
    CHECK(a.rows == 2);
    CHECK(a.cols == 3);
    CHECK(is_zero(a));

    Mat m = Mat::Zero(2, 3);
    m(1, 2) = cplx(0.5, -1.0);
    set_coeff(a, -4, m);
    CHECK(!is_zero(a));
    CHECK(coeff(a, -4)(1, 2) == cplx(0.5, -1.0));
    CHECK(coeff(a, 7).isZero(0.0));
    CHECK(min_degree(a) == -4);
    CHECK(max_degree(a) == -4);
    CHECK(degree_span(a) == 0);
}

TEST_CASE("canonicalization drops numerical dust") {
    MatLaurent a = make_symbol(1, 1);
    Mat tiny(1, 1);
    tiny(0, 0) = 1e-15;
    set_coeff(a, 3, tiny);
    canonicalize(a);
    CHECK(is_zero(a));

    // accumulation then exact cancellation
    MatLaurent b = scalar(2, 1.0);
    MatLaurent c = add(b, scale(b, -1.0));
    CHECK(is_zero(c));
}

TEST_CASE("product matches polynomial identity") {
    // (1 + z)(1 - z) = 1 - z^2
    MatLaurent p = add(scalar(0, 1.0), scalar(1, 1.0));
    MatLaurent q = add(scalar(0, 1.0), scalar(1, -1.0));
    MatLaurent pq = mul(p, q);
    CHECK(std::abs(coeff(pq, 0)(0, 0) - cplx(1.0)) < 1e-15);
    CHECK(coeff(pq, 1).isZero(1e-15));
    CHECK(std::abs(coeff(pq, 2)(0, 0) - cplx(-1.0)) < 1e-15);
    CHECK(max_degree(pq) == 2);
}

TEST_CASE("shift relabels degrees") {
    MatLaurent a = scalar(1, cplx(0, 1));
    MatLaurent b = shift(a, -3);
    CHECK(min_degree(b) == -2);
    CHECK(coeff(b, -2)(0, 0) == cplx(0, 1));
}

TEST_CASE("adjoint on the circle conjugates and flips degrees") {
    MatLaurent a = make_symbol(2, 2);
    Mat m = Mat::Zero(2, 2);
    m(0, 1) = cplx(1.0, 2.0);
    set_coeff(a, 3, m);
    MatLaurent astar = adjoint_on_circle(a);
    CHECK(astar.rows == 2);
    CHECK(coeff(astar, -3)(1, 0) == cplx(1.0, -2.0));

    // pointwise identity: A*(zeta) equals the adjoint of A(zeta)
    const cplx zeta = std::polar(1.0, 0.83);
    const Mat lhs = eval(astar, zeta);
    const Mat rhs = eval(a, zeta).adjoint();
    CHECK((lhs - rhs).norm() < 1e-14);
}

TEST_CASE("evaluation agrees with the coefficient sum") {
    MatLaurent a = add(scalar(-1, 2.0), scalar(2, cplx(0, 1)));
    const cplx z = std::polar(1.0, 1.1);
    const cplx expect = 2.0 / z + cplx(0, 1) * z * z;
    CHECK(std::abs(eval(a, z)(0, 0) - expect) < 1e-14);
}

TEST_CASE("pairing is the coefficient cross sum") {
    // phi = zbar * c with a rank-one c, psi = z * d: integral of trace(c d)
    MatLaurent phi = make_symbol(2, 2);
    Mat c(2, 2);
    c << 1, 2, 3, 4;
    set_coeff(phi, -1, c);
    MatLaurent psi = make_symbol(2, 2);
    Mat d(2, 2);
    d << 1, 0, 0, 1;
    set_coeff(psi, 1, d);
    const PairingValue v = pairing(phi, psi);
    CHECK(std::abs(v.value - cplx(5.0)) < 1e-15);

    // disjoint degree supports pair to zero exactly
    MatLaurent psi2 = make_symbol(2, 2);
    set_coeff(psi2, 3, d);
    CHECK(std::abs(pairing(phi, psi2).value) == 0.0);
}

TEST_CASE("pairing rejects incompatible shapes") {
    MatLaurent phi = make_symbol(2, 3);
    MatLaurent psi = make_symbol(2, 3);
    CHECK_THROWS_AS((void)pairing(phi, psi), std::invalid_argument);
}

TEST_CASE("space membership") {
    MatLaurent z = scalar(1, 1.0);
    MatLaurent zbar = scalar(-1, 1.0);
    MatLaurent one = scalar(0, 1.0);
    CHECK(membership(z, Space::Hinf));
    CHECK(membership(z, Space::H1_0));
    CHECK(membership(z, Space::H2));
    CHECK(!membership(zbar, Space::Hinf));
    CHECK(!membership(zbar, Space::H1_0));
    CHECK(membership(zbar, Space::L));
    CHECK(membership(one, Space::Hinf));
    CHECK(!membership(one, Space::H1_0));
}

TEST_CASE("degree windows and parts") {
    MatLaurent a = add(add(scalar(-2, 1.0), scalar(0, 2.0)), scalar(3, 4.0));
    MatLaurent w = truncate_degrees(a, 0, 3);
    CHECK(min_degree(w) == 0);
    CHECK(max_degree(w) == 3);

    MatLaurent ap = analytic_part(a);
    CHECK(min_degree(ap) == 0);
    MatLaurent ap_strict = analytic_part(a, false);
    CHECK(min_degree(ap_strict) == 3);
    // the complement under the same convention keeps degree zero
    CHECK(max_degree(coanalytic_part(a, false)) == 0);
    CHECK(max_degree(coanalytic_part(a)) == -2);
    CHECK(max_coeff_abs(a) == 4.0);
}

TEST_CASE("identity symbol multiplies neutrally") {
    MatLaurent a = make_symbol(2, 2);
    Mat m(2, 2);
    m << 1, 2, 3, cplx(0, 4);
    set_coeff(a, -1, m);
    MatLaurent b = mul(identity_symbol(2), a);
    CHECK(max_coeff_abs(add(b, scale(a, -1.0))) < 1e-15);
}
