#include "doctest.h"
#include "hankel_extremal.hpp"
#include "matfun.hpp"
#include "trigpoly.hpp"
#include "zoo.hpp"

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

TEST_CASE("hankel norm of elementary symbols") {
    CHECK(hankel_norm(scalar(-1, 1.0)) == doctest::Approx(1.0));
    CHECK(hankel_norm(scalar(3, 7.0)) == 0.0);  // analytic: norm 0
    const ZooEntry e = zoo_entry("strict2x2");
    CHECK(hankel_norm(e.phi) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hankel truncation block layout") {
    const HankelTruncation h = hankel_truncation(scalar(-2, 5.0));
    CHECK(h.depth == 2);
    CHECK(h.block.rows() == 2);
    // antidiagonal placement: entry (i, j) reads coefficient -(i + j + 1)
    CHECK(std::abs(h.block(1, 0) - cplx(5.0)) < 1e-15);
    CHECK(std::abs(h.block(0, 1) - cplx(5.0)) < 1e-15);
    CHECK(std::abs(h.block(0, 0)) == 0.0);
}

TEST_CASE("toeplitz truncation places coefficients on diagonals") {
    const Mat t = toeplitz_truncation(scalar(1, 2.0), 3);
    CHECK(t.rows() == 3);
    CHECK(std::abs(t(1, 0) - cplx(2.0)) < 1e-15);
    CHECK(std::abs(t(2, 1) - cplx(2.0)) < 1e-15);
    CHECK(std::abs(t(0, 1)) == 0.0);
}

TEST_CASE("analytic-distance solver on a coanalytic monomial") {
    // g = zbar * diag(3, 1): distance in the nuclear-norm L2 sense is 4
    MatLaurent g = make_symbol(2, 2);
    Mat a = Mat::Zero(2, 2);
    a(0, 0) = 3.0;
    a(1, 1) = 1.0;
    set_coeff(g, -1, a);
    const DistResult r = dist_L2_S1(g, 4);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(4.0).epsilon(1e-6));
}

TEST_CASE("search produces certified feasible witnesses") {
    const ZooEntry e = zoo_entry("order2_unitary");
    SearchOptions opts;
    opts.restarts = 4;
    opts.iterations = 40;
    const SigmaBounds b = sigma_lower_search(e.phi, 2, opts);
    REQUIRE(b.witness.has_value());
    // the reported lower bound is an exact pairing of a feasible member
    const double v = witness_value(e.phi, b.witness->product, 2, true);
    CHECK(v == doctest::Approx(b.lower).epsilon(1e-9));
    CHECK(b.lower == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(b.lower <= b.upper + 1e-12);
}

TEST_CASE("search is deterministic for a fixed seed") {
    const ZooEntry e = zoo_entry("strict2x2");
    SearchOptions opts;
    opts.seed = 42;
    opts.restarts = 3;
    opts.iterations = 30;
    const SigmaBounds a = sigma_lower_search(e.phi, 1, opts);
    const SigmaBounds b = sigma_lower_search(e.phi, 1, opts);
    CHECK(a.lower == b.lower);
    CHECK(a.upper == b.upper);
}

TEST_CASE("bound pair assembles all upper sources") {
    const auto [entry, f] = strict_example_pair();
    BoundInputs in;
    in.t_values = entry.known_t;
    in.bestapprox_candidate = f;
    in.witnesses.push_back(entry.known_witnesses.at(2));
    in.run_search = false;
    const SigmaBounds b = sigma_bounds(entry.phi, 2, in);
    CHECK(b.lower == doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));
    CHECK(b.upper == doctest::Approx(std::sqrt(10.0) / 2.0).epsilon(1e-12));

    // k = 1 collapses onto the Hankel norm
    BoundInputs in1;
    in1.t_values = entry.known_t;
    in1.witnesses.push_back(entry.known_witnesses.at(1));
    in1.run_search = false;
    const SigmaBounds b1 = sigma_bounds(entry.phi, 1, in1);
    CHECK(b1.lower == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(b1.upper == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("bound pair rejects bad inputs") {
    const ZooEntry e = zoo_entry("strict2x2");
    CHECK_THROWS_AS((void)sigma_bounds(e.phi, 0, BoundInputs{}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)sigma_bounds(e.phi, 3, BoundInputs{}),
                    std::invalid_argument);
    BoundInputs bad;
    bad.t_values = std::vector<double>{0.5, 1.0};  // increasing
    CHECK_THROWS_AS((void)sigma_bounds(e.phi, 1, bad), std::invalid_argument);
}

TEST_CASE("witness validation gates") {
    const ZooEntry e = zoo_entry("strict2x2");
    const MatLaurent& good = e.known_witnesses.at(2);
    CHECK(witness_value(e.phi, good, 2, true) ==
          doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));

    // rank over budget
    CHECK_THROWS_AS((void)witness_value(e.phi, good, 1, true),
                    std::invalid_argument);
    CHECK(witness_value(e.phi, good, 1, false) == 0.0);

    // not strictly analytic
    MatLaurent flat = identity_symbol(2);
    CHECK_THROWS_AS((void)witness_value(e.phi, flat, 2, true),
                    std::invalid_argument);

    // norm above the unit ball: rescaling recovers the value
    const MatLaurent big = scale(good, 3.0);
    CHECK_THROWS_AS((void)witness_value(e.phi, big, 2, true),
                    std::invalid_argument);
}

TEST_CASE("structured factorization routes") {
    // diagonal route
    MatLaurent d = make_symbol(2, 2);
    Mat m = Mat::Zero(2, 2);
    m(0, 0) = 0.5;
    set_coeff(d, 1, m);
    m = Mat::Zero(2, 2);
    m(1, 1) = 0.25;
    set_coeff(d, 2, m);
    const ExtremalCandidate c = factor_rank_k(d, 2);
    CHECK(max_coeff_abs(add(c.product, scale(d, -1.0))) < 1e-9);

    // rank budget violation
    CHECK_THROWS_AS((void)factor_rank_k(d, 1), std::invalid_argument);

    // single-column route
    MatLaurent col = make_symbol(2, 2);
    m = Mat::Zero(2, 2);
    m(0, 0) = 1.0;
    set_coeff(col, 1, m);
    m = Mat::Zero(2, 2);
    m(1, 0) = 1.0;
    set_coeff(col, 2, m);
    const ExtremalCandidate c1 = factor_rank_k(scale(col, 1.0 / std::sqrt(2.0)), 1);
    CHECK(max_coeff_abs(add(c1.product, scale(col, -1.0 / std::sqrt(2.0)))) < 1e-9);

    // analyticity is required
    CHECK_THROWS_AS((void)factor_rank_k(identity_symbol(2), 2),
                    std::invalid_argument);
}
