// Exercises the shared-library interface exactly as an external client
// would: through superopt.h alone.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superopt.h"

#include <cmath>
#include <cstring>
#include <string>

namespace {

superopt_symbol* must_parse(const char* text) {
    superopt_symbol* sym = nullptr;
    REQUIRE(superopt_symbol_from_json(text, &sym) == SUPEROPT_OK);
    REQUIRE(sym != nullptr);
    return sym;
}

const char* kZbar =
    "{\"rows\":1,\"cols\":1,\"coeffs\":[{\"deg\":-1,\"re\":[[1.0]]}]}";

}  // namespace

TEST_CASE("version string is present") {
    const char* v = superopt_version();
    REQUIRE(v != nullptr);
    CHECK(std::strlen(v) > 0);
}

TEST_CASE("symbol json round trip") {
    superopt_symbol* sym = must_parse(kZbar);
    int rows = 0, cols = 0, lo = 0, hi = 0;
    CHECK(superopt_symbol_shape(sym, &rows, &cols, &lo, &hi) == SUPEROPT_OK);
    CHECK(rows == 1);
    CHECK(cols == 1);
    CHECK(lo == -1);
    CHECK(hi == -1);

    char* js = nullptr;
    REQUIRE(superopt_symbol_to_json(sym, -1, &js) == SUPEROPT_OK);
    superopt_symbol* again = must_parse(js);
    superopt_string_free(js);

    double norm = 0.0;
    CHECK(superopt_hankel_norm(again, &norm) == SUPEROPT_OK);
    CHECK(norm == doctest::Approx(1.0));
    superopt_symbol_free(again);
    superopt_symbol_free(sym);
}

TEST_CASE("parse failures report through the status and message") {
    superopt_symbol* sym = nullptr;
    CHECK(superopt_symbol_from_json("{oops", &sym) == SUPEROPT_ERR_PARSE);
    CHECK(sym == nullptr);
    CHECK(std::strlen(superopt_last_error()) > 0);

    CHECK(superopt_symbol_from_json(
              "{\"rows\":0,\"cols\":1,\"coeffs\":[]}", &sym) ==
          SUPEROPT_ERR_PARSE);
    CHECK(superopt_symbol_from_json(nullptr, &sym) ==
          SUPEROPT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("hankel depth and pairing") {
    superopt_symbol* phi = must_parse(kZbar);
    int depth = 0;
    CHECK(superopt_hankel_depth(phi, &depth) == SUPEROPT_OK);
    CHECK(depth == 1);

    superopt_symbol* psi = must_parse(
        "{\"rows\":1,\"cols\":1,\"coeffs\":[{\"deg\":1,\"re\":[[1.0]]}]}");
    double re = 0.0, im = 0.0;
    CHECK(superopt_pairing(phi, psi, &re, &im) == SUPEROPT_OK);
    CHECK(re == doctest::Approx(1.0));
    CHECK(im == doctest::Approx(0.0));
    superopt_symbol_free(psi);
    superopt_symbol_free(phi);
}

TEST_CASE("determinant winding requires an invertible square symbol") {
    superopt_symbol* sym = must_parse(kZbar);
    int w = 0;
    CHECK(superopt_det_winding(sym, &w) == SUPEROPT_OK);
    CHECK(w == -1);
    superopt_symbol_free(sym);

    superopt_symbol* wide = must_parse(
        "{\"rows\":1,\"cols\":2,\"coeffs\":[{\"deg\":0,\"re\":[[1.0,0.0]]}]}");
    CHECK(superopt_det_winding(wide, &w) == SUPEROPT_ERR_INVALID_ARGUMENT);
    superopt_symbol_free(wide);
}

TEST_CASE("registry emit, bounds, and verification") {
    char* listing = nullptr;
    REQUIRE(superopt_zoo_list(&listing) == SUPEROPT_OK);
    CHECK(std::string(listing).find("strict2x2") != std::string::npos);
    superopt_string_free(listing);

    superopt_symbol* phi = nullptr;
    REQUIRE(superopt_zoo_emit("order2_unitary", &phi) == SUPEROPT_OK);

    superopt_sigma_options opts;
    superopt_sigma_options_init(&opts);
    CHECK(opts.run_search == 1);
    CHECK(opts.degree_cap > 0);
    opts.restarts = 2;
    opts.iterations = 20;

    double lo = 0.0, hi = 0.0;
    superopt_symbol* wit = nullptr;
    REQUIRE(superopt_sigma_bounds(phi, 2, &opts, &lo, &hi, &wit) ==
            SUPEROPT_OK);
    CHECK(lo == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(hi == doctest::Approx(2.0).epsilon(1e-9));
    REQUIRE(wit != nullptr);
    int rows = 0, cols = 0, dlo = 0, dhi = 0;
    CHECK(superopt_symbol_shape(wit, &rows, &cols, &dlo, &dhi) == SUPEROPT_OK);
    CHECK(rows == 2);
    CHECK(dlo >= 1);
    superopt_symbol_free(wit);

    // out-of-range rank budget
    CHECK(superopt_sigma_bounds(phi, 5, &opts, &lo, &hi, nullptr) ==
          SUPEROPT_ERR_INVALID_ARGUMENT);
    superopt_symbol_free(phi);

    CHECK(superopt_zoo_emit("missing", &phi) != SUPEROPT_OK);

    superopt_report* rep = nullptr;
    REQUIRE(superopt_zoo_verify("order2_unitary", 1e-9, &rep) == SUPEROPT_OK);
    CHECK(superopt_report_overall(rep) == 0);
    char* js = nullptr;
    REQUIRE(superopt_report_to_json(rep, 2, &js) == SUPEROPT_OK);
    CHECK(std::string(js).find("\"overall\"") != std::string::npos);
    superopt_string_free(js);
    char* table = nullptr;
    REQUIRE(superopt_report_table(rep, &table) == SUPEROPT_OK);
    CHECK(std::string(table).find("pass") != std::string::npos);
    superopt_string_free(table);
    superopt_report_free(rep);

    REQUIRE(superopt_zoo_verify(nullptr, 1e-9, &rep) == SUPEROPT_OK);
    CHECK(superopt_report_overall(rep) == 2);  // open question: inconclusive
    superopt_report_free(rep);
}

TEST_CASE("distance solver through the interface") {
    superopt_symbol* g = must_parse(
        "{\"rows\":1,\"cols\":1,\"coeffs\":[{\"deg\":-1,\"re\":[[2.0]]}]}");
    double value = 0.0;
    int iters = 0, conv = 0;
    REQUIRE(superopt_dist_l2_s1(g, 4, 1e-10, 5000, &value, &iters, &conv) ==
            SUPEROPT_OK);
    CHECK(conv == 1);
    CHECK(value == doctest::Approx(2.0).epsilon(1e-6));
    superopt_symbol_free(g);
}

TEST_CASE("null arguments are rejected not crashed") {
    CHECK(superopt_hankel_norm(nullptr, nullptr) ==
          SUPEROPT_ERR_INVALID_ARGUMENT);
    CHECK(superopt_report_overall(nullptr) == -1);
    superopt_string_free(nullptr);
    superopt_symbol_free(nullptr);
    superopt_report_free(nullptr);
}
