#ifndef SUPEROPT_HANKEL_EXTREMAL_HPP
#define SUPEROPT_HANKEL_EXTREMAL_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "matfun.hpp"
#include "trigpoly.hpp"

namespace superopt {

// Finite block matrix of the Hankel operator f |-> P_-(phi f): block (i, j)
// holds the coefficient of phi at -(i + j + 1).  With window >= depth the
// operator has finite rank and the block matrix carries its exact norm.
struct HankelTruncation {
    int depth = 0;   // negative-degree depth d of the symbol
    int window = 0;  // analytic window width D
    Mat block;       // (depth*rows) x (window*cols)
};

HankelTruncation hankel_truncation(const MatLaurent& phi, int window = -1);

// Exact norm of the Hankel operator (largest singular value of the finite
// block matrix); 0 for analytic symbols.
double hankel_norm(const MatLaurent& phi);

// Block Toeplitz truncation [phi_hat(i - j)], i, j in [0, window).
Mat toeplitz_truncation(const MatLaurent& phi, int window);

struct DistResult {
    double value = 0.0;
    MatLaurent minimizer;
    int iterations = 0;
    bool converged = true;
};

// Distance, in the L2 norm of pointwise nuclear norms, from g to analytic
// polynomials of degree <= degree_cap; subgradient descent with backtracking.
// An optional trace receives (iteration, objective) rows.
DistResult dist_L2_S1(const MatLaurent& g, int degree_cap, double tol = 1e-10,
                      int max_iter = 5000,
                      std::vector<std::pair<int, double>>* trace = nullptr);

// A factored test function Psi = R Q with R analytic n x k and Q analytic
// k x m vanishing at 0; norms are grid values (L2 and L1 of pointwise
// operator norms).
struct ExtremalCandidate {
    MatLaurent R;
    MatLaurent Q;
    MatLaurent product;
    double norm_R = 0.0;
    double norm_Q = 0.0;
    double norm_product = 0.0;
};

ExtremalCandidate make_candidate(const MatLaurent& R, const MatLaurent& Q);

struct SigmaBounds {
    int k = 0;
    double lower = 0.0;
    double upper = 0.0;
    std::optional<ExtremalCandidate> witness;
};

struct SearchOptions {
    int degree_cap = 8;
    int restarts = 8;
    std::uint64_t seed = 0;
    int iterations = 80;
    int grid_n = 0;  // minimum evaluation grid size, 0 = automatic
};

// Alternating ascent over factored test functions; the result is a certified
// lower bound (every reported value is the exact pairing of a validated
// member of the rank-k test class).
SigmaBounds sigma_lower_search(const MatLaurent& phi, int k,
                               const SearchOptions& opts);

struct BoundInputs {
    std::optional<std::vector<double>> t_values;  // nonincreasing, nonnegative
    std::optional<MatLaurent> bestapprox_candidate;
    std::vector<MatLaurent> witnesses;  // known members of the test class
    bool run_search = true;
    SearchOptions search;
};

// Bound pair for sigma_k: upper from the t-value sum / candidate distance /
// Hankel norm (k = 1) / L-infinity(S1) norm; lower from search and supplied
// witnesses.  Throws if the certified lower exceeds the upper.
SigmaBounds sigma_bounds(const MatLaurent& phi, int k, const BoundInputs& in);

// Validates a witness for the rank-k test class and returns its pairing
// value against phi (0 if invalid and strict is false).
double witness_value(const MatLaurent& phi, const MatLaurent& psi, int k,
                     bool strict = false);

// Constructive factorization Psi = R Q for the supported structured classes:
// diagonal symbols with nonvanishing-modulus entries, square inner-times-
// outer-squared symbols, single-column symbols.  Throws on anything else.
ExtremalCandidate factor_rank_k(const MatLaurent& psi, int k,
                                double tol = 1e-9);

}  // namespace superopt

#endif
