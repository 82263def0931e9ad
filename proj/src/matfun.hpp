#ifndef SUPEROPT_MATFUN_HPP
#define SUPEROPT_MATFUN_HPP

#include <limits>
#include <vector>

#include "trigpoly.hpp"

namespace superopt {

inline constexpr double inf_exponent = std::numeric_limits<double>::infinity();

// Values and singular values of a symbol on the N roots of unity.
struct GridSamples {
    int rows = 0;
    int cols = 0;
    std::vector<cplx> points;
    std::vector<Mat> values;
    std::vector<Eigen::VectorXd> svals;  // nonincreasing per node
};

// Smallest grid size that makes trigonometric quadrature exact for the
// symbol (2*span + 1), never below floor_n.
int grid_guard(const MatLaurent& a, int floor_n = 16);

// Exact evaluation at n_points roots of unity with per-node SVD.
// Requires n_points >= 2*span + 1.
GridSamples sample(const MatLaurent& a, int n_points);

struct MixedNorm {
    double p = 2;          // outer exponent, inf_exponent for the grid max
    double q = 2;          // Schatten exponent: 1, 2 or inf_exponent
    double value = 0;
    int grid_n = 0;
    bool is_grid_max = false;
};

// L^p grid mean (max for p = inf) of pointwise Schatten-q norms.
MixedNorm mixed_norm(const GridSamples& g, double p, double q);

struct RankProfile {
    std::vector<int> per_node;
    int essential = 0;   // mode over nodes
    int max_rank = 0;
    bool ambiguous = false;  // mode covers < 99% of nodes
};

// Per-node numerical rank: count of singular values > tol * s0(node).
RankProfile rank_profile(const GridSamples& g, double tol = 1e-9);

// max over nodes of ||A(z)^* A(z) - I|| <= tol.
bool is_unitary_valued(const GridSamples& g, double tol = 1e-10);

// Analytic and unitary-valued on the guard grid.
bool is_inner(const MatLaurent& a, double tol = 1e-10);

// Convenience norms used throughout the bound machinery; all grid values
// at the guard size unless a larger n is passed.
double norm_linf_s1(const MatLaurent& a, int n_points = 0);
double norm_linf_op(const MatLaurent& a, int n_points = 0);
double norm_l2_op(const MatLaurent& a, int n_points = 0);
double norm_l1_op(const MatLaurent& a, int n_points = 0);
// Exact L2(Frobenius) norm by Parseval.
double norm_l2_frobenius(const MatLaurent& a);

}  // namespace superopt

#endif
