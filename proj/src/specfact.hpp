#ifndef SUPEROPT_SPECFACT_HPP
#define SUPEROPT_SPECFACT_HPP

#include <vector>

#include "report.hpp"
#include "trigpoly.hpp"

namespace superopt {

// Scalar Laurent polynomial; same canonical-form convention as MatLaurent.
struct ScalarLaurent {
    std::map<int, cplx> coeffs;
};

ScalarLaurent scalar_constant(cplx c);
ScalarLaurent scalar_monomial(int deg, cplx c = 1.0);
void scalar_set(ScalarLaurent& a, int deg, cplx c);
cplx scalar_coeff(const ScalarLaurent& a, int deg);
void scalar_canonicalize(ScalarLaurent& a);
bool scalar_is_zero(const ScalarLaurent& a);
int scalar_min_degree(const ScalarLaurent& a);
int scalar_max_degree(const ScalarLaurent& a);
int scalar_span(const ScalarLaurent& a);

cplx scalar_eval(const ScalarLaurent& a, cplx z);
ScalarLaurent scalar_add(const ScalarLaurent& a, const ScalarLaurent& b);
ScalarLaurent scalar_scale(const ScalarLaurent& a, cplx s);
ScalarLaurent scalar_mul(const ScalarLaurent& a, const ScalarLaurent& b);
ScalarLaurent scalar_shift(const ScalarLaurent& a, int k);
// zeta |-> conj(a(zeta)) on the circle.
ScalarLaurent scalar_conj_on_circle(const ScalarLaurent& a);

MatLaurent to_matrix(const ScalarLaurent& a);
ScalarLaurent to_scalar(const MatLaurent& a);  // requires 1x1
MatLaurent mul_scalar(const ScalarLaurent& s, const MatLaurent& a);

// Exact determinant by cofactor expansion over scalar convolutions.
ScalarLaurent det_on_circle(const MatLaurent& a);
ScalarLaurent trace_of(const MatLaurent& a);

// Power-series inverse of an analytic polynomial with h(0) != 0, truncated
// to degrees 0..cap.
ScalarLaurent series_inverse(const ScalarLaurent& h, int cap);
// Power-series exp of an analytic polynomial (support >= 0), truncated.
ScalarLaurent series_exp(const ScalarLaurent& g, int cap);

// Roots of the polynomial sum_j c[j] w^j (c.back() != 0) via the companion
// matrix, with a short Newton polish.
std::vector<cplx> poly_roots(const std::vector<cplx>& c);

struct OuterFactor {
    ScalarLaurent h;        // analytic, h(0) > 0 unless degenerate
    double residual = 0.0;  // max grid deviation of |h|^2 from the target
    bool degenerate = false;
};

// Spectral factor of a nonnegative trigonometric polynomial rho:
// |h|^2 = rho on the circle, h outer (roots outside the open unit disk),
// h(0) > 0.  Throws if rho is not Hermitian or goes negative on the grid.
OuterFactor fejer_riesz(const ScalarLaurent& rho, double tol = 1e-9);

// Cepstral outer function with |h| = m on the grid of m.size() roots of
// unity; residual tracks |h|^2 against m^2.  Throws if m nearly vanishes.
OuterFactor outer_from_modulus(const std::vector<double>& m, int degree_cap);

// Argument-principle winding number on a grid, internally doubled until the
// integer is stable.  Throws if |u| dips below the Fredholm guard 1e-8.
int winding_number(const ScalarLaurent& u, int n_points);

// Fredholm index of the Toeplitz operator with symbol u: minus the winding.
int toeplitz_index(const ScalarLaurent& u, int n_points);

// Scalar certificate: constant modulus, Fredholm, index >= 1.
CertReport badly_approximable_certificate(const ScalarLaurent& phi,
                                          double tol = 1e-9);

}  // namespace superopt

#endif
