#ifndef SUPEROPT_TRIGPOLY_HPP
#define SUPEROPT_TRIGPOLY_HPP

#include <complex>
#include <map>
#include <stdexcept>

#include <Eigen/Dense>

namespace superopt {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

// Matrix-valued Laurent polynomial on the unit circle, stored as a sparse
// map degree -> Fourier coefficient.  Canonical form: no stored coefficient
// has max-entry magnitude below canon_tol.
struct MatLaurent {
    int rows = 0;
    int cols = 0;
    std::map<int, Mat> coeffs;
};

inline constexpr double canon_tol = 1e-14;

MatLaurent make_symbol(int rows, int cols);
MatLaurent identity_symbol(int n);

// Inserts/accumulates a coefficient; keeps canonical form.
void add_coeff(MatLaurent& a, int deg, const Mat& m);
void set_coeff(MatLaurent& a, int deg, const Mat& m);

// Zero matrix if the degree is absent.
Mat coeff(const MatLaurent& a, int deg);

void canonicalize(MatLaurent& a);
bool is_zero(const MatLaurent& a);

int min_degree(const MatLaurent& a);   // 0 for the zero symbol
int max_degree(const MatLaurent& a);   // 0 for the zero symbol
int degree_span(const MatLaurent& a);  // max - min, 0 for the zero symbol

Mat eval(const MatLaurent& a, cplx z);

MatLaurent add(const MatLaurent& a, const MatLaurent& b);
MatLaurent scale(const MatLaurent& a, cplx s);
MatLaurent mul(const MatLaurent& a, const MatLaurent& b);

// Monomial shift: z^k * a.
MatLaurent shift(const MatLaurent& a, int k);

// zeta |-> a(zeta)^* on |zeta| = 1; coefficient at j is conj-transpose of
// the coefficient at -j.
MatLaurent adjoint_on_circle(const MatLaurent& a);

// Exact Parseval evaluation of the integral of trace(phi psi) dm.
struct PairingValue {
    cplx value;
};
PairingValue pairing(const MatLaurent& phi, const MatLaurent& psi);

// Restriction of the support to j >= 0 (j >= 1 when keep_zero is false).
MatLaurent analytic_part(const MatLaurent& a, bool keep_zero = true);
// Complement of analytic_part with the same keep_zero convention.
MatLaurent coanalytic_part(const MatLaurent& a, bool keep_zero = true);

enum class Space { Hinf, H1_0, H2, L };
bool membership(const MatLaurent& a, Space space);

MatLaurent truncate_degrees(const MatLaurent& a, int lo, int hi);

double max_coeff_abs(const MatLaurent& a);

}  // namespace superopt

#endif
