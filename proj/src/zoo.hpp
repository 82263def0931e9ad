#pragma once

#include "specfact.hpp"
#include "trigpoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace superopt {

// Finite product of elementary Moebius-type matrix factors behind a constant
// unitary: U * prod_j (I - P_j + b_{lambda_j}(z) P_j).
struct BlaschkePotapov {
    Mat unitary_const;
    std::vector<std::pair<cplx, Mat>> factors;
};

void bp_validate(const BlaschkePotapov& b);
int bp_degree(const BlaschkePotapov& b);

// Expand the product to an analytic symbol, truncated at degree_cap.  The
// dropped geometric tail and the grid unitarity defect are reported through
// the optional out-parameters.
MatLaurent blaschke_potapov_build(const BlaschkePotapov& b, int degree_cap,
                                  double* tail_bound = nullptr,
                                  double* inner_residual = nullptr);

enum class ClaimKind {
    pairing_abs,         // k, values = {expected |pairing|}
    sigma_exact,         // k, values = {sigma}
    sigma_range,         // k, values = {lo, hi}
    hankel_norm_value,   // values = {expected}
    order_exact,         // k = claimed order
    order_open,          // note carries the verdict text
    unitary_valued,      // no payload
    det_winding_value,   // values = {winding of det(phi)}
    svals_constant,      // values = pointwise s-values of phi - approximant
    approx_error_value,  // values = {trace-norm error of the approximant}
    approx_error_below,  // values = {strict upper comparator}
    witness_rank,        // k, values = {essential rank}
    witness_opnorm_const,  // k, values = {pointwise operator norm}
    representation_roundtrip  // k = n; witness admits the z h^2 Theta form
};

struct ZooClaim {
    std::string id;
    std::string anchor;
    ClaimKind kind = ClaimKind::pairing_abs;
    int k = 0;
    std::vector<double> values;
    std::string note;
};

struct ZooEntry {
    std::string name;
    std::string summary;
    MatLaurent phi;
    std::vector<double> known_t;
    std::map<int, MatLaurent> known_witnesses;
    std::optional<MatLaurent> approximant;
    std::vector<ZooClaim> claims;
};

// Diagonal symbol diag(t_j * zbar * conj(theta_j) * conj(h_j) / h_j) with an
// optional extra block, plus the matching diagonal witness diag(z theta_j
// h_j^2).  Each h_j is rescaled to unit L2 norm; the quotient conj(h)/h is
// expanded to degree_cap with a residual check.
ZooEntry diag_vba(const std::vector<double>& t,
                  const std::vector<ScalarLaurent>& thetas,
                  const std::vector<OuterFactor>& hs,
                  const std::optional<MatLaurent>& tail = std::nullopt,
                  int degree_cap = 160);

// The 2x2 unitary symbol whose best rank-two pairing stays strictly below the
// trace-norm error of its natural analytic candidate; returns (entry, F).
std::pair<ZooEntry, MatLaurent> strict_example_pair();

// 2x2 unitary polynomial symbol with a rank-two witness attaining pairing 2.
ZooEntry example_order2_unitary();

std::vector<std::string> zoo_names();
ZooEntry zoo_entry(const std::string& name);

}  // namespace superopt
