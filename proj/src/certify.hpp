#pragma once

#include "report.hpp"
#include "specfact.hpp"
#include "trigpoly.hpp"
#include "zoo.hpp"

namespace superopt {

// Membership, rank, unit-ball, and pairing checks for a claimed rank-k
// witness; consistency of the claimed value against the computed bound pair.
CertReport check_k_extremal(const MatLaurent& phi, const MatLaurent& psi,
                            int k, double sigma_claim, double tol = 1e-9);

// If |trace(AB)| >= (1 - tol) * ||A||_op * ||B||_S1 and rank(A) <= k, the
// aligned-pair rank transfer predicts rank(B) <= k.  Returns whether the
// prediction holds (vacuously true when the hypothesis is empty).
bool check_trace_alignment_rank(const Mat& A, const Mat& B, int k,
                                double tol = 1e-9);

// Pointwise consequences of a best rank-k approximant Q with maximizing
// vector candidate F: the product singular-value identity, constancy of the
// leading partial sum, and vanishing of the trailing singular values.
CertReport check_best_approx_consequences(const MatLaurent& phi,
                                          const MatLaurent& q, int k,
                                          const MatLaurent& F,
                                          double tol = 1e-8);

// Order certificate from a stored full-sum witness: pairing equals the sum of
// the nonzero weights, the last nonzero weight is positive, and the partial
// sums are strictly increasing at the end.  Missing data yields inconclusive
// checks, never a fabricated verdict.
CertReport certify_order(const ZooEntry& entry, double tol = 1e-9);

struct Extraction {
    OuterFactor h;
    MatLaurent theta;
    CertReport report;
};

// For unitary-valued U and a witness with pairing n, split psi = z h^2 Theta:
// h outer from the pointwise norm, Theta inner, with the determinant and
// trace identities checked multiplicatively on coefficients.
Extraction extract_unitary_representation(const MatLaurent& u,
                                          const MatLaurent& psi,
                                          double tol = 1e-8);

// Re-verify every claim an entry carries.
CertReport verify_entry(const ZooEntry& entry, double tol = 1e-9);

// Run the whole registry through verify_entry and merge the reports.
CertReport verify_all(double tol = 1e-9);

}  // namespace superopt
