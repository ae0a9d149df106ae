#pragma once

#include "verlinde/modular_data.hpp"

#include <vector>

namespace verlinde {

// Integer fusion tensor N_{a1 a2}^{a3} plus the per-label matrices
// N(a)_{a1}^{a2} = N_{a a1}^{a2}, in canonical label order.
struct FusionTable {
  ModularData base;
  std::vector<long long> tensor;  // flat [a1][a2][a3]
  Real max_round_residual;        // worst |Verlinde sum - nearest integer| seen while filling

  long long N(int a1, int a2, int a3) const {
    size_t n = base.labels.size();
    return tensor[(size_t(a1) * n + a2) * n + a3];
  }
  long long& N(int a1, int a2, int a3) {
    size_t n = base.labels.size();
    return tensor[(size_t(a1) * n + a2) * n + a3];
  }
  // N(a) as a complex matrix, rows a1, columns a2.
  CMatrix matrix(int a) const;
};

// lambda_{a2}^{a4} = S_{a2}^{a4} / S_e^{a4}, indexed by a4 in label order.
std::vector<PComplex> fusion_eigenvalues(const ModularData& md, int a2);

// Verlinde sum over a4 of S_{a1}^{a4} S_{a2}^{a4} S_{a4}^{a3'} / S_e^{a4},
// rounded to the nearest integer.  NonIntegerResidual when no integer is
// within tol.round; CheckFailure "Verlinde violation" when negative.  When
// given, `residual_out` receives |sum - result|.
long long fusion_coefficient(const ModularData& md, int a1, int a2, int a3,
                             const Tolerances& tol = Tolerances(), Real* residual_out = nullptr);

// Full tensor; validates the unit row, dual row, commutativity and
// nonnegativity exactly.
FusionTable fusion_table(const ModularData& md, const Tolerances& tol = Tolerances());

struct DiagonalizationResult {
  Real max_offdiag;    // worst off-diagonal modulus of S^-1 N(a2) S over all a2
  Real max_eigen_dev;  // worst |D_{a4 a4} - lambda_{a2}^{a4}|, matched by index
};

// Conjugates every N(a2) by S and compares against the eigenvalue vector.
DiagonalizationResult verify_diagonalization(const ModularData& md, const FusionTable& ft,
                                             const Tolerances& tol = Tolerances());

// Unit, dual, commutativity and associativity laws in exact integer
// arithmetic; failures carry a witness tuple.
VerificationReport verify_ring_axioms(const FusionTable& ft);

}  // namespace verlinde
