#pragma once

#include "verlinde/fusion.hpp"

#include <array>
#include <map>
#include <vector>

namespace verlinde {

// Multiplicity-free fusing-matrix data: F entries indexed by admissible
// 6-tuples (a1,a2,a3,a4;a5;a6) and the scalar tables for the sigma_12 /
// sigma_23 basis actions.  Channel conventions, for fixed outer labels
// (a1,a2,a3,a4):
//   product side   a5, admissible iff N_{a1 a5}^{a4} N_{a2 a3}^{a5} = 1
//   iterate side   a6, admissible iff N_{a6 a3}^{a4} N_{a1 a2}^{a6} = 1
// F maps products to iterates; sigma12 relabels (a1,a2;a3) -> (a2,a1;a3) and
// sigma23 relabels (a1,a2;a3) -> (a1,a3';a2').
struct FTensor {
  ModularData md;
  FusionTable nt;
  std::map<std::array<int, 6>, PComplex> F;
  std::map<std::array<int, 3>, PComplex> sigma12;
  std::map<std::array<int, 3>, PComplex> sigma23;
};

// Validates multiplicity-freeness, that every admissible tuple/triple is
// present exactly once, and that no spurious keys exist.
FTensor make_ftensor(const ModularData& md, std::map<std::array<int, 6>, PComplex> F,
                     std::map<std::array<int, 3>, PComplex> sigma12,
                     std::map<std::array<int, 3>, PComplex> sigma23,
                     const Tolerances& tol = Tolerances());

std::vector<int> product_channels(const FTensor& ft, int a1, int a2, int a3, int a4);
std::vector<int> iterate_channels(const FTensor& ft, int a1, int a2, int a3, int a4);

PComplex f_entry(const FTensor& ft, int a1, int a2, int a3, int a4, int a5, int a6);
PComplex sigma12_scalar(const FTensor& ft, int a1, int a2, int a3);
PComplex sigma23_scalar(const FTensor& ft, int a1, int a2, int a3);
// Composites sigma123 = sigma12 . sigma23 and sigma132 = sigma23 . sigma12,
// as scalars along the induced relabelings.
PComplex sigma123_scalar(const FTensor& ft, int a1, int a2, int a3);
PComplex sigma132_scalar(const FTensor& ft, int a1, int a2, int a3);

// Channel matrix [F], rows indexed by a5, columns by a6.
CMatrix f_matrix(const FTensor& ft, int a1, int a2, int a3, int a4);
// Numerical inverse; "fusing matrix singular" on a degenerate channel matrix.
CMatrix f_inverse(const FTensor& ft, int a1, int a2, int a3, int a4);

// (B^(r))^2 in the product basis: F . diag(e^{2(2r+1) pi i (h_{a7}-h_{a1}-h_{a2})}) . F^-1.
CMatrix braiding_square(const FTensor& ft, int r, int a1, int a2, int a3, int a4);

// Worst residuals over all admissible tuples/triples.
Real check_sigma_relations(const FTensor& ft);
Real check_vacuum_normalization(const FTensor& ft);
Real check_fusing_inverse_symmetry(const FTensor& ft);
Real check_fusing_symmetry(const FTensor& ft);
Real check_braiding_vacuum_identity(const FTensor& ft, int r);
Real check_monodromy_spectrum(const FTensor& ft, int r);
Real ms_formula1(const FTensor& ft);
Real ms_formula2(const FTensor& ft);
Real verify_lambda_consistency(const FTensor& ft, const Tolerances& tol = Tolerances());

}  // namespace verlinde
