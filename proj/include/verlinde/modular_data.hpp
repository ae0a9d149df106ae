#pragma once

#include "verlinde/numerics.hpp"
#include "verlinde/report.hpp"

#include <string>
#include <vector>

namespace verlinde {

// Residual thresholds.  The defaults are pinned; `verify --tol` replaces the
// identity thresholds uniformly.
struct Tolerances {
  Real modular;     // S symmetry, S^2 permutation entries, structure checks
  Real sinv;        // entrywise (S^-1) vs dual-permuted S
  Real diag;        // off-diagonal + eigenvalue residuals of S^-1 N(a) S
  Real round;       // integer rounding of Verlinde sums
  Real fb;          // fusing/braiding identities on fixture data
  Real vacuum_min;  // lower bound for min |S_e^a|

  Tolerances();
  static Tolerances uniform(const Real& tol);
};

// Modular data of a rational theory: labels, vacuum, duality, weights,
// central charge and the S-matrix.  Labels are indexed in declaration order;
// that order is the canonical matrix index order everywhere.
struct ModularData {
  std::string name;
  std::vector<std::string> labels;
  int vacuum = 0;
  std::vector<int> dual;    // label index -> dual label index
  std::vector<Rational> h;  // conformal weights
  Rational c;               // central charge
  CMatrix S;
  std::string source = "external-standard";  // provenance of the closed forms
  std::string notes;                         // e.g. documented h convention

  int size() const { return int(labels.size()); }
  // Index of a label id; InputError when unknown.
  int index(const std::string& id) const;
};

// One entry per structural invariant; overall pass iff all pass.
VerificationReport validate_structure(const ModularData& md, const Tolerances& tol = Tolerances());

// max_{a,b} |S_a^b - S_b^a|
Real check_symmetric(const ModularData& md);

struct ChargeConjugation {
  std::vector<int> perm;  // a -> a' as read off from S^2
  Real residual;          // worst |S^2 entry - {0,1}|
};

// Computes S^2, asserts it is a 0/1 permutation matrix and that the
// permutation is the dual map.  The two failure modes are distinct:
// "S^2 not a permutation" and "permutation disagrees with dual map".
ChargeConjugation charge_conjugation(const ModularData& md, const Tolerances& tol = Tolerances());

struct SInverse {
  CMatrix inv;    // from the linear solve
  Real residual;  // worst |(S^-1)_{a1}^{a2} - S_{a1}^{a2'}| and |... - S_{a1'}^{a2}|
};

// S^-1 by linear solve, checked entrywise against S with a dual-permuted
// index on either side.
SInverse s_inverse(const ModularData& md, const Tolerances& tol = Tolerances());

// min_a |S_e^a|
Real check_vacuum_row_nonzero(const ModularData& md);

}  // namespace verlinde
