#include "verlinde/fusion.hpp"

namespace verlinde {

namespace {

std::string triple(const ModularData& md, int a1, int a2, int a3) {
  return "(" + md.labels[a1] + "," + md.labels[a2] + "," + md.labels[a3] + ")";
}

}  // namespace

CMatrix FusionTable::matrix(int a) const {
  const int n = base.size();
  CMatrix m(n, n);
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2) m.at(a1, a2) = PComplex(Real(N(a, a1, a2)));
  return m;
}

std::vector<PComplex> fusion_eigenvalues(const ModularData& md, int a2) {
  const int n = md.size();
  std::vector<PComplex> out(static_cast<size_t>(n));
  for (int a4 = 0; a4 < n; ++a4) {
    if (md.S.at(md.vacuum, a4).is_zero())
      throw CheckFailure("vacuum row of S has a zero entry", Real(0), "(" + md.labels[a4] + ")");
    out[a4] = md.S.at(a2, a4) / md.S.at(md.vacuum, a4);
  }
  return out;
}

long long fusion_coefficient(const ModularData& md, int a1, int a2, int a3,
                             const Tolerances& tol, Real* residual_out) {
  const int n = md.size();
  PComplex sum;
  for (int a4 = 0; a4 < n; ++a4) {
    PComplex term = md.S.at(a1, a4) * md.S.at(a2, a4) * md.S.at(a4, md.dual[a3]);
    sum += term / md.S.at(md.vacuum, a4);
  }
  long long v;
  try {
    v = round_to_integer(sum, tol.round);
  } catch (const NonIntegerResidual& e) {
    throw CheckFailure("non-integer residual", e.residual, triple(md, a1, a2, a3));
  }
  if (residual_out) *residual_out = (sum - PComplex(Real(v))).abs();
  if (v < 0) throw CheckFailure("Verlinde violation", Real(v), triple(md, a1, a2, a3));
  return v;
}

FusionTable fusion_table(const ModularData& md, const Tolerances& tol) {
  const int n = md.size();
  FusionTable ft;
  ft.base = md;
  ft.max_round_residual = Real(0);
  ft.tensor.assign(size_t(n) * n * n, 0);
  // Hoisted factors: T[a4][a3] = S_{a4}^{a3'} / S_e^{a4}, U[a4] = S_{a1}^{a4} S_{a2}^{a4}.
  std::vector<PComplex> T(size_t(n) * n);
  for (int a4 = 0; a4 < n; ++a4) {
    PComplex inv_vac = PComplex(Real(1)) / md.S.at(md.vacuum, a4);
    for (int a3 = 0; a3 < n; ++a3) T[size_t(a4) * n + a3] = md.S.at(a4, md.dual[a3]) * inv_vac;
  }
  std::vector<PComplex> U(static_cast<size_t>(n));
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2) {
      for (int a4 = 0; a4 < n; ++a4) U[a4] = md.S.at(a1, a4) * md.S.at(a2, a4);
      for (int a3 = 0; a3 < n; ++a3) {
        PComplex sum;
        for (int a4 = 0; a4 < n; ++a4) sum += U[a4] * T[size_t(a4) * n + a3];
        long long v;
        try {
          v = round_to_integer(sum, tol.round);
        } catch (const NonIntegerResidual& e) {
          throw CheckFailure("non-integer residual", e.residual, triple(md, a1, a2, a3));
        }
        if (v < 0) throw CheckFailure("Verlinde violation", Real(v), triple(md, a1, a2, a3));
        Real res = (sum - PComplex(Real(v))).abs();
        if (res > ft.max_round_residual) ft.max_round_residual = res;
        ft.N(a1, a2, a3) = v;
      }
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (ft.N(md.vacuum, a, b) != (a == b ? 1 : 0))
        throw CheckFailure("unit row violated", Real(ft.N(md.vacuum, a, b)),
                           triple(md, md.vacuum, a, b));
      if (ft.N(a, b, md.vacuum) != (md.dual[a] == b ? 1 : 0))
        throw CheckFailure("dual row violated", Real(ft.N(a, b, md.vacuum)),
                           triple(md, a, b, md.vacuum));
      for (int c = 0; c < n; ++c)
        if (ft.N(a, b, c) != ft.N(b, a, c))
          throw CheckFailure("commutativity violated", Real(ft.N(a, b, c)), triple(md, a, b, c));
    }
  return ft;
}

DiagonalizationResult verify_diagonalization(const ModularData& md, const FusionTable& ft,
                                             const Tolerances& tol) {
  const int n = md.size();
  CMatrix sinv = s_inverse(md, tol).inv;
  DiagonalizationResult res{Real(0), Real(0)};
  for (int a2 = 0; a2 < n; ++a2) {
    // D_{a4}^{a5} = sum (S^-1)_{a4}^{a1} N_{a1 a2}^{a3} S_{a3}^{a5}; the
    // middle factor indexed (a1 rows, a3 columns) is N(a2) by commutativity.
    CMatrix N(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) N.at(r, c) = PComplex(Real(ft.N(r, a2, c)));
    CMatrix D = sinv * N * md.S;
    std::vector<PComplex> lambda = fusion_eigenvalues(md, a2);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) {
          Real dev = (D.at(i, i) - lambda[i]).abs();
          if (dev > res.max_eigen_dev) res.max_eigen_dev = dev;
        } else {
          Real v = D.at(i, j).abs();
          if (v > res.max_offdiag) res.max_offdiag = v;
        }
      }
  }
  return res;
}

VerificationReport verify_ring_axioms(const FusionTable& ft) {
  const ModularData& md = ft.base;
  const int n = md.size();
  VerificationReport rep;
  rep.theory = md.name;
  rep.precision_bits = precision_bits();
  Real zero(0), one(1);

  auto law = [&](const std::string& name, const std::string& anchor, bool ok,
                 const std::string& witness) {
    rep.checks.push_back(ok ? CheckEntry::pass(name, anchor, zero)
                            : CheckEntry::fail(name, anchor, one, witness));
  };

  {
    bool ok = true;
    std::string w;
    for (int a = 0; ok && a < n; ++a)
      for (int b = 0; ok && b < n; ++b)
        if (ft.N(md.vacuum, a, b) != (a == b ? 1 : 0)) {
          ok = false;
          w = triple(md, md.vacuum, a, b);
        }
    law("ring unit law", "N-unit", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; ok && a < n; ++a)
      for (int b = 0; ok && b < n; ++b)
        if (ft.N(a, b, md.vacuum) != (md.dual[a] == b ? 1 : 0)) {
          ok = false;
          w = triple(md, a, b, md.vacuum);
        }
    law("ring dual law", "N-dual", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; ok && a < n; ++a)
      for (int b = 0; ok && b < n; ++b)
        for (int c = 0; ok && c < n; ++c)
          if (ft.N(a, b, c) != ft.N(b, a, c)) {
            ok = false;
            w = triple(md, a, b, c);
          }
    law("ring commutativity", "N-commutative", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a1 = 0; ok && a1 < n; ++a1)
      for (int a2 = 0; ok && a2 < n; ++a2)
        for (int a3 = 0; ok && a3 < n; ++a3)
          for (int c = 0; ok && c < n; ++c) {
            long long lhs = 0, rhs = 0;
            for (int b = 0; b < n; ++b) {
              lhs += ft.N(a1, a2, b) * ft.N(b, a3, c);
              rhs += ft.N(a2, a3, b) * ft.N(a1, b, c);
            }
            if (lhs != rhs) {
              ok = false;
              w = "(" + md.labels[a1] + "," + md.labels[a2] + "," + md.labels[a3] + ";" +
                  md.labels[c] + ")";
            }
          }
    law("ring associativity", "ring-associativity", ok, w);
  }
  return rep;
}

}  // namespace verlinde
