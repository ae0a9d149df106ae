#include "verlinde/modular_data.hpp"

#include <set>

namespace verlinde {

Tolerances::Tolerances()
    : modular(real_from_string("1e-20")),
      sinv(real_from_string("1e-18")),
      diag(real_from_string("1e-18")),
      round(real_from_string("1e-20")),
      fb(real_from_string("1e-12")),
      vacuum_min(real_from_string("1e-10")) {}

Tolerances Tolerances::uniform(const Real& tol) {
  Tolerances t;
  t.modular = t.sinv = t.diag = t.round = t.fb = tol;
  return t;
}

int ModularData::index(const std::string& id) const {
  for (int i = 0; i < size(); ++i)
    if (labels[i] == id) return i;
  throw InputError("unknown label \"" + id + "\" in theory \"" + name + "\"");
}

VerificationReport validate_structure(const ModularData& md, const Tolerances& tol) {
  VerificationReport rep;
  rep.theory = md.name;
  rep.precision_bits = precision_bits();
  const int n = md.size();
  Real zero(0), one(1);

  {
    std::set<std::string> seen;
    bool ok = n > 0;
    std::string bad;
    for (const auto& l : md.labels) {
      if (l.empty() || !seen.insert(l).second) {
        ok = false;
        bad = l;
      }
    }
    rep.checks.push_back(ok ? CheckEntry::pass("structure: labels nonempty and unique", "A-set", zero)
                            : CheckEntry::fail("structure: labels nonempty and unique", "A-set",
                                               one, bad));
  }
  {
    bool ok = int(md.dual.size()) == n;
    std::string bad;
    for (int a = 0; ok && a < n; ++a) {
      if (md.dual[a] < 0 || md.dual[a] >= n || md.dual[md.dual[a]] != a) {
        ok = false;
        bad = md.labels[a];
      }
    }
    rep.checks.push_back(ok ? CheckEntry::pass("structure: dual is an involution", "dual-map", zero)
                            : CheckEntry::fail("structure: dual is an involution", "dual-map",
                                               one, bad));
  }
  {
    bool ok = n > 0 && md.vacuum >= 0 && md.vacuum < n && md.dual[md.vacuum] == md.vacuum;
    rep.checks.push_back(ok ? CheckEntry::pass("structure: vacuum is self-dual", "e-dual", zero)
                            : CheckEntry::fail("structure: vacuum is self-dual", "e-dual", one,
                                               n > 0 ? md.labels[md.vacuum] : ""));
  }
  {
    bool ok = int(md.h.size()) == n && md.h[md.vacuum] == Rational(0);
    rep.checks.push_back(ok ? CheckEntry::pass("structure: vacuum weight is zero", "h-grading", zero)
                            : CheckEntry::fail("structure: vacuum weight is zero", "h-grading",
                                               one, md.labels[md.vacuum]));
  }
  {
    bool square = md.S.rows() == n && md.S.cols() == n;
    Real dm(0);
    if (square) dm = determinant(md.S).abs();
    bool ok = square && dm > tol.modular;
    rep.checks.push_back(ok ? CheckEntry::pass("structure: S square and invertible", "S-matrix", dm)
                            : CheckEntry::fail("structure: S square and invertible", "S-matrix", dm));
  }
  return rep;
}

Real check_symmetric(const ModularData& md) {
  Real worst(0);
  for (int a = 0; a < md.size(); ++a)
    for (int b = a + 1; b < md.size(); ++b) {
      Real v = (md.S.at(a, b) - md.S.at(b, a)).abs();
      if (v > worst) worst = v;
    }
  return worst;
}

ChargeConjugation charge_conjugation(const ModularData& md, const Tolerances& tol) {
  const int n = md.size();
  CMatrix s2 = md.S * md.S;
  ChargeConjugation out;
  out.perm.assign(n, -1);
  out.residual = Real(0);
  Real one(1);
  // Full scan first so a failure carries the worst residual, not the first.
  std::string witness;
  std::vector<int> col_used(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Real d0 = s2.at(i, j).abs();
      Real d1 = (s2.at(i, j) - PComplex(one)).abs();
      bool near_one = d1 < d0;
      Real dev = near_one ? d1 : d0;
      if (dev > out.residual) out.residual = dev;
      if (dev > tol.modular && witness.empty())
        witness = "(" + md.labels[i] + "," + md.labels[j] + ")";
      if (near_one) {
        if (out.perm[i] != -1 && witness.empty()) witness = "(" + md.labels[i] + ")";
        out.perm[i] = j;
        ++col_used[j];
      }
    }
  bool bijective = witness.empty();
  for (int i = 0; bijective && i < n; ++i)
    if (out.perm[i] == -1 || col_used[i] != 1) {
      bijective = false;
      witness = "(" + md.labels[i] + ")";
    }
  if (!witness.empty() || out.residual > tol.modular)
    throw CheckFailure("S^2 not a permutation", out.residual, witness);
  for (int i = 0; i < n; ++i)
    if (out.perm[i] != md.dual[i])
      throw CheckFailure("permutation disagrees with dual map", out.residual,
                         "(" + md.labels[i] + ")");
  return out;
}

SInverse s_inverse(const ModularData& md, const Tolerances& tol) {
  SInverse out;
  try {
    out.inv = inverse(md.S);
  } catch (const DomainError&) {
    throw CheckFailure("S numerically singular", Real(0));
  }
  out.residual = Real(0);
  const int n = md.size();
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2) {
      Real d1 = (out.inv.at(a1, a2) - md.S.at(a1, md.dual[a2])).abs();
      Real d2 = (out.inv.at(a1, a2) - md.S.at(md.dual[a1], a2)).abs();
      Real d = d1 > d2 ? d1 : d2;
      if (d > out.residual) out.residual = d;
    }
  if (out.residual > tol.sinv)
    throw CheckFailure("S inverse differs from dual-permuted S", out.residual);
  return out;
}

Real check_vacuum_row_nonzero(const ModularData& md) {
  Real best = md.S.at(md.vacuum, 0).abs();
  for (int a = 1; a < md.size(); ++a) {
    Real v = md.S.at(md.vacuum, a).abs();
    if (v < best) best = v;
  }
  return best;
}

}  // namespace verlinde
