#include "verlinde/fb_calculus.hpp"

namespace verlinde {

namespace {

std::string tuple4(const ModularData& md, int a1, int a2, int a3, int a4) {
  return "(" + md.labels[a1] + "," + md.labels[a2] + "," + md.labels[a3] + "," + md.labels[a4] +
         ")";
}

std::string tuple6(const ModularData& md, const std::array<int, 6>& k) {
  std::string s = "(";
  for (int i = 0; i < 6; ++i) s += md.labels[k[i]] + (i < 5 ? "," : ")");
  return s;
}

std::string tuple3(const ModularData& md, int a1, int a2, int a3) {
  return "(" + md.labels[a1] + "," + md.labels[a2] + ";" + md.labels[a3] + ")";
}

bool admissible6(const FusionTable& nt, const std::array<int, 6>& k) {
  auto [a1, a2, a3, a4, a5, a6] = k;
  return nt.N(a1, a5, a4) * nt.N(a2, a3, a5) == 1 && nt.N(a6, a3, a4) * nt.N(a1, a2, a6) == 1;
}

}  // namespace

FTensor make_ftensor(const ModularData& md, std::map<std::array<int, 6>, PComplex> F,
                     std::map<std::array<int, 3>, PComplex> sigma12,
                     std::map<std::array<int, 3>, PComplex> sigma23, const Tolerances& tol) {
  FTensor ft;
  ft.md = md;
  ft.nt = fusion_table(md, tol);
  const int n = md.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (ft.nt.N(a, b, c) > 1)
          throw InputError("theory \"" + md.name + "\" is not multiplicity-free at " +
                           tuple3(md, a, b, c));
  ft.F = std::move(F);
  ft.sigma12 = std::move(sigma12);
  ft.sigma23 = std::move(sigma23);

  for (const auto& [k, v] : ft.F)
    if (!admissible6(ft.nt, k)) throw InputError("inadmissible F tuple " + tuple6(md, k));
  for (auto* tbl : {&ft.sigma12, &ft.sigma23})
    for (const auto& [k, v] : *tbl)
      if (ft.nt.N(k[0], k[1], k[2]) != 1)
        throw InputError("sigma scalar on inadmissible triple " + tuple3(md, k[0], k[1], k[2]));

  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2)
      for (int a3 = 0; a3 < n; ++a3) {
        if (ft.nt.N(a1, a2, a3) == 1) {
          if (!ft.sigma12.count({a1, a2, a3}))
            throw InputError("missing sigma12 scalar at " + tuple3(md, a1, a2, a3));
          if (!ft.sigma23.count({a1, a2, a3}))
            throw InputError("missing sigma23 scalar at " + tuple3(md, a1, a2, a3));
        }
        for (int a4 = 0; a4 < n; ++a4)
          for (int a5 = 0; a5 < n; ++a5)
            for (int a6 = 0; a6 < n; ++a6) {
              std::array<int, 6> k{a1, a2, a3, a4, a5, a6};
              if (admissible6(ft.nt, k) && !ft.F.count(k))
                throw InputError("missing F entry at " + tuple6(md, k));
            }
      }
  return ft;
}

std::vector<int> product_channels(const FTensor& ft, int a1, int a2, int a3, int a4) {
  std::vector<int> out;
  for (int a5 = 0; a5 < ft.md.size(); ++a5)
    if (ft.nt.N(a1, a5, a4) * ft.nt.N(a2, a3, a5) == 1) out.push_back(a5);
  return out;
}

std::vector<int> iterate_channels(const FTensor& ft, int a1, int a2, int a3, int a4) {
  std::vector<int> out;
  for (int a6 = 0; a6 < ft.md.size(); ++a6)
    if (ft.nt.N(a6, a3, a4) * ft.nt.N(a1, a2, a6) == 1) out.push_back(a6);
  return out;
}

PComplex f_entry(const FTensor& ft, int a1, int a2, int a3, int a4, int a5, int a6) {
  auto it = ft.F.find({a1, a2, a3, a4, a5, a6});
  if (it == ft.F.end())
    throw CheckFailure("missing F entry", Real(0), tuple6(ft.md, {a1, a2, a3, a4, a5, a6}));
  return it->second;
}

PComplex sigma12_scalar(const FTensor& ft, int a1, int a2, int a3) {
  auto it = ft.sigma12.find({a1, a2, a3});
  if (it == ft.sigma12.end())
    throw CheckFailure("missing sigma12 scalar", Real(0), tuple3(ft.md, a1, a2, a3));
  return it->second;
}

PComplex sigma23_scalar(const FTensor& ft, int a1, int a2, int a3) {
  auto it = ft.sigma23.find({a1, a2, a3});
  if (it == ft.sigma23.end())
    throw CheckFailure("missing sigma23 scalar", Real(0), tuple3(ft.md, a1, a2, a3));
  return it->second;
}

PComplex sigma123_scalar(const FTensor& ft, int a1, int a2, int a3) {
  const auto& d = ft.md.dual;
  return sigma23_scalar(ft, a1, a2, a3) * sigma12_scalar(ft, a1, d[a3], d[a2]);
}

PComplex sigma132_scalar(const FTensor& ft, int a1, int a2, int a3) {
  return sigma12_scalar(ft, a1, a2, a3) * sigma23_scalar(ft, a2, a1, a3);
}

CMatrix f_matrix(const FTensor& ft, int a1, int a2, int a3, int a4) {
  auto prods = product_channels(ft, a1, a2, a3, a4);
  auto iters = iterate_channels(ft, a1, a2, a3, a4);
  if (prods.size() != iters.size())
    throw InputError("fusing matrix not square at " + tuple4(ft.md, a1, a2, a3, a4));
  CMatrix m(int(prods.size()), int(iters.size()));
  for (size_t i = 0; i < prods.size(); ++i)
    for (size_t j = 0; j < iters.size(); ++j)
      m.at(int(i), int(j)) = f_entry(ft, a1, a2, a3, a4, prods[i], iters[j]);
  return m;
}

CMatrix f_inverse(const FTensor& ft, int a1, int a2, int a3, int a4) {
  CMatrix m = f_matrix(ft, a1, a2, a3, a4);
  Real dm = determinant(m).abs();
  Tolerances tol;
  if (dm <= tol.fb)
    throw CheckFailure("fusing matrix singular", dm, tuple4(ft.md, a1, a2, a3, a4));
  return inverse(m);
}

CMatrix braiding_square(const FTensor& ft, int r, int a1, int a2, int a3, int a4) {
  auto prods = product_channels(ft, a1, a2, a3, a4);
  auto iters = iterate_channels(ft, a1, a2, a3, a4);
  CMatrix finv = f_inverse(ft, a1, a2, a3, a4);
  const int np = int(prods.size()), ni = int(iters.size());
  CMatrix out(np, np);
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j) {
      PComplex acc;
      for (int t = 0; t < ni; ++t) {
        int a7 = iters[t];
        PComplex mono =
            phase(Rational(2 * r + 1) * (ft.md.h[a7] - ft.md.h[a1] - ft.md.h[a2]));
        acc += f_entry(ft, a1, a2, a3, a4, prods[i], a7) * mono * finv.at(t, j);
      }
      out.at(i, j) = acc;
    }
  return out;
}

Real check_sigma_relations(const FTensor& ft) {
  const int n = ft.md.size();
  const auto& d = ft.md.dual;
  PComplex one(Real(1));
  Real worst(0);
  auto bump = [&](const PComplex& diff) {
    Real v = diff.abs();
    if (v > worst) worst = v;
  };
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2)
      for (int a3 = 0; a3 < n; ++a3) {
        if (ft.nt.N(a1, a2, a3) != 1) continue;
        bump(sigma12_scalar(ft, a1, a2, a3) * sigma12_scalar(ft, a2, a1, a3) - one);
        bump(sigma23_scalar(ft, a1, a2, a3) * sigma23_scalar(ft, a1, d[a3], d[a2]) - one);
        PComplex lhs = sigma23_scalar(ft, a1, a2, a3) * sigma12_scalar(ft, a1, d[a3], d[a2]) *
                       sigma23_scalar(ft, d[a3], a1, d[a2]) * sigma12_scalar(ft, d[a3], a2, d[a1]);
        PComplex rhs = sigma12_scalar(ft, a1, a2, a3) * sigma23_scalar(ft, a2, a1, a3);
        bump(lhs - rhs);
      }
  return worst;
}

Real check_vacuum_normalization(const FTensor& ft) {
  const int n = ft.md.size();
  const int e = ft.md.vacuum;
  const auto& d = ft.md.dual;
  PComplex one(Real(1));
  Real worst(0);
  auto bump = [&](const PComplex& diff) {
    Real v = diff.abs();
    if (v > worst) worst = v;
  };
  // Vacuum in an outer lower position forces the 1x1 entry 1.
  for (const auto& [k, v] : ft.F)
    if (k[0] == e || k[1] == e || k[2] == e) bump(v - one);
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2)
      for (int a3 = 0; a3 < n; ++a3) {
        if (ft.nt.N(a1, a2, a3) != 1) continue;
        // fusing3 pattern
        bump(f_entry(ft, d[a3], a1, a2, e, a3, d[a2]) - sigma123_scalar(ft, a1, a2, a3));
        // fusing4 pattern
        bump(sigma123_scalar(ft, a2, d[a3], d[a1]) * sigma123_scalar(ft, a1, a2, a3) *
                 f_entry(ft, a2, d[a3], a1, e, d[a2], d[a1]) -
             one);
      }
  return worst;
}

Real check_fusing_inverse_symmetry(const FTensor& ft) {
  const int n = ft.md.size();
  Real worst(0);
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2)
      for (int a3 = 0; a3 < n; ++a3)
        for (int a4 = 0; a4 < n; ++a4) {
          auto prods = product_channels(ft, a1, a2, a3, a4);
          auto iters = iterate_channels(ft, a1, a2, a3, a4);
          if (prods.empty()) continue;
          CMatrix finv = f_inverse(ft, a1, a2, a3, a4);
          for (size_t t = 0; t < iters.size(); ++t)
            for (size_t s = 0; s < prods.size(); ++s) {
              int a6 = iters[t], a5 = prods[s];
              PComplex scalar = sigma12_scalar(ft, a6, a3, a4) * sigma12_scalar(ft, a1, a2, a6) /
                                (sigma12_scalar(ft, a1, a5, a4) * sigma12_scalar(ft, a2, a3, a5));
              PComplex rhs = scalar * f_entry(ft, a3, a2, a1, a4, a6, a5);
              Real v = (finv.at(int(t), int(s)) - rhs).abs();
              if (v > worst) worst = v;
            }
        }
  return worst;
}

Real check_fusing_symmetry(const FTensor& ft) {
  const auto& d = ft.md.dual;
  Real worst(0);
  for (const auto& [k, val] : ft.F) {
    auto [a1, a2, a3, a4, a5, a6] = k;
    PComplex scalar = sigma132_scalar(ft, a2, a3, a5) * sigma123_scalar(ft, a1, a5, a4) /
                      (sigma123_scalar(ft, a1, a2, a6) * sigma132_scalar(ft, a6, a3, a4));
    PComplex rhs = scalar * f_entry(ft, a3, d[a4], a1, d[a2], d[a5], d[a6]);
    Real v = (val - rhs).abs();
    if (v > worst) worst = v;
  }
  return worst;
}

Real check_braiding_vacuum_identity(const FTensor& ft, int r) {
  const int n = ft.md.size();
  const int e = ft.md.vacuum;
  Real worst(0);
  for (int a2 = 0; a2 < n; ++a2)
    for (int a3 = 0; a3 < n; ++a3)
      for (int a4 = 0; a4 < n; ++a4) {
        auto prods = product_channels(ft, e, a2, a3, a4);
        if (prods.empty()) continue;
        CMatrix b = braiding_square(ft, r, e, a2, a3, a4);
        Real v = max_abs(b - CMatrix::identity(int(prods.size())));
        if (v > worst) worst = v;
      }
  return worst;
}

namespace {

// Eigenvalues in closed form for 1x1 and 2x2; larger blocks compared through
// power sums of the spectrum.
std::vector<PComplex> small_eigenvalues(const CMatrix& m) {
  if (m.rows() == 1) return {m.at(0, 0)};
  if (m.rows() == 2) {
    PComplex tr = m.at(0, 0) + m.at(1, 1);
    PComplex det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    PComplex disc = tr * tr - PComplex(Real(4)) * det;
    PComplex root = disc.is_zero() ? PComplex() : pow_principal(disc, Real(1) / 2);
    PComplex half(Real(1) / 2);
    return {(tr + root) * half, (tr - root) * half};
  }
  throw DomainError("closed-form eigenvalues only for n <= 2");
}

Real multiset_match(std::vector<PComplex> got, std::vector<PComplex> want) {
  // Greedy nearest pairing; adequate for the tiny, well-separated spectra here.
  Real worst(0);
  for (const auto& w : want) {
    size_t best = 0;
    Real bd = (got[0] - w).abs();
    for (size_t i = 1; i < got.size(); ++i) {
      Real v = (got[i] - w).abs();
      if (v < bd) {
        bd = v;
        best = i;
      }
    }
    if (bd > worst) worst = bd;
    got.erase(got.begin() + best);
  }
  return worst;
}

}  // namespace

Real check_monodromy_spectrum(const FTensor& ft, int r) {
  const int n = ft.md.size();
  Real worst(0);
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2)
      for (int a3 = 0; a3 < n; ++a3)
        for (int a4 = 0; a4 < n; ++a4) {
          auto prods = product_channels(ft, a1, a2, a3, a4);
          auto iters = iterate_channels(ft, a1, a2, a3, a4);
          if (prods.empty() || prods.size() != iters.size()) continue;
          CMatrix b = braiding_square(ft, r, a1, a2, a3, a4);
          std::vector<PComplex> want;
          for (int a7 : iters)
            want.push_back(phase(Rational(2 * r + 1) * (ft.md.h[a7] - ft.md.h[a1] - ft.md.h[a2])));
          Real v(0);
          if (b.rows() <= 2) {
            v = multiset_match(small_eigenvalues(b), want);
          } else {
            // compare power sums tr(B^k) with sum of claimed eigenvalue powers
            CMatrix p = b;
            for (int k = 1; k <= b.rows(); ++k) {
              PComplex trace, expect;
              for (int i = 0; i < p.rows(); ++i) trace += p.at(i, i);
              for (auto& w : want) expect += pow_principal(w, Real(k));
              Real dv = (trace - expect).abs();
              if (dv > v) v = dv;
              p = p * b;
            }
          }
          if (v > worst) worst = v;
        }
  return worst;
}

namespace {

// The double-F product of the first Moore-Seiberg formula; zero when the
// triple does not fuse.
PComplex ms1_lhs(const FTensor& ft, int a1, int a2, int a3) {
  if (ft.nt.N(a1, a2, a3) != 1) return PComplex();
  const auto& d = ft.md.dual;
  const int e = ft.md.vacuum;
  return f_entry(ft, a2, d[a3], a3, a2, e, d[a1]) * sigma123_scalar(ft, a2, d[a3], d[a1]) *
         f_entry(ft, d[a1], a1, a2, a2, a3, e);
}

PComplex f_normalizer(const FTensor& ft, int a2) {
  const int e = ft.md.vacuum;
  return f_entry(ft, a2, ft.md.dual[a2], a2, a2, e, e);
}

// (B^(-1))^2 entry at the vacuum channel for outer labels (a4,a2',a2,a4).
PComplex b2_vacuum_entry(const FTensor& ft, int a4, int a2) {
  const int e = ft.md.vacuum;
  auto prods = product_channels(ft, a4, ft.md.dual[a2], a2, a4);
  CMatrix b = braiding_square(ft, -1, a4, ft.md.dual[a2], a2, a4);
  int idx = -1;
  for (size_t i = 0; i < prods.size(); ++i)
    if (prods[i] == e) idx = int(i);
  if (idx < 0)
    throw CheckFailure("missing vacuum channel", Real(0),
                       tuple4(ft.md, a4, ft.md.dual[a2], a2, a4));
  return b.at(idx, idx);
}

}  // namespace

Real ms_formula1(const FTensor& ft) {
  const int n = ft.md.size();
  Real worst(0);
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2)
      for (int a3 = 0; a3 < n; ++a3) {
        PComplex rhs = PComplex(Real(ft.nt.N(a1, a2, a3))) * f_normalizer(ft, a2);
        Real v = (ms1_lhs(ft, a1, a2, a3) - rhs).abs();
        if (v > worst) worst = v;
      }
  return worst;
}

Real ms_formula2(const FTensor& ft) {
  const int n = ft.md.size();
  CMatrix sinv = s_inverse(ft.md).inv;
  std::vector<std::vector<PComplex>> b2(static_cast<size_t>(n),
                                        std::vector<PComplex>(static_cast<size_t>(n)));
  for (int a4 = 0; a4 < n; ++a4)
    for (int a2 = 0; a2 < n; ++a2) b2[a4][a2] = b2_vacuum_entry(ft, a4, a2);
  Real worst(0);
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2)
      for (int a3 = 0; a3 < n; ++a3) {
        PComplex lhs;
        for (int a4 = 0; a4 < n; ++a4)
          lhs += ft.md.S.at(a1, a4) * b2[a4][a2] * sinv.at(a4, a3);
        Real v = (lhs - ms1_lhs(ft, a1, a2, a3)).abs();
        if (v > worst) worst = v;
      }
  return worst;
}

Real verify_lambda_consistency(const FTensor& ft, const Tolerances& tol) {
  const int n = ft.md.size();
  const int e = ft.md.vacuum;
  Real worst(0);
  for (int a2 = 0; a2 < n; ++a2) {
    PComplex nrm = f_normalizer(ft, a2);
    if (nrm.abs() <= tol.fb)
      throw CheckFailure("vacuum normalizer vanishes (Prop. nonzero)", nrm.abs(),
                         "(" + ft.md.labels[a2] + ")");
    for (int a4 = 0; a4 < n; ++a4) {
      PComplex lhs = b2_vacuum_entry(ft, a4, a2) / nrm;
      PComplex rhs = ft.md.S.at(a2, a4) / ft.md.S.at(e, a4);
      Real v = (lhs - rhs).abs();
      if (v > worst) worst = v;
    }
  }
  return worst;
}

}  // namespace verlinde
