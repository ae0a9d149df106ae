#include "verlinde/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace verlinde {

namespace {

using boost::multiprecision::sin;
using boost::multiprecision::sqrt;

std::string spin_label(long long twoj) {
  if (twoj % 2 == 0) return std::to_string(twoj / 2);
  return std::to_string(twoj) + "/2";
}

// Kac-table representative: (r,s) or (p-r,q-s), whichever has smaller r*q+s.
struct KacLabel {
  long long r, s;
};

KacLabel kac_canonical(long long p, long long q, long long r, long long s) {
  long long r2 = p - r, s2 = q - s;
  if (r2 * q + s2 < r * q + s) return {r2, s2};
  return {r, s};
}

}  // namespace

ModularData gen_trivial() {
  ModularData md;
  md.name = "trivial";
  md.labels = {"1"};
  md.vacuum = 0;
  md.dual = {0};
  md.h = {Rational(0)};
  md.c = Rational(0);
  md.S = CMatrix(1, 1);
  md.S.at(0, 0) = PComplex(Real(1));
  return md;
}

ModularData gen_abelian(long long n) {
  if (n < 1) throw InputError("abelian model needs n >= 1");
  ModularData md;
  md.name = "z" + std::to_string(n);
  md.vacuum = 0;
  Real inv_sqrt_n = 1 / sqrt(Real(n));
  md.S = CMatrix(int(n), int(n));
  for (long long a = 0; a < n; ++a) {
    md.labels.push_back(std::to_string(a));
    md.dual.push_back(int((n - a) % n));
    md.h.push_back(Rational(a * (n - a), 2 * n));
    for (long long b = 0; b < n; ++b) {
      PComplex w = phase(Rational(a * b, n));
      md.S.at(int(a), int(b)) = PComplex(w.re * inv_sqrt_n, w.im * inv_sqrt_n);
    }
  }
  md.c = n == 1 ? Rational(0) : Rational(1);
  md.notes = "h[a] = a(n-a)/(2n) from the standard quadratic form; c = 1 (0 when n = 1)";
  return md;
}

ModularData gen_su2(long long k) {
  if (k < 1) throw InputError("su2 model needs level k >= 1");
  ModularData md;
  md.name = "su2_" + std::to_string(k);
  md.vacuum = 0;
  const long long m = k + 2;
  int n = int(k + 1);
  md.S = CMatrix(n, n);
  Real norm = sqrt(Real(2) / Real(m));
  Real pi = real_pi();
  for (long long t1 = 0; t1 <= k; ++t1) {  // t = 2j
    md.labels.push_back(spin_label(t1));
    md.dual.push_back(int(t1));
    md.h.push_back(Rational(t1 * (t1 + 2), 4 * m));  // j(j+1)/(k+2)
    for (long long t2 = 0; t2 <= k; ++t2) {
      Real angle = pi * Real((t1 + 1) * (t2 + 1)) / Real(m);
      md.S.at(int(t1), int(t2)) = PComplex(norm * sin(angle));
    }
  }
  md.c = Rational(3 * k, m);
  return md;
}

ModularData gen_minimal(long long p, long long q) {
  if (p < 2 || p >= q || std::gcd(p, q) != 1)
    throw InputError("minimal model needs coprime 2 <= p < q");
  ModularData md;
  md.name = "minimal_" + std::to_string(p) + "_" + std::to_string(q);
  md.vacuum = 0;

  std::vector<KacLabel> reps;
  for (long long r = 1; r < p; ++r)
    for (long long s = 1; s < q; ++s) {
      KacLabel c = kac_canonical(p, q, r, s);
      if (c.r == r && c.s == s) reps.push_back({r, s});
    }
  std::sort(reps.begin(), reps.end(),
            [&](const KacLabel& a, const KacLabel& b) { return a.r * q + a.s < b.r * q + b.s; });

  int n = int(reps.size());
  md.S = CMatrix(n, n);
  Real pi = real_pi();
  Real norm = 2 * sqrt(Real(2) / Real(p * q));
  for (int i = 0; i < n; ++i) {
    auto [r, s] = reps[i];
    md.labels.push_back("r" + std::to_string(r) + "s" + std::to_string(s));
    md.dual.push_back(i);
    md.h.push_back(Rational((q * r - p * s) * (q * r - p * s) - (q - p) * (q - p), 4 * p * q));
    for (int j = 0; j < n; ++j) {
      auto [r2, s2] = reps[j];
      Real v = norm * sin(pi * Real(q * r * r2) / Real(p)) * sin(pi * Real(p * s * s2) / Real(q));
      if ((1 + r * s2 + s * r2) % 2 != 0) v = -v;
      md.S.at(i, j) = PComplex(v);
    }
  }
  md.c = Rational(p * q - 6 * (q - p) * (q - p), p * q);
  return md;
}

ModularData gen_ising() {
  ModularData md;
  md.name = "ising";
  md.labels = {"1", "eps", "sigma"};
  md.vacuum = 0;
  md.dual = {0, 1, 2};
  md.h = {Rational(0), Rational(1, 2), Rational(1, 16)};
  md.c = Rational(1, 2);
  md.S = CMatrix(3, 3);
  Real half = Real(1) / 2;
  Real r2 = sqrt(Real(2)) / 2;
  md.S.at(0, 0) = PComplex(half);
  md.S.at(0, 1) = PComplex(half);
  md.S.at(0, 2) = PComplex(r2);
  md.S.at(1, 0) = PComplex(half);
  md.S.at(1, 1) = PComplex(half);
  md.S.at(1, 2) = PComplex(-r2);
  md.S.at(2, 0) = PComplex(r2);
  md.S.at(2, 1) = PComplex(-r2);
  md.S.at(2, 2) = PComplex(Real(0));
  return md;
}

ModularData gen_fibonacci() {
  ModularData md;
  md.name = "fibonacci";
  md.labels = {"1", "tau"};
  md.vacuum = 0;
  md.dual = {0, 1};
  md.h = {Rational(0), Rational(2, 5)};
  md.c = Rational(14, 5);
  Real phi = (1 + sqrt(Real(5))) / 2;
  Real norm = 1 / sqrt(2 + phi);
  md.S = CMatrix(2, 2);
  md.S.at(0, 0) = PComplex(norm);
  md.S.at(0, 1) = PComplex(norm * phi);
  md.S.at(1, 0) = PComplex(norm * phi);
  md.S.at(1, 1) = PComplex(-norm);
  return md;
}

namespace {

std::vector<long long> oracle_from_rule(int n, const std::function<long long(int, int, int)>& f) {
  std::vector<long long> t(size_t(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) t[(size_t(a) * n + b) * n + c] = f(a, b, c);
  return t;
}

long long su2_rule(long long k, long long t1, long long t2, long long t3) {
  // 2j arithmetic: |t1-t2| <= t3 <= min(t1+t2, 2k-t1-t2), t1+t2+t3 even.
  if ((t1 + t2 + t3) % 2 != 0) return 0;
  if (t3 < std::llabs(t1 - t2)) return 0;
  if (t3 > t1 + t2 || t3 > 2 * k - t1 - t2) return 0;
  return 1;
}

long long bpz_rule(long long p, long long q, KacLabel x, KacLabel y, KacLabel z) {
  // BPZ truncation evaluated on either Kac representative of the target.
  auto admissible = [&](long long r3, long long s3) {
    if (r3 < 1 || r3 >= p || s3 < 1 || s3 >= q) return false;
    if ((x.r + y.r + r3) % 2 == 0) return false;  // steps of 2 from |r1-r2|+1
    if ((x.s + y.s + s3) % 2 == 0) return false;
    if (r3 < std::llabs(x.r - y.r) + 1 || r3 > std::min(x.r + y.r - 1, 2 * p - 1 - x.r - y.r))
      return false;
    if (s3 < std::llabs(x.s - y.s) + 1 || s3 > std::min(x.s + y.s - 1, 2 * q - 1 - x.s - y.s))
      return false;
    return true;
  };
  if (admissible(z.r, z.s) || admissible(p - z.r, q - z.s)) return 1;
  return 0;
}

}  // namespace

std::vector<long long> oracle_fusion(const ModularData& md) {
  const std::string& name = md.name;
  const int n = md.size();
  if (name == "trivial") return {1};
  if (name.rfind("z", 0) == 0 && name.find('_') == std::string::npos) {
    long long m = std::stoll(name.substr(1));
    return oracle_from_rule(
        n, [m](int a, int b, int c) -> long long { return (a + b) % m == c ? 1 : 0; });
  }
  if (name.rfind("su2_", 0) == 0) {
    long long k = std::stoll(name.substr(4));
    return oracle_from_rule(n, [k](int a, int b, int c) -> long long {
      return su2_rule(k, a, b, c);
    });
  }
  if (name.rfind("minimal_", 0) == 0) {
    auto sep = name.find('_', 8);
    long long p = std::stoll(name.substr(8, sep - 8));
    long long q = std::stoll(name.substr(sep + 1));
    std::vector<KacLabel> reps;
    for (const auto& l : md.labels) {
      auto spos = l.find('s');
      reps.push_back({std::stoll(l.substr(1, spos - 1)), std::stoll(l.substr(spos + 1))});
    }
    return oracle_from_rule(n, [&](int a, int b, int c) -> long long {
      return bpz_rule(p, q, reps[a], reps[b], reps[c]);
    });
  }
  if (name == "ising") {
    // 1, eps, sigma: eps x eps = 1, eps x sigma = sigma, sigma x sigma = 1 + eps
    auto t = oracle_from_rule(3, [](int, int, int) -> long long { return 0; });
    auto set = [&](int a, int b, int c) { t[(size_t(a) * 3 + b) * 3 + c] = 1; };
    for (int a = 0; a < 3; ++a) {
      set(0, a, a);
      set(a, 0, a);
    }
    set(1, 1, 0);
    set(1, 2, 2);
    set(2, 1, 2);
    set(2, 2, 0);
    set(2, 2, 1);
    return t;
  }
  if (name == "fibonacci") {
    // 1, tau: tau x tau = 1 + tau
    std::vector<long long> t(8, 0);
    auto set = [&](int a, int b, int c) { t[(size_t(a) * 2 + b) * 2 + c] = 1; };
    set(0, 0, 0);
    set(0, 1, 1);
    set(1, 0, 1);
    set(1, 1, 0);
    set(1, 1, 1);
    return t;
  }
  throw InputError("no fusion oracle for theory \"" + name + "\"");
}

std::vector<ModularData> catalog_models() {
  std::vector<ModularData> out;
  out.push_back(gen_trivial());
  for (long long k = 1; k <= 16; ++k) out.push_back(gen_su2(k));
  for (long long m = 1; m <= 24; ++m) out.push_back(gen_abelian(m));
  out.push_back(gen_ising());
  out.push_back(gen_fibonacci());
  out.push_back(gen_minimal(2, 5));
  out.push_back(gen_minimal(3, 4));
  return out;
}

std::vector<std::string> catalog_families() {
  return {
      "trivial                     one label, S = (1)",
      "abelian    --n N            Z_N with S_{ab} = e^{2 pi i ab/N}/sqrt(N)",
      "su2        --level K        affine su(2) at level K (Kac-Peterson S)",
      "minimal    --p P --q Q      Virasoro minimal model, coprime 2 <= P < Q",
      "ising                       labels 1, eps, sigma",
      "fibonacci                   labels 1, tau",
  };
}

}  // namespace verlinde
