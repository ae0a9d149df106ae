#include "verlinde/numerics.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

namespace verlinde {

namespace {

unsigned g_bits = 0;

struct PrecisionInit {
  PrecisionInit() { set_precision_bits(256); }
};
PrecisionInit g_precision_init;

}  // namespace

CheckFailure::CheckFailure(const std::string& check_, const Real& residual_,
                           const std::string& witness_)
    : Error(check_ + (witness_.empty() ? "" : " at " + witness_)),
      check(check_),
      witness(witness_),
      residual(residual_) {}

NonIntegerResidual::NonIntegerResidual(const Real& r)
    : Error("non-integer residual"), residual(r) {}

void set_precision_bits(unsigned bits) {
  if (bits < 64) throw InputError("precision must be at least 64 bits");
  // boost takes decimal digits; round up and pad so the mantissa is at least
  // `bits` wide.
  unsigned digits10 = unsigned(std::ceil(bits * 0.30103)) + 2;
  Real::default_precision(digits10);
  g_bits = bits;
}

unsigned precision_bits() { return g_bits; }

Real real_pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real real_from_string(const std::string& s) {
  try {
    return Real(s);
  } catch (const std::exception&) {
    throw InputError("not a decimal number: \"" + s + "\"");
  }
}

std::string real_to_string(const Real& x, unsigned digits) {
  return x.str(digits, std::ios_base::scientific);
}

Rational rational_from_string(const std::string& s, bool* was_reduced) {
  if (was_reduced) *was_reduced = true;
  auto parse_int = [](const std::string& t) -> long long {
    if (t.empty()) throw InputError("empty integer in rational");
    size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(t, &pos);
    } catch (const std::exception&) {
      throw InputError("not a rational: \"" + t + "\"");
    }
    if (pos != t.size()) throw InputError("not a rational: \"" + t + "\"");
    return v;
  };
  auto slash = s.find('/');
  long long num, den;
  if (slash == std::string::npos) {
    num = parse_int(s);
    den = 1;
  } else {
    num = parse_int(s.substr(0, slash));
    den = parse_int(s.substr(slash + 1));
  }
  if (den <= 0) throw InputError("rational denominator must be positive: \"" + s + "\"");
  if (was_reduced && num != 0 && std::gcd(std::llabs(num), den) != 1) *was_reduced = false;
  if (was_reduced && num == 0 && den != 1) *was_reduced = false;
  return Rational(num, den);
}

std::string rational_to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Real rational_to_real(const Rational& q) {
  return Real(q.numerator()) / Real(q.denominator());
}

Rational rational_mod1(const Rational& q) {
  long long n = q.numerator(), d = q.denominator();
  long long r = n % d;
  if (r < 0) r += d;
  return Rational(r, d);
}

PComplex PComplex::operator/(const PComplex& o) const {
  Real d = o.abs2();
  if (d.is_zero()) throw DomainError("complex division by zero");
  return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
}

Real PComplex::abs() const {
  using boost::multiprecision::sqrt;
  return sqrt(abs2());
}

PComplex principal_log(const PComplex& z) {
  using boost::multiprecision::atan2;
  using boost::multiprecision::log;
  if (z.is_zero()) throw DomainError("principal_log of zero");
  Real arg = atan2(z.im, z.re);  // (-pi, pi]
  if (arg < 0) arg += 2 * real_pi();
  return {log(z.abs()), arg};
}

PComplex pc_exp(const PComplex& z) {
  using boost::multiprecision::cos;
  using boost::multiprecision::exp;
  using boost::multiprecision::sin;
  Real m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

PComplex pow_principal(const PComplex& z, const Real& r) {
  PComplex l = principal_log(z);
  return pc_exp({l.re * r, l.im * r});
}

PComplex phase(const Rational& q) {
  Rational r = rational_mod1(q);
  // Quarter turns are exact.
  if (r == Rational(0)) return PComplex(Real(1), Real(0));
  if (r == Rational(1, 4)) return PComplex(Real(0), Real(1));
  if (r == Rational(1, 2)) return PComplex(Real(-1), Real(0));
  if (r == Rational(3, 4)) return PComplex(Real(0), Real(-1));
  Real angle = 2 * real_pi() * Real(r.numerator()) / Real(r.denominator());
  Real c, s;
  mpfr_sin_cos(s.backend().data(), c.backend().data(), angle.backend().data(), MPFR_RNDN);
  return {c, s};
}

long long round_to_integer(const PComplex& z, const Real& tol) {
  if (tol <= 0) throw InputError("rounding tolerance must be positive");
  Real n;
  mpfr_round(n.backend().data(), z.re.backend().data());
  PComplex delta = z - PComplex(n);
  Real dist = delta.abs();
  if (dist > tol) throw NonIntegerResidual(dist);
  long long out = mpfr_get_si(n.backend().data(), MPFR_RNDN);
  if (Real(out) != n) throw NonIntegerResidual(dist);  // out of long long range
  return out;
}

bool approx_eq(const PComplex& z, const PComplex& w, const Real& tol) {
  if (tol <= 0) throw InputError("tolerance must be positive");
  return (z - w).abs() <= tol;
}

CMatrix CMatrix::identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = PComplex(Real(1));
  return m;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix shape mismatch");
  CMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      PComplex acc;
      for (int k = 0; k < cols_; ++k) acc += at(i, k) * o.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
  CMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
  return r;
}

CMatrix inverse(const CMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of non-square matrix");
  int n = m.rows();
  CMatrix a = m;
  CMatrix inv = CMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    Real best = a.at(col, col).abs2();
    for (int r = col + 1; r < n; ++r) {
      Real v = a.at(r, col).abs2();
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best.is_zero()) throw DomainError("singular matrix");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    PComplex p = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) = a.at(col, j) / p;
      inv.at(col, j) = inv.at(col, j) / p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      PComplex f = a.at(r, col);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

PComplex determinant(const CMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
  int n = m.rows();
  CMatrix a = m;
  PComplex det(Real(1));
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    Real best = a.at(col, col).abs2();
    for (int r = col + 1; r < n; ++r) {
      Real v = a.at(r, col).abs2();
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best.is_zero()) return PComplex();
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      det = -det;
    }
    det *= a.at(col, col);
    PComplex p = a.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (a.at(r, col).is_zero()) continue;
      PComplex f = a.at(r, col) / p;
      for (int j = col; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
    }
  }
  return det;
}

Real max_abs(const CMatrix& m) {
  Real best(0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      Real v = m.at(i, j).abs();
      if (v > best) best = v;
    }
  return best;
}

}  // namespace verlinde
