#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <boost/rational.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace verlinde {

// Arbitrary-precision real, precision chosen at runtime (process-global).
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using Rational = boost::rational<long long>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed files or arguments; maps to process exit code 2.
struct InputError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

// A named check violation carrying the worst residual and an optional witness.
struct CheckFailure : Error {
  std::string check;
  std::string witness;
  Real residual;
  CheckFailure(const std::string& check_, const Real& residual_, const std::string& witness_ = "");
};

struct NonIntegerResidual : Error {
  Real residual;
  explicit NonIntegerResidual(const Real& r);
};

// Precision is set once before any value is built and applies to every Real
// constructed afterwards.  Minimum 64 bits; default 256.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

Real real_pi();
Real real_from_string(const std::string& s);
// Scientific notation with the given number of significant digits.
std::string real_to_string(const Real& x, unsigned digits);

// Parses "p/q" or "p"; denominator must be positive.  If `was_reduced` is
// given it is set to false when the input carried a common factor.
Rational rational_from_string(const std::string& s, bool* was_reduced = nullptr);
std::string rational_to_string(const Rational& q);
Real rational_to_real(const Rational& q);
// Fractional part in [0,1).
Rational rational_mod1(const Rational& q);

struct PComplex {
  Real re, im;

  PComplex() : re(0), im(0) {}
  PComplex(const Real& r) : re(r), im(0) {}
  PComplex(const Real& r, const Real& i) : re(r), im(i) {}
  explicit PComplex(long long n) : re(n), im(0) {}

  PComplex operator+(const PComplex& o) const { return {re + o.re, im + o.im}; }
  PComplex operator-(const PComplex& o) const { return {re - o.re, im - o.im}; }
  PComplex operator-() const { return {-re, -im}; }
  PComplex operator*(const PComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  PComplex operator/(const PComplex& o) const;
  PComplex& operator+=(const PComplex& o) { re += o.re; im += o.im; return *this; }
  PComplex& operator-=(const PComplex& o) { re -= o.re; im -= o.im; return *this; }
  PComplex& operator*=(const PComplex& o) { *this = *this * o; return *this; }

  PComplex conj() const { return {re, -im}; }
  Real abs2() const { return re * re + im * im; }
  Real abs() const;
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

// log|z| + i arg z with arg z in [0, 2*pi).  Rejects z = 0.
PComplex principal_log(const PComplex& z);
// exp(re) * (cos im + i sin im).
PComplex pc_exp(const PComplex& z);
// z^r = exp(r * principal_log(z)); the only branch used anywhere.
PComplex pow_principal(const PComplex& z, const Real& r);
// e^{2*pi*i*q}, argument reduced mod 1 exactly before evaluation.
PComplex phase(const Rational& q);

// Nearest integer when |z - n| <= tol, else NonIntegerResidual.
long long round_to_integer(const PComplex& z, const Real& tol);
bool approx_eq(const PComplex& z, const PComplex& w, const Real& tol);

// Dense complex matrix, row-major.  Sizes here never exceed a few dozen.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  static CMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  PComplex& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const PComplex& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  CMatrix operator*(const CMatrix& o) const;
  CMatrix operator-(const CMatrix& o) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<PComplex> a_;
};

// Gauss-Jordan with partial pivoting; ties broken toward the lowest row index
// so results are operand-order deterministic.  Zero pivot -> DomainError.
CMatrix inverse(const CMatrix& m);
PComplex determinant(const CMatrix& m);
Real max_abs(const CMatrix& m);

}  // namespace verlinde
