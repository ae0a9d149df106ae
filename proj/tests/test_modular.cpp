#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "verlinde/catalog.hpp"
#include "verlinde/modular_data.hpp"

using namespace verlinde;

namespace {

struct Setup {
  Setup() { set_precision_bits(256); }
} setup;

Real tol20() { return real_from_string("1e-20"); }

}  // namespace

TEST_CASE("trivial theory validates") {
  ModularData md = gen_trivial();
  CHECK(validate_structure(md).all_passed());
  CHECK(check_symmetric(md).is_zero());
  CHECK(charge_conjugation(md).perm == std::vector<int>{0});
  CHECK(check_vacuum_row_nonzero(md) == 1);
}

TEST_CASE("ising validates and is all self-dual") {
  ModularData md = gen_ising();
  CHECK(validate_structure(md).all_passed());
  CHECK(check_symmetric(md) <= tol20());
  ChargeConjugation cc = charge_conjugation(md);
  CHECK(cc.perm == std::vector<int>{0, 1, 2});
  CHECK(cc.residual <= tol20());
}

TEST_CASE("dual violations are named") {
  ModularData md = gen_ising();
  md.dual = {0, 2, 1};  // eps <-> sigma is not an involution-compatible dual here
  // structure still sees an involution, so the failure must come from S^2
  CHECK(validate_structure(md).all_passed());
  CHECK_THROWS_WITH_AS(charge_conjugation(md), doctest::Contains("permutation disagrees"),
                       CheckFailure);

  ModularData bad = gen_ising();
  bad.dual = {0, 2, 2};  // not an involution
  VerificationReport rep = validate_structure(bad);
  CHECK(!rep.all_passed());
  bool found = false;
  for (const auto& c : rep.checks)
    if (c.status == CheckStatus::Fail && c.name.find("involution") != std::string::npos)
      found = true;
  CHECK(found);
}

TEST_CASE("z3 charge conjugation swaps 1 and 2") {
  ModularData md = gen_abelian(3);
  CHECK(validate_structure(md).all_passed());
  ChargeConjugation cc = charge_conjugation(md);
  CHECK(cc.perm == std::vector<int>{0, 2, 1});
  // twice is the identity
  std::vector<int> twice(3);
  for (int i = 0; i < 3; ++i) twice[i] = cc.perm[cc.perm[i]];
  CHECK(twice == std::vector<int>{0, 1, 2});
}

TEST_CASE("transpose perturbation is reported exactly") {
  ModularData md = gen_ising();
  Real bump = boost::multiprecision::ldexp(Real(1), -20);
  md.S.at(0, 1) = md.S.at(0, 1) + PComplex(bump);
  CHECK(check_symmetric(md) == bump);
}

TEST_CASE("s_inverse equals dual-permuted S") {
  SUBCASE("z2 is self-inverse") {
    ModularData md = gen_abelian(2);
    SInverse si = s_inverse(md);
    CHECK(max_abs(si.inv - md.S) <= tol20());
  }
  SUBCASE("z3 follows the negation rule") {
    ModularData md = gen_abelian(3);
    SInverse si = s_inverse(md);
    // (S^-1)_a^b = S_a^{-b mod 3}
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        CHECK((si.inv.at(a, b) - md.S.at(a, (3 - b) % 3)).abs() <= tol20());
    CHECK(si.residual <= tol20());
  }
  SUBCASE("trivial") {
    SInverse si = s_inverse(gen_trivial());
    CHECK((si.inv.at(0, 0) - PComplex(Real(1))).abs() <= tol20());
  }
}

TEST_CASE("vacuum row checks") {
  ModularData md = gen_su2(4);
  Real m = check_vacuum_row_nonzero(md);
  CHECK(m > real_from_string("0.2"));

  ModularData bad = gen_ising();
  bad.S.at(0, 2) = PComplex();
  CHECK(check_vacuum_row_nonzero(bad).is_zero());
}

TEST_CASE("corrupted S entry trips the permutation check") {
  ModularData md = gen_ising();
  md.S.at(2, 2) = PComplex(real_from_string("0.1"));
  CHECK_THROWS_WITH_AS(charge_conjugation(md), doctest::Contains("S^2 not a permutation"),
                       CheckFailure);
}

TEST_CASE("catalog S theorems hold across the board") {
  for (const ModularData& md : catalog_models()) {
    CAPTURE(md.name);
    CHECK(validate_structure(md).all_passed());
    CHECK(check_symmetric(md) <= tol20());
    ChargeConjugation cc = charge_conjugation(md);
    CHECK(cc.residual <= tol20());
    CHECK(cc.perm == md.dual);
    SInverse si = s_inverse(md);
    CHECK(si.residual <= tol20());
    // S * S^-1 stays within 1e-25 of the identity
    CHECK(max_abs(md.S * si.inv - CMatrix::identity(md.size())) <= real_from_string("1e-25"));
    CHECK(check_vacuum_row_nonzero(md) > real_from_string("1e-10"));
  }
}
