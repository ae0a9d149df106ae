// Acceptance suite: runs each criterion at its pinned tolerance and prints
// one pass/fail line.  Exit status 0 only when every criterion holds.

#include "verlinde/catalog.hpp"
#include "verlinde/fb_calculus.hpp"
#include "verlinde/io.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

using namespace verlinde;

namespace {

int g_failures = 0;

void report(int n, const std::string& what, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++g_failures;
}

std::string data_path(const std::string& f) { return std::string(VERLINDE_DATA_DIR) + "/" + f; }

// Fusion tables are shared by criteria 1, 2 and 4; built once.
struct Prepared {
  ModularData md;
  FusionTable table;
  std::string error;  // construction failure, reported by criterion 1
};
std::vector<Prepared> g_models;

void prepare_models() {
  for (const ModularData& md : catalog_models()) {
    Prepared p;
    p.md = md;
    try {
      p.table = fusion_table(md);
    } catch (const Error& e) {
      p.error = e.what();
    }
    g_models.push_back(std::move(p));
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args, std::string* out = nullptr) {
  std::string capture = out ? " > acc_cli_out.txt 2>/dev/null" : " > /dev/null 2>/dev/null";
  int rc = std::system((std::string(VERLINDE_CLI_PATH) + " " + args + capture).c_str());
  if (out) *out = slurp("acc_cli_out.txt");
  return WEXITSTATUS(rc);
}

// 1. Verlinde sums round to the combinatorial oracle with tiny residuals.
void criterion1() {
  Real residual_limit = real_from_string("1e-20");
  Real worst(0);
  bool ok = true;
  std::string detail;
  for (const Prepared& p : g_models) {
    if (!p.error.empty()) {
      ok = false;
      detail = p.md.name + ": " + p.error;
      break;
    }
    if (p.table.max_round_residual > worst) worst = p.table.max_round_residual;
    if (p.table.max_round_residual > residual_limit || p.table.tensor != oracle_fusion(p.md)) {
      ok = false;
      detail = p.md.name;
      break;
    }
  }
  report(1, "Verlinde table equals the combinatorial oracle on the full catalog", ok,
         ok ? "worst residual " + real_to_string(worst, 3) : detail);
}

// 2. S^-1 N(a) S is diagonal with the eigenvalue vector on the diagonal.
void criterion2() {
  Real limit = real_from_string("1e-18");
  Real worst_off(0), worst_eig(0);
  bool ok = true;
  std::string detail;
  for (const Prepared& p : g_models) {
    if (!p.error.empty()) continue;  // already charged to criterion 1
    try {
      DiagonalizationResult d = verify_diagonalization(p.md, p.table);
      if (d.max_offdiag > worst_off) worst_off = d.max_offdiag;
      if (d.max_eigen_dev > worst_eig) worst_eig = d.max_eigen_dev;
      if (d.max_offdiag > limit || d.max_eigen_dev > limit) {
        ok = false;
        detail = p.md.name;
        break;
      }
    } catch (const Error& e) {
      ok = false;
      detail = p.md.name + ": " + e.what();
      break;
    }
  }
  report(2, "S diagonalizes every fusion matrix with matching eigenvalues", ok,
         ok ? "worst off-diagonal " + real_to_string(worst_off, 3) + ", eigenvalue dev " +
                  real_to_string(worst_eig, 3)
            : detail);
}

// 3. S symmetry, S^2 = dual permutation, S^-1 = dual-permuted S, vacuum row.
void criterion3() {
  Real t20 = real_from_string("1e-20");
  Real t18 = real_from_string("1e-18");
  Real floor10 = real_from_string("1e-10");
  bool ok = true;
  std::string detail;
  for (const Prepared& p : g_models) {
    const ModularData& md = p.md;
    try {
      if (check_symmetric(md) > t20) throw Error("symmetry");
      ChargeConjugation cc = charge_conjugation(md);
      if (cc.residual > t20 || cc.perm != md.dual) throw Error("charge conjugation");
      if (s_inverse(md).residual > t18) throw Error("s-inverse");
      if (!(check_vacuum_row_nonzero(md) > floor10)) throw Error("vacuum row");
    } catch (const Error& e) {
      ok = false;
      detail = md.name + ": " + e.what();
      break;
    }
  }
  report(3, "S-matrix theorems (symmetry, S^2, inverse, vacuum row) on the catalog", ok, detail);
}

// 4. Ring axioms hold exactly, including the exhaustive Z6 triple check.
void criterion4() {
  bool ok = true;
  std::string detail;
  for (const Prepared& p : g_models) {
    if (p.error.empty() && !verify_ring_axioms(p.table).all_passed()) {
      ok = false;
      detail = p.md.name;
      break;
    }
  }
  if (ok) {
    FusionTable z6 = fusion_table(gen_abelian(6));
    long long checked = 0;
    for (int a = 0; a < 6 && ok; ++a)
      for (int b = 0; b < 6 && ok; ++b)
        for (int c = 0; c < 6 && ok; ++c) {
          ++checked;
          for (int d = 0; d < 6; ++d) {
            long long lhs = 0, rhs = 0;
            for (int m = 0; m < 6; ++m) {
              lhs += z6.N(a, b, m) * z6.N(m, c, d);
              rhs += z6.N(b, c, m) * z6.N(a, m, d);
            }
            if (lhs != rhs) ok = false;
          }
        }
    if (ok && checked != 216) ok = false;
    if (!ok) detail = "z6 associativity";
  }
  report(4, "ring axioms hold exactly (unit, dual, commutativity, associativity)", ok, detail);
}

// 5. Fusing/braiding identities on the ising and fibonacci fixtures.
void criterion5() {
  Real limit = real_from_string("1e-12");
  bool ok = true;
  std::string detail;
  Real worst(0);
  for (const char* which : {"ising", "fibonacci"}) {
    try {
      ModularData md = which[0] == 'i' ? gen_ising() : gen_fibonacci();
      FTensor ft = load_fdata(data_path(std::string("fdata_") + which + ".json"), md);
      Real rs[] = {check_sigma_relations(ft),
                   check_vacuum_normalization(ft),
                   check_fusing_inverse_symmetry(ft),
                   check_fusing_symmetry(ft),
                   ms_formula1(ft),
                   ms_formula2(ft),
                   verify_lambda_consistency(ft)};
      for (const Real& r : rs)
        if (r > worst) worst = r;
      for (int r : {-1, 0, 1}) {
        Real v1 = check_braiding_vacuum_identity(ft, r);
        Real v2 = check_monodromy_spectrum(ft, r);
        if (v1 > worst) worst = v1;
        if (v2 > worst) worst = v2;
      }
      if (worst > limit) {
        ok = false;
        detail = which;
        break;
      }
    } catch (const Error& e) {
      ok = false;
      detail = std::string(which) + ": " + e.what();
      break;
    }
  }
  report(5, "fusing/braiding and Moore-Seiberg identities on the fixtures", ok,
         ok ? "worst residual " + real_to_string(worst, 3) : detail);
}

// 6. Corrupted inputs produce the named failure and exit code 1.
void criterion6() {
  bool ok = true;
  std::string detail;

  // (a) perturbed S entry through the CLI
  {
    ModularData md = gen_ising();
    md.S.at(2, 2) = PComplex(real_from_string("0.1"));
    std::ofstream f("acc_bad_modular.json");
    f << modular_to_json(md);
    f.close();
    std::string out;
    int rc = run_cli("verify acc_bad_modular.json", &out);
    if (rc != 1 || out.find("S^2 not a permutation") == std::string::npos) {
      ok = false;
      detail = "perturbed S entry: rc=" + std::to_string(rc);
    }
  }
  // (b) flipped sigma scalar through the CLI
  if (ok) {
    ModularData md = gen_ising();
    FTensor ft = load_fdata(data_path("fdata_ising.json"), md);
    ft.sigma12[{2, 2, 1}] = PComplex(Real(-1));
    std::ofstream f("acc_bad_fdata.json");
    f << fdata_to_json(ft);
    f.close();
    std::ofstream g("acc_ising.json");
    g << modular_to_json(md);
    g.close();
    std::string out;
    int rc = run_cli("verify acc_ising.json --fdata acc_bad_fdata.json", &out);
    if (rc != 1 || out.find("fusing inverse symmetry") == std::string::npos ||
        out.find("[FAIL]") == std::string::npos) {
      ok = false;
      detail = "flipped sigma scalar: rc=" + std::to_string(rc);
    }
  }
  // (c) bumped fusion integer: the ring validator names the axiom and the
  // report maps to exit code 1
  if (ok) {
    FusionTable t = fusion_table(gen_ising());
    t.N(2, 2, 1) += 1;
    VerificationReport rep = verify_ring_axioms(t);
    bool named = false;
    for (const auto& c : rep.checks)
      if (c.status == CheckStatus::Fail && c.name == "ring associativity" && !c.witness.empty())
        named = true;
    if (!named || rep.exit_code() != 1) {
      ok = false;
      detail = "bumped fusion integer";
    }
  }
  report(6, "corrupted fixtures produce named failures and exit code 1", ok, detail);
}

// 7. Byte-identical reports across repeated runs.
void criterion7() {
  bool ok = true;
  std::string detail;
  ModularData md = gen_ising();
  std::ofstream g("acc_ising.json");
  g << modular_to_json(md);
  g.close();
  std::string base = "verify acc_ising.json --fdata " + data_path("fdata_ising.json");
  int rc1 = run_cli(base + " --report acc_rep1.json --format json");
  int rc2 = run_cli(base + " --report acc_rep2.json --format json");
  if (rc1 != 0 || rc2 != 0) {
    ok = false;
    detail = "verify did not pass";
  } else if (slurp("acc_rep1.json") != slurp("acc_rep2.json")) {
    ok = false;
    detail = "reports differ";
  }
  report(7, "verification reports are byte-identical across runs", ok, detail);
}

}  // namespace

int main() {
  set_precision_bits(256);
  auto t0 = std::chrono::steady_clock::now();
  prepare_models();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d/7 criteria passed in %.1fs\n", 7 - g_failures, dt);
  return g_failures == 0 ? 0 : 1;
}
