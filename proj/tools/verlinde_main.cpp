#include "verlinde/catalog.hpp"
#include "verlinde/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace verlinde;

ModularData generate(const std::string& family, long long level, long long n, long long p,
                     long long q) {
  if (family == "trivial") return gen_trivial();
  if (family == "abelian") {
    if (n <= 0) throw InputError("abelian requires --n");
    return gen_abelian(n);
  }
  if (family == "su2") {
    if (level <= 0) throw InputError("su2 requires --level");
    return gen_su2(level);
  }
  if (family == "minimal") {
    if (p <= 0 || q <= 0) throw InputError("minimal requires --p and --q");
    return gen_minimal(p, q);
  }
  if (family == "ising") return gen_ising();
  if (family == "fibonacci") return gen_fibonacci();
  throw InputError("unknown family \"" + family + "\" (see `verlinde catalog list`)");
}

}  // namespace

int main(int argc, char** argv) {
  unsigned precision = 256;
  if (const char* env = std::getenv("VERLINDE_PRECISION_BITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 64) precision = unsigned(v);
  }

  CLI::App app{"Fusion rules from modular S-matrix data, with identity verification"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate catalog modular data");
  std::string family, gen_out;
  long long level = 0, nn = 0, pp = 0, qq = 0;
  gen->add_option("family", family, "trivial|abelian|su2|minimal|ising|fibonacci")->required();
  gen->add_option("--level", level, "su2 level k");
  gen->add_option("--n", nn, "abelian order n");
  gen->add_option("--p", pp, "minimal model p");
  gen->add_option("--q", qq, "minimal model q");
  gen->add_option("-o,--output", gen_out, "output modular.json")->required();

  auto* fuse = app.add_subcommand("fuse", "compute the fusion table of a modular.json");
  std::string fuse_in, fuse_out;
  fuse->add_option("file", fuse_in, "modular.json")->required();
  fuse->add_option("-o,--output", fuse_out, "output fusion.json (stdout when absent)");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  std::string verify_in, fdata_path, report_path, format = "md", tol_str;
  unsigned verify_bits = 0;
  verify->add_option("file", verify_in, "modular.json")->required();
  verify->add_option("--fdata", fdata_path, "fdata.json with F and sigma tables");
  verify->add_option("--tol", tol_str, "uniform residual threshold override");
  verify->add_option("--precision-bits", verify_bits, "working precision (>= 64)");
  verify->add_option("--report", report_path, "write the report to this path");
  verify->add_option("--format", format, "report format: md|json")->check(CLI::IsMember({"md", "json"}));

  auto* catalog = app.add_subcommand("catalog", "catalog information");
  auto* list = catalog->add_subcommand("list", "list built-in families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);  // prints help or the parse error
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      set_precision_bits(precision);
      save_modular(generate(family, level, nn, pp, qq), gen_out);
      return 0;
    }
    if (*fuse) {
      set_precision_bits(precision);
      ModularData md = load_modular(fuse_in);
      FusionTable table = fusion_table(md);
      std::string text = fusion_to_json(table);
      if (fuse_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(fuse_out, std::ios::binary);
        if (!out) throw InputError("cannot write \"" + fuse_out + "\"");
        out << text;
      }
      return 0;
    }
    if (*verify) {
      set_precision_bits(verify_bits ? verify_bits : precision);
      Tolerances tol;
      if (!tol_str.empty()) tol = Tolerances::uniform(real_from_string(tol_str));
      ModularData md = load_modular(verify_in);
      std::optional<FTensor> ft;
      if (!fdata_path.empty()) ft = load_fdata(fdata_path, md);
      VerificationReport rep = run_verify(md, ft ? &*ft : nullptr, tol);
      ReportFormat fmt = format == "json" ? ReportFormat::Json : ReportFormat::Markdown;
      std::cout << format_report(rep, fmt);
      if (!report_path.empty()) emit_report(rep, fmt, report_path);
      return rep.exit_code();
    }
    if (*catalog) {
      if (*list) {
        for (const auto& f : catalog_families()) std::cout << f << "\n";
        return 0;
      }
      std::cerr << "error: catalog needs a subcommand (list)\n";
      return 2;
    }
  } catch (const CheckFailure& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
