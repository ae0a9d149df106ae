#include "verlinde/io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace verlinde {

namespace {

using json = nlohmann::ordered_json;

unsigned file_digits() { return unsigned(std::ceil(precision_bits() * 0.302)) + 2; }
constexpr unsigned kReportDigits = 30;

json complex_to_json(const PComplex& z) {
  return json{{"re", real_to_string(z.re, file_digits())},
              {"im", real_to_string(z.im, file_digits())}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write \"" + path + "\"");
  out << text;
  if (!out) throw InputError("cannot write \"" + path + "\"");
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const std::exception& e) {
    throw InputError(origin + ": " + e.what());
  }
}

const json& need(const json& j, const std::string& key, const std::string& ptr) {
  if (!j.contains(key)) throw InputError("missing field at " + ptr + "/" + key);
  return j.at(key);
}

std::string need_string(const json& j, const std::string& key, const std::string& ptr) {
  const json& v = need(j, key, ptr);
  if (!v.is_string()) throw InputError("expected string at " + ptr + "/" + key);
  return v.get<std::string>();
}

int significant_digits(const std::string& s) {
  int count = 0;
  bool lead = true;
  for (char ch : s) {
    if (ch == 'e' || ch == 'E') break;
    if (ch < '0' || ch > '9') continue;
    if (ch == '0' && lead) continue;
    lead = false;
    ++count;
  }
  return count;
}

PComplex complex_from_json(const json& j, const std::string& ptr, unsigned declared_bits,
                           int* low_digit_count) {
  std::string re = need_string(j, "re", ptr);
  std::string im = need_string(j, "im", ptr);
  if (low_digit_count && declared_bits) {
    int want = int(std::ceil(declared_bits * 0.302));
    // zero entries are exempt: they are exact at any digit count
    for (const std::string* s : {&re, &im}) {
      Real v = real_from_string(*s);
      if (!v.is_zero() && significant_digits(*s) < want) ++*low_digit_count;
    }
  }
  return {real_from_string(re), real_from_string(im)};
}

Rational rational_field(const json& j, const std::string& key, const std::string& ptr,
                        const std::string& origin) {
  bool reduced = true;
  std::string s = need_string(j, key, ptr);
  Rational q = rational_from_string(s, &reduced);
  if (!reduced)
    std::cerr << "warning: " << origin << ": " << ptr << "/" << key << " = \"" << s
              << "\" normalized to \"" << rational_to_string(q) << "\"\n";
  return q;
}

}  // namespace

ModularData parse_modular(const std::string& text, const std::string& origin) {
  json j = parse_json(text, origin);
  ModularData md;
  md.name = need_string(j, "name", "");
  unsigned declared_bits = 0;
  {
    const json& pb = need(j, "precision_bits", "");
    if (!pb.is_number_unsigned()) throw InputError("expected integer at /precision_bits");
    declared_bits = pb.get<unsigned>();
  }
  const json& labels = need(j, "labels", "");
  if (!labels.is_array() || labels.empty()) throw InputError("expected label array at /labels");
  for (size_t i = 0; i < labels.size(); ++i) {
    if (!labels[i].is_string())
      throw InputError("expected string at /labels/" + std::to_string(i));
    md.labels.push_back(labels[i].get<std::string>());
  }
  const int n = md.size();
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      if (md.labels[i] == md.labels[k])
        throw InputError("duplicate label \"" + md.labels[i] + "\" at /labels");

  md.vacuum = md.index(need_string(j, "vacuum", ""));

  const json& dual = need(j, "dual", "");
  if (!dual.is_object()) throw InputError("expected object at /dual");
  md.dual.assign(size_t(n), -1);
  for (int a = 0; a < n; ++a) {
    if (!dual.contains(md.labels[a]))
      throw InputError("missing field at /dual/" + md.labels[a]);
    const json& v = dual.at(md.labels[a]);
    if (!v.is_string()) throw InputError("expected string at /dual/" + md.labels[a]);
    md.dual[a] = md.index(v.get<std::string>());
  }
  if (dual.size() != size_t(n)) throw InputError("extra keys at /dual");

  const json& h = need(j, "h", "");
  if (!h.is_object()) throw InputError("expected object at /h");
  for (int a = 0; a < n; ++a) {
    if (!h.contains(md.labels[a])) throw InputError("missing field at /h/" + md.labels[a]);
    md.h.push_back(rational_field(h, md.labels[a], "/h", origin));
    if (md.h.back() < Rational(0))
      std::cerr << "warning: " << origin << ": negative weight h[" << md.labels[a]
                << "] = " << rational_to_string(md.h.back()) << "\n";
  }
  if (h.size() != size_t(n)) throw InputError("extra keys at /h");

  md.c = rational_field(j, "central_charge", "", origin);

  const json& S = need(j, "S", "");
  if (!S.is_array() || S.size() != size_t(n)) throw InputError("expected " + std::to_string(n) +
                                                               " rows at /S");
  md.S = CMatrix(n, n);
  int low = 0;
  for (int r = 0; r < n; ++r) {
    const json& row = S[size_t(r)];
    if (!row.is_array() || row.size() != size_t(n))
      throw InputError("expected " + std::to_string(n) + " entries at /S/" + std::to_string(r));
    for (int c = 0; c < n; ++c)
      md.S.at(r, c) = complex_from_json(
          row[size_t(c)], "/S/" + std::to_string(r) + "/" + std::to_string(c), declared_bits,
          &low);
  }
  if (low > 0)
    std::cerr << "warning: " << origin << ": " << low
              << " S entries carry fewer significant digits than the declared "
              << declared_bits << " bits\n";
  if (j.contains("source") && j.at("source").is_string())
    md.source = j.at("source").get<std::string>();
  if (j.contains("notes") && j.at("notes").is_string())
    md.notes = j.at("notes").get<std::string>();
  return md;
}

ModularData load_modular(const std::string& path) {
  return parse_modular(read_file(path), path);
}

std::string modular_to_json(const ModularData& md) {
  json j;
  j["name"] = md.name;
  j["precision_bits"] = precision_bits();
  j["labels"] = md.labels;
  j["vacuum"] = md.labels[md.vacuum];
  json dual = json::object();
  for (int a = 0; a < md.size(); ++a) dual[md.labels[a]] = md.labels[md.dual[a]];
  j["dual"] = dual;
  json h = json::object();
  for (int a = 0; a < md.size(); ++a) h[md.labels[a]] = rational_to_string(md.h[a]);
  j["h"] = h;
  j["central_charge"] = rational_to_string(md.c);
  json S = json::array();
  for (int r = 0; r < md.size(); ++r) {
    json row = json::array();
    for (int c = 0; c < md.size(); ++c) row.push_back(complex_to_json(md.S.at(r, c)));
    S.push_back(row);
  }
  j["S"] = S;
  j["source"] = md.source;
  if (!md.notes.empty()) j["notes"] = md.notes;
  return j.dump(2) + "\n";
}

void save_modular(const ModularData& md, const std::string& path) {
  write_file(path, modular_to_json(md));
}

FTensor parse_fdata(const std::string& text, const ModularData& md, const std::string& origin) {
  json j = parse_json(text, origin);
  std::string theory = need_string(j, "theory", "");
  if (theory != md.name)
    throw InputError("fdata theory \"" + theory + "\" does not match modular data \"" + md.name +
                     "\"");
  const json& mf = need(j, "multiplicity_free", "");
  if (!mf.is_boolean() || !mf.get<bool>())
    throw InputError("fdata requires \"multiplicity_free\": true");

  std::map<std::array<int, 6>, PComplex> F;
  std::map<std::array<int, 3>, PComplex> s12, s23;
  const json& fa = need(j, "F", "");
  if (!fa.is_array()) throw InputError("expected array at /F");
  static const char* kF[] = {"a1", "a2", "a3", "a4", "a5", "a6"};
  for (size_t i = 0; i < fa.size(); ++i) {
    std::string ptr = "/F/" + std::to_string(i);
    std::array<int, 6> k{};
    for (int t = 0; t < 6; ++t) k[t] = md.index(need_string(fa[i], kF[t], ptr));
    PComplex v = complex_from_json(need(fa[i], "value", ptr), ptr + "/value", 0, nullptr);
    if (!F.emplace(k, v).second) throw InputError("duplicate F tuple at " + ptr);
  }
  for (auto [field, tbl] : {std::pair{"sigma12", &s12}, std::pair{"sigma23", &s23}}) {
    const json& sa = need(j, field, "");
    if (!sa.is_array()) throw InputError(std::string("expected array at /") + field);
    for (size_t i = 0; i < sa.size(); ++i) {
      std::string ptr = "/" + std::string(field) + "/" + std::to_string(i);
      std::array<int, 3> k{};
      for (int t = 0; t < 3; ++t) k[t] = md.index(need_string(sa[i], kF[t], ptr));
      PComplex v = complex_from_json(need(sa[i], "value", ptr), ptr + "/value", 0, nullptr);
      if (!tbl->emplace(k, v).second)
        throw InputError("duplicate sigma scalar at " + ptr);
    }
  }
  return make_ftensor(md, std::move(F), std::move(s12), std::move(s23));
}

FTensor load_fdata(const std::string& path, const ModularData& md) {
  return parse_fdata(read_file(path), md, path);
}

std::string fdata_to_json(const FTensor& ft) {
  const auto& L = ft.md.labels;
  json j;
  j["theory"] = ft.md.name;
  j["multiplicity_free"] = true;
  json fa = json::array();
  for (const auto& [k, v] : ft.F) {
    json e;
    e["a1"] = L[k[0]];
    e["a2"] = L[k[1]];
    e["a3"] = L[k[2]];
    e["a4"] = L[k[3]];
    e["a5"] = L[k[4]];
    e["a6"] = L[k[5]];
    e["value"] = complex_to_json(v);
    fa.push_back(e);
  }
  j["F"] = fa;
  for (auto [field, tbl] : {std::pair{"sigma12", &ft.sigma12}, std::pair{"sigma23", &ft.sigma23}}) {
    json sa = json::array();
    for (const auto& [k, v] : *tbl) {
      json e;
      e["a1"] = L[k[0]];
      e["a2"] = L[k[1]];
      e["a3"] = L[k[2]];
      e["value"] = complex_to_json(v);
      sa.push_back(e);
    }
    j[field] = sa;
  }
  return j.dump(2) + "\n";
}

std::string fusion_to_json(const FusionTable& ft) {
  const ModularData& md = ft.base;
  const int n = md.size();
  json j;
  j["theory"] = md.name;
  json entries = json::array();
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2)
      for (int a3 = 0; a3 < n; ++a3)
        if (ft.N(a1, a2, a3) != 0)
          entries.push_back(json{{"a1", md.labels[a1]},
                                 {"a2", md.labels[a2]},
                                 {"a3", md.labels[a3]},
                                 {"n", ft.N(a1, a2, a3)}});
  j["N"] = entries;
  json ev = json::object();
  for (int a2 = 0; a2 < n; ++a2) {
    json row = json::array();
    for (const PComplex& v : fusion_eigenvalues(md, a2)) row.push_back(complex_to_json(v));
    ev[md.labels[a2]] = row;
  }
  j["eigenvalues"] = ev;
  return j.dump(2) + "\n";
}

VerificationReport run_verify(const ModularData& md, const FTensor* ft, const Tolerances& tol) {
  VerificationReport rep;
  rep.theory = md.name;
  rep.precision_bits = precision_bits();
  rep.tool_version = kToolVersion;

  // 1. structure
  VerificationReport structure = validate_structure(md, tol);
  bool structure_ok = structure.all_passed();
  for (auto& c : structure.checks) rep.checks.push_back(c);

  // Residual-style check: pass iff residual <= threshold.
  auto run = [&rep](const std::string& name, const std::string& anchor, const Real& threshold,
                    auto&& fn) -> bool {
    try {
      Real res = fn();
      rep.checks.push_back(res <= threshold ? CheckEntry::pass(name, anchor, res)
                                            : CheckEntry::fail(name, anchor, res));
      return res <= threshold;
    } catch (const CheckFailure& cf) {
      rep.checks.push_back(CheckEntry::fail(name + ": " + cf.check, anchor, cf.residual,
                                            cf.witness));
      return false;
    } catch (const Error& e) {
      rep.checks.push_back(CheckEntry::fail(name + ": " + e.what(), anchor, Real(0)));
      return false;
    }
  };

  // 2. S theorems
  run("S symmetry", "S-symmetric", tol.modular, [&] { return check_symmetric(md); });
  if (structure_ok) {
    run("charge conjugation", "S^2 = dual map", tol.modular,
        [&] { return charge_conjugation(md, tol).residual; });
    run("S inverse", "Eq. s-inv", tol.sinv, [&] { return s_inverse(md, tol).residual; });
  } else {
    rep.checks.push_back(CheckEntry::skip("charge conjugation", "S^2 = dual map"));
    rep.checks.push_back(CheckEntry::skip("S inverse", "Eq. s-inv"));
  }
  // Lower-bound check: pass iff min modulus exceeds the floor.
  {
    Real v = structure_ok ? check_vacuum_row_nonzero(md) : Real(0);
    if (!structure_ok)
      rep.checks.push_back(CheckEntry::skip("vacuum row nonzero", "Eq. v-form"));
    else
      rep.checks.push_back(v > tol.vacuum_min
                               ? CheckEntry::pass("vacuum row nonzero", "Eq. v-form", v)
                               : CheckEntry::fail("vacuum row nonzero", "Eq. v-form", v));
  }

  // 3. Verlinde
  bool have_table = false;
  FusionTable table;
  if (structure_ok) {
    try {
      table = fusion_table(md, tol);
      have_table = true;
      rep.checks.push_back(CheckEntry::pass("fusion coefficients integral", "Eq. v-form",
                                            table.max_round_residual));
    } catch (const CheckFailure& cf) {
      rep.checks.push_back(CheckEntry::fail(std::string("fusion coefficients integral: ") +
                                                cf.check,
                                            "Eq. v-form", cf.residual, cf.witness));
    }
  } else {
    rep.checks.push_back(CheckEntry::skip("fusion coefficients integral", "Eq. v-form"));
  }
  if (have_table) {
    try {
      DiagonalizationResult d = verify_diagonalization(md, table, tol);
      rep.checks.push_back(d.max_offdiag <= tol.diag
                               ? CheckEntry::pass("diagonalization", "Eq. diag2", d.max_offdiag)
                               : CheckEntry::fail("diagonalization", "Eq. diag2", d.max_offdiag));
      rep.checks.push_back(d.max_eigen_dev <= tol.diag
                               ? CheckEntry::pass("fusion eigenvalues", "Eq. v-form-3",
                                                  d.max_eigen_dev)
                               : CheckEntry::fail("fusion eigenvalues", "Eq. v-form-3",
                                                  d.max_eigen_dev));
    } catch (const CheckFailure& cf) {
      rep.checks.push_back(CheckEntry::fail(std::string("diagonalization: ") + cf.check,
                                            "Eq. diag2", cf.residual, cf.witness));
      rep.checks.push_back(CheckEntry::skip("fusion eigenvalues", "Eq. v-form-3"));
    }
    for (auto& c : verify_ring_axioms(table).checks) rep.checks.push_back(c);
  } else {
    rep.checks.push_back(CheckEntry::skip("diagonalization", "Eq. diag2"));
    rep.checks.push_back(CheckEntry::skip("fusion eigenvalues", "Eq. v-form-3"));
    for (const char* name : {"ring unit law", "ring dual law", "ring commutativity",
                             "ring associativity"})
      rep.checks.push_back(CheckEntry::skip(name, "ring axioms"));
  }

  // 4. fusing/braiding identities
  struct FbCheck {
    const char* name;
    const char* anchor;
  };
  static const FbCheck kFb[] = {
      {"sigma involutions and braid relation", "Eq. s3-sym"},
      {"vacuum F normalization", "Eqs. fusing3, fusing4"},
      {"fusing inverse symmetry", "Eq. fusing-inv"},
      {"fusing symmetry", "Eq. fusing"},
      {"braiding vacuum identity", "Eq. braiding"},
      {"monodromy spectrum", "Eq. braiding"},
      {"first Moore-Seiberg formula", "Eq. formula1-2"},
      {"second Moore-Seiberg formula", "Eq. formula2"},
      {"lambda consistency", "Eq. lambda"},
  };
  if (ft) {
    run(kFb[0].name, kFb[0].anchor, tol.fb, [&] { return check_sigma_relations(*ft); });
    run(kFb[1].name, kFb[1].anchor, tol.fb, [&] { return check_vacuum_normalization(*ft); });
    run(kFb[2].name, kFb[2].anchor, tol.fb, [&] { return check_fusing_inverse_symmetry(*ft); });
    run(kFb[3].name, kFb[3].anchor, tol.fb, [&] { return check_fusing_symmetry(*ft); });
    run(kFb[4].name, kFb[4].anchor, tol.fb, [&] {
      Real worst(0);
      for (int r : {-1, 0, 1}) {
        Real v = check_braiding_vacuum_identity(*ft, r);
        if (v > worst) worst = v;
      }
      return worst;
    });
    run(kFb[5].name, kFb[5].anchor, tol.fb, [&] {
      Real worst(0);
      for (int r : {-1, 0, 1}) {
        Real v = check_monodromy_spectrum(*ft, r);
        if (v > worst) worst = v;
      }
      return worst;
    });
    run(kFb[6].name, kFb[6].anchor, tol.fb, [&] { return ms_formula1(*ft); });
    run(kFb[7].name, kFb[7].anchor, tol.fb, [&] { return ms_formula2(*ft); });
    run(kFb[8].name, kFb[8].anchor, tol.fb, [&] { return verify_lambda_consistency(*ft, tol); });
  } else {
    for (const auto& c : kFb) rep.checks.push_back(CheckEntry::skip(c.name, c.anchor));
  }
  return rep;
}

namespace {

const char* status_word(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Skip:
      return "skip";
  }
  return "?";
}

}  // namespace

std::string format_report(const VerificationReport& rep, ReportFormat fmt) {
  if (fmt == ReportFormat::Markdown) {
    std::ostringstream out;
    out << "# verification report: " << rep.theory << "\n\n";
    out << "tool: " << rep.tool_version << "\n";
    out << "precision bits: " << rep.precision_bits << "\n";
    out << "result: " << (rep.all_passed() ? "PASS" : "FAIL") << "\n\n";
    out << "## checks\n\n";
    for (const auto& c : rep.checks) {
      out << "- [" << status_word(c.status) << "] " << c.name << " (" << c.anchor << ")";
      if (c.has_residual) out << ": residual " << real_to_string(c.residual, kReportDigits);
      if (!c.witness.empty()) out << " witness " << c.witness;
      out << "\n";
    }
    return out.str();
  }
  json j;
  j["theory"] = rep.theory;
  j["precision_bits"] = rep.precision_bits;
  j["tool_version"] = rep.tool_version;
  j["result"] = rep.all_passed() ? "pass" : "fail";
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json e;
    e["name"] = c.name;
    e["anchor"] = c.anchor;
    e["status"] = c.status == CheckStatus::Pass   ? "pass"
                  : c.status == CheckStatus::Fail ? "fail"
                                                  : "skip";
    if (c.has_residual)
      e["residual"] = real_to_string(c.residual, kReportDigits);
    else
      e["residual"] = nullptr;
    e["witness"] = c.witness;
    checks.push_back(e);
  }
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

void emit_report(const VerificationReport& rep, ReportFormat fmt, const std::string& path) {
  write_file(path, format_report(rep, fmt));
}

}  // namespace verlinde
