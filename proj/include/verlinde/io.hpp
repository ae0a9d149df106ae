#pragma once

#include "verlinde/fb_calculus.hpp"

#include <string>

namespace verlinde {

inline constexpr const char* kToolVersion = "verlinde 1.0.0";

// modular.json
ModularData load_modular(const std::string& path);
ModularData parse_modular(const std::string& text, const std::string& origin = "<string>");
std::string modular_to_json(const ModularData& md);
void save_modular(const ModularData& md, const std::string& path);

// fdata.json; the theory name must match md.name and every label must exist.
FTensor load_fdata(const std::string& path, const ModularData& md);
FTensor parse_fdata(const std::string& text, const ModularData& md,
                    const std::string& origin = "<string>");
std::string fdata_to_json(const FTensor& ft);

// fusion.json: nonzero coefficients in canonical order plus the eigenvalue
// table.
std::string fusion_to_json(const FusionTable& ft);

// Full check suite in fixed order: structure, S theorems, Verlinde, ring
// axioms, F/B identities (skipped without fdata).
VerificationReport run_verify(const ModularData& md, const FTensor* ft, const Tolerances& tol);

enum class ReportFormat { Markdown, Json };
std::string format_report(const VerificationReport& rep, ReportFormat fmt);
void emit_report(const VerificationReport& rep, ReportFormat fmt, const std::string& path);

}  // namespace verlinde
