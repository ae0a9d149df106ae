#pragma once

#include "verlinde/numerics.hpp"

#include <string>
#include <vector>

namespace verlinde {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckEntry {
  std::string name;
  CheckStatus status = CheckStatus::Skip;
  bool has_residual = false;
  Real residual;
  std::string witness;  // offending label tuple, empty when not applicable
  std::string anchor;   // stable identity tag, e.g. "Eq. diag2"

  static CheckEntry pass(const std::string& name, const std::string& anchor, const Real& residual);
  static CheckEntry fail(const std::string& name, const std::string& anchor, const Real& residual,
                         const std::string& witness = "");
  static CheckEntry skip(const std::string& name, const std::string& anchor);
};

struct VerificationReport {
  std::string theory;
  unsigned precision_bits = 0;
  std::string tool_version;
  std::vector<CheckEntry> checks;

  bool all_passed() const;
  // 0 when every non-skipped check passes, 1 otherwise.
  int exit_code() const { return all_passed() ? 0 : 1; }
};

}  // namespace verlinde
