#include "verlinde/report.hpp"

namespace verlinde {

CheckEntry CheckEntry::pass(const std::string& name, const std::string& anchor,
                            const Real& residual) {
  CheckEntry e;
  e.name = name;
  e.anchor = anchor;
  e.status = CheckStatus::Pass;
  e.has_residual = true;
  e.residual = residual;
  return e;
}

CheckEntry CheckEntry::fail(const std::string& name, const std::string& anchor,
                            const Real& residual, const std::string& witness) {
  CheckEntry e;
  e.name = name;
  e.anchor = anchor;
  e.status = CheckStatus::Fail;
  e.has_residual = true;
  e.residual = residual;
  e.witness = witness;
  return e;
}

CheckEntry CheckEntry::skip(const std::string& name, const std::string& anchor) {
  CheckEntry e;
  e.name = name;
  e.anchor = anchor;
  e.status = CheckStatus::Skip;
  return e;
}

bool VerificationReport::all_passed() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

}  // namespace verlinde
