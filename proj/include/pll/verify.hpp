#pragma once

#include <string>
#include <vector>

#include "pll/tables.hpp"

namespace pll {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass() const;
};

/// Runs the fast invariant suite: parametrization round trips, ladder and
/// detailed-balance identities, restart-map fixed point, solver-vs-oracle
/// agreement, mu invariance of the QSD, coefficient cross-checks, threshold
/// structure, and the rival-family identities.
VerifyReport run_verify();

Table verify_table(const VerifyReport& r);

}  // namespace pll
