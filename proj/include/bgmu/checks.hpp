#pragma once

// Cross-identity suite: runs every internal consistency check on an
// enumerated set of classes and reports findings instead of failing.
// Formula values are compared against the poset ground truth; a mismatch in
// the formula's valid domain is an error, outside it a warning.

#include "bgmu/strata.hpp"

namespace bgmu::strata {

enum class Severity { info, warn, error };

struct Finding {
  Severity severity = Severity::info;
  std::string code;     // stable machine-readable tag
  std::string message;  // human-readable detail
};

std::string severity_name(Severity s);

struct CheckOptions {
  bool verify = false;      // also run the costly suites (defect box search)
  size_t hull_rank_cap = 6; // convex-hull oracle gated by rank
  size_t subset_cap = 3;    // sup/inf subsets up to this size (exhaustive)
};

struct CheckReport {
  std::vector<Finding> findings;
  size_t checks_run = 0;

  bool failed() const {
    for (auto const& f : findings)
      if (f.severity == Severity::error) return true;
    return false;
  }
  void add(Severity s, std::string code, std::string message) {
    findings.push_back({s, std::move(code), std::move(message)});
  }
};

/// Runs the full suite for one (datum, mu):
///  - partial order sanity (antisymmetry, transitivity)
///  - agreement with the convex hull oracle (rank-capped)
///  - gradedness: longest == shortest maximal chain for all comparable pairs
///  - floor-sum formula against poset lengths (domain-policed)
///  - type A: enumeration == polygon oracle, integral point law,
///    slope defect == derived defect
///  - dimension identities of the strata table
///  - sup/inf existence for subsets (exhaustive up to subset_cap; all subsets
///    when the poset has at most 12 classes)
///  - derived defect independence over the auxiliary box (verify mode)
CheckReport run_checks(DatumPtr const& datum, QVec const& mu, CheckOptions const& opt = {});

}  // namespace bgmu::strata
