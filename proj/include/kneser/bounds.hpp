#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kneser/core.hpp"

// Value engine: the tightest statement this library can make about
// gamma_xk(n,r) or rho(n,r) from the closed-form rules, constructions and
// monotonicity, without running the exact solver. Every number carries the
// rule tags that produced it; when several exact rules apply they must agree,
// and a disagreement aborts (regression tripwire rather than silent choice).

namespace kneser {

struct ValueReport {
  int n = 0;
  int r = 0;
  long long k = 0;  // 0 for packing reports
  long long lower = 0;
  long long upper = 0;
  bool exact = false;
  bool infeasible = false;  // k > C(n-r,r)+1: no k-tuple dominating set exists
  std::vector<std::string> provenance;
};

struct BoundsOptions {
  // Consult the on-disk witness cache (KNESER_CACHE_DIR) to tighten intervals.
  bool use_cache = true;
};

ValueReport gamma_value(int n, int r, long long k, const BoundsOptions& opts = {});
ValueReport packing_value(int n, int r, const BoundsOptions& opts = {});

// --- witness cache -----------------------------------------------------------
// Solver runs may persist certified sets; bounds picks them up as interval
// tighteners. Entries are VertexSet JSON plus a property tag.

std::optional<std::string> witness_cache_dir();  // from KNESER_CACHE_DIR

void save_witness(const std::string& dir, const VertexSet& s,
                  const std::string& property, long long k);

}  // namespace kneser
