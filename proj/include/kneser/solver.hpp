#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "kneser/core.hpp"

// Exact optimization at desk scale: minimum k-tuple dominating set and maximum
// 2-packing by deterministic branch-and-bound, an exhaustive oracle for tiny
// graphs, and bit-exact export of the underlying ILP model.

namespace kneser {

struct Budget {
  std::uint64_t max_nodes = 50'000'000;
  double max_seconds = 300.0;
};

struct ProofEntry {
  std::vector<int> chosen;  // vertex indices fixed when the subtree was cut
  int next_index = 0;       // first undecided vertex index at the cut
  long long bound = 0;      // lower bound on any completion inside the subtree
};

struct SolverOptions {
  bool record_proof = false;
  int threads = 1;  // >1 splits the top of the search tree; optimum stays deterministic
};

struct SolveOutcome {
  long long optimum = 0;
  VertexSet witness;
  std::uint64_t nodes = 0;
  bool exact = true;  // false when a budget cut left only the incumbent
  std::vector<ProofEntry> proof;
};

// Branches on vertices in canonical order, include first; seeded by the best
// known construction; prunes by residual coverage demand, the k*rho packing
// bound, and (r=2) occurrence-sum infeasibility on partial assignments.
SolveOutcome min_ktuple_dominating(const KneserParams& params, long long k,
                                   const Budget& budget = {},
                                   const SolverOptions& opts = {});

// Max-clique search on the compatibility relation "closed neighborhoods
// disjoint", with greedy coloring bounds.
SolveOutcome max_2_packing(const KneserParams& params, const Budget& budget = {},
                           const SolverOptions& opts = {});

// Exhaustive enumeration by increasing cardinality; ground truth for
// regression. Requires C(n,r) <= 20.
SolveOutcome brute_force_min(const KneserParams& params, long long k);

void export_lp(const KneserParams& params, long long k, std::ostream& out);
std::string export_lp_string(const KneserParams& params, long long k);

}  // namespace kneser
