#pragma once

#include <utility>
#include <vector>

#include "kneser/core.hpp"

// Decision procedures for the set properties this library deals in: k-tuple
// domination, 2-packings, perfect 1-codes and Steiner systems. Each checker
// returns a certificate that either holds or carries a witness refutable by a
// single neighborhood count. Witnesses are always the first violation in
// canonical order, so failures reproduce exactly.

namespace kneser {

struct CertResult {
  bool holds = true;
  // Elements of the violating object: a vertex, an element pair, or a
  // t-subset, depending on the check. Empty when the property holds.
  std::vector<int> witness;
  // Per-vertex |N[v] cap D| map, filled only when requested.
  std::vector<std::pair<Vertex, long long>> detail;
};

CertResult is_k_tuple_dominating(const KneserParams& params, const VertexSet& D,
                                 long long k, bool with_detail = false,
                                 long long cap = kEnumerationCap);

// Occurrence characterization for r=2, n>=5: D k-tuple dominates K(n,2) iff
// i_a + i_b <= |D|-k+2 for pairs {a,b} in D and <= |D|-k otherwise.
// For n=4 this falls back to the general routine.
CertResult is_k_tuple_dominating_r2(const KneserParams& params, const VertexSet& D,
                                    long long k);

CertResult is_2_packing(const KneserParams& params, const VertexSet& S,
                        long long cap = kEnumerationCap);

CertResult is_perfect_1_code(const KneserParams& params, const VertexSet& C,
                             long long cap = kEnumerationCap);

CertResult is_steiner_system(int t, int r, int n, const VertexSet& blocks);

// |N[v] cap D| == k exactly for every vertex v; the tightness that a vertex-
// transitive graph forces on any dominating set of size k*rho.
CertResult certify_tight_domination(const KneserParams& params, const VertexSet& D,
                                    long long k, long long cap = kEnumerationCap);

}  // namespace kneser
