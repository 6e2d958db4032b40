#pragma once

#include <optional>
#include <utility>

#include "kneser/core.hpp"

// Deterministic builders for every explicit set family used by the value
// engine and the solver seeds: disjoint blocks, the circulant D^{m,alpha}
// families and their k-tuple dominating derivatives for K(n,2), the large-k
// complements, the Fano planes of K(7,3) and the S(4,5,11) systems of
// K(11,5). Each builder returns exactly the claimed set; the certify module
// provides the matching checks.

namespace kneser {

// Split of k by alpha driving the k+2*alpha+1 construction: k = alpha*lambda + b,
// a = floor(alpha/2), h the block size of the case that applies.
struct AlphaParams {
  int alpha = 0;
  int a = 0;
  long long k = 0;
  long long lambda = 0;
  int b = 0;
  int h = 0;
  enum class Case { b_zero, b_below_a, b_equal_a, b_above_a };
  Case which = Case::b_zero;
};

AlphaParams alpha_split(long long k, int alpha);

// m pairwise-disjoint r-blocks [(j-1)r+1 .. jr] of [n].
VertexSet disjoint_family(int n, int r, int m);

// {1,2},{1,3},{2,3} plus {2a,2a+1} for a=2..k+1; the k-tuple dominating set
// of K(2k+3,2) with k+3 vertices. ambient_n >= 2k+3 widens the ground set.
VertexSet dhat_n2(long long k, int ambient_n = 0);

// D_i^[m]: the m pairs {x, x+i mod m}, each element of [m] occurring twice.
VertexSet circulant_layer(int m, int i, int ambient_n = 0);

// D^{m,alpha}: layers i=1..floor(alpha/2), plus the diameter layer when alpha
// is odd; floor(alpha*m/2) vertices with occurrences alpha (alpha-1 on element
// m when alpha and m are both odd).
VertexSet d_m_alpha(int m, int alpha, int ambient_n = 0);

// D(h) = D^{n-h,alpha} over [n-h] union all pairs from the top h elements.
VertexSet d_of_h(int n, int alpha, int h);

// k-tuple dominating set of K(n,2) with k+2*alpha vertices (D^{n,alpha} with
// the canonically largest surplus vertices removed).
VertexSet build_k_plus_2alpha(int n, long long k, int alpha);

// k-tuple dominating set of K(n,2) with k+2*alpha+1 vertices, n = ceil(2k/alpha)+3,
// via the case split of alpha_split.
VertexSet build_k_plus_2alpha_plus1(int n, long long k, int alpha);

// V minus the first t+1 vertices: a gamma_xk-set for k = C(n-r,r)-t when
// n >= (t+3)r - ceil((t+2)/2).
VertexSet large_k_complement(int n, int r, int t);

// The t+2 chained blocks witnessing that the threshold above is sharp
// (requires n = threshold-1); V minus this set k-tuple dominates.
VertexSet boundary_family_S(int n, int r, int t);

// The two disjoint Fano planes of K(7,3).
std::pair<VertexSet, VertexSet> fano_planes();

// The gamma_xk-sets D_1..D_5 of K(7,3): F1, F1+F2, and complements; |D_k| = 7k.
VertexSet k73_gamma_sets(int k);

// The 66-block Steiner system S(4,5,11) completed from the base scheme;
// a perfect 1-code of K(11,5).
VertexSet steiner_4_5_11();

// Both disjoint S(4,5,11) systems (the second from the swapped scheme).
std::pair<VertexSet, VertexSet> steiner_4_5_11_pair();

// The gamma_xk-sets D_1..D_7 of K(11,5); |D_k| = 66k.
VertexSet k115_gamma_sets(int k);

VertexSet complement_set(const KneserParams& params, const VertexSet& D,
                         long long cap = kEnumerationCap);

// Smallest known k-tuple dominating set of K(n,r) buildable from the families
// above; nullopt when k exceeds degree+1. Used to seed the exact solver.
std::optional<VertexSet> best_construction(const KneserParams& params, long long k,
                                           long long cap = kEnumerationCap);

}  // namespace kneser
