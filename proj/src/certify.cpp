#include "kneser/certify.hpp"

#include <bit>
#include <string>

namespace kneser {

namespace {

void check_same_graph(const KneserParams& params, const VertexSet& s) {
  if (!(s.params() == params)) {
    throw std::invalid_argument("VertexSet belongs to a different K(n,r)");
  }
}

}  // namespace

CertResult is_k_tuple_dominating(const KneserParams& params, const VertexSet& D,
                                 long long k, bool with_detail, long long cap) {
  check_same_graph(params, D);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  VertexSet all = enumerate_vertices(params, cap);
  CertResult res;
  for (Vertex v : all) {
    long long c = closed_neighborhood_count(v, D);
    if (with_detail) res.detail.emplace_back(v, c);
    if (c < k && res.holds) {
      res.holds = false;
      res.witness = v.elements();
      if (!with_detail) break;
    }
  }
  return res;
}

CertResult is_k_tuple_dominating_r2(const KneserParams& params, const VertexSet& D,
                                    long long k) {
  if (params.r != 2) throw std::invalid_argument("occurrence characterization needs r=2");
  check_same_graph(params, D);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (params.n < 5) return is_k_tuple_dominating(params, D, k);

  OccurrenceProfile prof = occurrence_profile(D);
  const long long size = D.size();
  CertResult res;
  // pairs {a,b} scanned in canonical (colex) vertex order
  for (int b = 2; b <= params.n; ++b) {
    for (int a = 1; a < b; ++a) {
      Vertex pair = vertex_of({a, b});
      long long limit = size - k + (D.contains(pair) ? 2 : 0);
      if (prof[a] + prof[b] > limit) {
        res.holds = false;
        res.witness = {a, b};
        return res;
      }
    }
  }
  return res;
}

CertResult is_2_packing(const KneserParams& params, const VertexSet& S, long long cap) {
  check_same_graph(params, S);
  const int n = params.n;
  const int r = params.r;
  const bool interval_range = (2 * r + 1 <= n) && (n <= 3 * r - 2);
  const bool scan = params.vertex_count() <= cap;
  VertexSet all = scan ? enumerate_vertices(params, cap) : VertexSet(params, {});

  CertResult res;
  const auto& mem = S.members();
  for (std::size_t i = 0; i < mem.size() && res.holds; ++i) {
    for (std::size_t j = i + 1; j < mem.size(); ++j) {
      Vertex u = mem[i], v = mem[j];
      bool meet;
      if (scan) {
        // definition, verbatim: some vertex lies in both closed neighborhoods
        meet = false;
        for (Vertex w : all) {
          bool in_u = (w == u) || are_adjacent(w, u);
          bool in_v = (w == v) || are_adjacent(w, v);
          if (in_u && in_v) { meet = true; break; }
        }
      } else {
        // N[u] and N[v] intersect iff u,v are adjacent or leave room for a
        // common neighbor outside u union v
        meet = are_adjacent(u, v) ||
               (n - std::popcount(u.bits | v.bits) >= r);
      }
      if (interval_range) {
        int inter = std::popcount(u.bits & v.bits);
        bool interval_ok = (1 <= inter) && (inter <= (3 * r - 1) - n);
        if (interval_ok != !meet) {
          throw std::logic_error("is_2_packing: interval test disagrees with definition");
        }
      }
      if (meet) {
        res.holds = false;
        res.witness = v.elements();  // later member of the clashing pair
        break;
      }
    }
  }
  return res;
}

CertResult is_perfect_1_code(const KneserParams& params, const VertexSet& C,
                             long long cap) {
  check_same_graph(params, C);
  VertexSet all = enumerate_vertices(params, cap);
  CertResult res;
  for (Vertex w : all) {
    long long c = closed_neighborhood_count(w, C);
    if (c != 1) {
      res.holds = false;
      res.witness = w.elements();
      return res;
    }
  }
  return res;
}

CertResult is_steiner_system(int t, int r, int n, const VertexSet& blocks) {
  if (!(1 <= t && t <= r && r <= n)) {
    throw std::invalid_argument("is_steiner_system needs 1 <= t <= r <= n");
  }
  if (blocks.params().r != r || blocks.params().n != n) {
    throw std::invalid_argument("blocks are not r-subsets of [n]");
  }
  CertResult res;
  // iterate all t-subsets of [n] in canonical order
  std::uint64_t sub = (std::uint64_t{1} << t) - 1;
  const std::uint64_t last = sub << (n - t);
  while (true) {
    int cover = 0;
    for (Vertex b : blocks) {
      if ((b.bits & sub) == sub) ++cover;
    }
    if (cover != 1) {
      res.holds = false;
      res.witness = Vertex{sub}.elements();
      return res;
    }
    if (sub == last) break;
    std::uint64_t c = sub & (~sub + 1);
    std::uint64_t rr = sub + c;
    sub = (((sub ^ rr) >> 2) / c) | rr;
  }
  return res;
}

CertResult certify_tight_domination(const KneserParams& params, const VertexSet& D,
                                    long long k, long long cap) {
  check_same_graph(params, D);
  VertexSet all = enumerate_vertices(params, cap);
  CertResult res;
  for (Vertex v : all) {
    if (closed_neighborhood_count(v, D) != k) {
      res.holds = false;
      res.witness = v.elements();
      return res;
    }
  }
  return res;
}

}  // namespace kneser
