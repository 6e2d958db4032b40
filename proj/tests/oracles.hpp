#pragma once

// Test-only oracles: literal restatements of the definitions, kept independent
// of the library code paths they check.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "kneser/core.hpp"

namespace oracles {

using kneser::KneserParams;
using kneser::Vertex;
using kneser::VertexSet;

inline bool disjoint(Vertex u, Vertex v) { return (u.bits & v.bits) == 0; }

inline std::vector<Vertex> all_vertices(const KneserParams& p) {
  std::vector<Vertex> out;
  std::vector<int> idx(static_cast<std::size_t>(p.r));
  // plain nested-combination enumeration, then sort by bit pattern
  std::vector<int> elems;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(elems.size()) == p.r) {
      out.push_back(kneser::vertex_from_elements(elems));
      return;
    }
    for (int x = start; x <= p.n; ++x) {
      elems.push_back(x);
      self(self, x + 1);
      elems.pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Vertex> closed_neighborhood(const KneserParams& p, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex w : all_vertices(p)) {
    if (w == v || disjoint(w, v)) out.push_back(w);
  }
  return out;
}

inline long long count_in_closed_nbhd(const KneserParams& p, Vertex v,
                                      const VertexSet& D) {
  auto nb = closed_neighborhood(p, v);
  long long c = 0;
  for (Vertex w : nb) {
    if (D.contains(w)) ++c;
  }
  return c;
}

inline bool is_ktuple_dominating(const KneserParams& p, const VertexSet& D, long long k) {
  for (Vertex v : all_vertices(p)) {
    if (count_in_closed_nbhd(p, v, D) < k) return false;
  }
  return true;
}

// literally: the closed neighborhoods, as vertex sets, are pairwise disjoint
inline bool is_2_packing(const KneserParams& p, const VertexSet& S) {
  std::vector<std::set<std::uint64_t>> nbhds;
  for (Vertex v : S) {
    std::set<std::uint64_t> nb;
    for (Vertex w : closed_neighborhood(p, v)) nb.insert(w.bits);
    nbhds.push_back(std::move(nb));
  }
  for (std::size_t i = 0; i < nbhds.size(); ++i) {
    for (std::size_t j = i + 1; j < nbhds.size(); ++j) {
      for (std::uint64_t b : nbhds[i]) {
        if (nbhds[j].count(b)) return false;
      }
    }
  }
  return true;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  int uniform(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(gen);
  }

  Vertex random_vertex(const KneserParams& p) {
    std::vector<int> pool(static_cast<std::size_t>(p.n));
    for (int x = 1; x <= p.n; ++x) pool[static_cast<std::size_t>(x - 1)] = x;
    std::shuffle(pool.begin(), pool.end(), gen);
    pool.resize(static_cast<std::size_t>(p.r));
    return kneser::vertex_from_elements(pool);
  }

  VertexSet random_set(const KneserParams& p, int size) {
    std::set<Vertex> acc;
    while (static_cast<int>(acc.size()) < size) acc.insert(random_vertex(p));
    return VertexSet(p, {acc.begin(), acc.end()});
  }
};

}  // namespace oracles
