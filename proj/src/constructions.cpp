#include "kneser/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <string>

namespace kneser {

namespace detail {
const char* k115_gamma3_text();
}

namespace {

int wrap(int x, int m) { return (x - 1) % m + 1; }

Vertex pairv(int a, int b) { return vertex_of({a, b}); }

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

std::vector<Vertex> circulant_layer_raw(int m, int i) {
  std::set<Vertex> out;
  for (int x = 1; x <= m; ++x) out.insert(pairv(x, wrap(x + i, m)));
  return {out.begin(), out.end()};
}

std::vector<Vertex> d_m_alpha_raw(int m, int alpha) {
  if (alpha < 2) throw std::invalid_argument("d_m_alpha: alpha must be >= 2");
  if (m <= alpha) throw std::invalid_argument("d_m_alpha: m must exceed alpha");
  std::set<Vertex> out;
  int a = alpha / 2;
  for (int i = 1; i <= a; ++i) {
    for (Vertex v : circulant_layer_raw(m, i)) out.insert(v);
  }
  if (alpha % 2 == 1) {
    for (int x = 1; x <= m / 2; ++x) out.insert(pairv(x, x + m / 2));
  }
  return {out.begin(), out.end()};
}

}  // namespace

AlphaParams alpha_split(long long k, int alpha) {
  if (alpha < 2) throw std::invalid_argument("alpha_split: alpha must be >= 2");
  if (k < 1) throw std::invalid_argument("alpha_split: k must be >= 1");
  AlphaParams p;
  p.alpha = alpha;
  p.a = alpha / 2;
  p.k = k;
  p.lambda = k / alpha;
  p.b = static_cast<int>(k % alpha);
  if (p.b == 0) {
    p.which = AlphaParams::Case::b_zero;
    p.h = alpha + 2;
  } else if (p.b < p.a) {
    p.which = AlphaParams::Case::b_below_a;
    p.h = 2 * p.b + 2;
  } else if (p.b == p.a) {
    p.which = AlphaParams::Case::b_equal_a;
    p.h = 2 * p.b + 2;
  } else {
    p.which = AlphaParams::Case::b_above_a;
    p.h = 2 * p.b - alpha + 2;
  }
  return p;
}

VertexSet disjoint_family(int n, int r, int m) {
  if (m < 1) throw std::invalid_argument("disjoint_family: m must be >= 1");
  if (n < r * m) throw std::invalid_argument("disjoint_family: need n >= r*m");
  KneserParams params(n, r);
  std::vector<Vertex> out;
  for (int j = 1; j <= m; ++j) {
    std::vector<int> elems;
    for (int x = (j - 1) * r + 1; x <= j * r; ++x) elems.push_back(x);
    out.push_back(vertex_from_elements(elems));
  }
  return VertexSet(params, std::move(out));
}

VertexSet dhat_n2(long long k, int ambient_n) {
  if (k < 2) throw std::invalid_argument("dhat_n2: k must be >= 2");
  long long n_min = 2 * k + 3;
  if (n_min > 64) throw std::invalid_argument("dhat_n2: 2k+3 exceeds the 64-element cap");
  int n = ambient_n == 0 ? static_cast<int>(n_min) : ambient_n;
  if (n < n_min) throw std::invalid_argument("dhat_n2: ambient n must be >= 2k+3");
  std::vector<Vertex> out = {pairv(1, 2), pairv(1, 3), pairv(2, 3)};
  for (int a = 2; a <= k + 1; ++a) out.push_back(pairv(2 * a, 2 * a + 1));
  return VertexSet(KneserParams(n, 2), std::move(out));
}

VertexSet circulant_layer(int m, int i, int ambient_n) {
  if (i < 1 || 2 * i >= m) throw std::invalid_argument("circulant_layer: need 1 <= i < m/2");
  int n = std::max(m, ambient_n);
  return VertexSet(KneserParams(n, 2), circulant_layer_raw(m, i));
}

VertexSet d_m_alpha(int m, int alpha, int ambient_n) {
  int n = std::max(m, ambient_n);
  return VertexSet(KneserParams(n, 2), d_m_alpha_raw(m, alpha));
}

VertexSet d_of_h(int n, int alpha, int h) {
  if (h < 1 || h >= n - alpha) throw std::invalid_argument("d_of_h: need 1 <= h < n-alpha");
  std::vector<Vertex> out = d_m_alpha_raw(n - h, alpha);
  for (int a = n - h + 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) out.push_back(pairv(a, b));
  }
  return VertexSet(KneserParams(n, 2), std::move(out));
}

VertexSet build_k_plus_2alpha(int n, long long k, int alpha) {
  if (alpha < 2) throw std::invalid_argument("build_k_plus_2alpha: alpha must be >= 2");
  if (k < 1) throw std::invalid_argument("build_k_plus_2alpha: k must be >= 1");
  if (n < alpha + 2) throw std::invalid_argument("build_k_plus_2alpha: need n >= alpha+2");
  if (static_cast<long long>(alpha) * n < 2 * k + 4 * alpha) {
    throw std::invalid_argument("build_k_plus_2alpha: need n >= 2k/alpha + 4");
  }
  std::vector<Vertex> d = d_m_alpha_raw(n, alpha);
  long long target = k + 2 * alpha;
  long long surplus = static_cast<long long>(d.size()) - target;
  if (surplus < 0) throw std::logic_error("build_k_plus_2alpha: family smaller than target");
  // drop the canonically largest vertices; any choice keeps i_x <= alpha
  std::sort(d.begin(), d.end());
  d.resize(static_cast<std::size_t>(target));
  return VertexSet(KneserParams(n, 2), std::move(d));
}

VertexSet build_k_plus_2alpha_plus1(int n, long long k, int alpha) {
  if (alpha < 2) throw std::invalid_argument("build_k_plus_2alpha_plus1: alpha must be >= 2");
  if (k < 1) throw std::invalid_argument("build_k_plus_2alpha_plus1: k must be >= 1");
  if (n < 2 * alpha + 3) {
    throw std::invalid_argument("build_k_plus_2alpha_plus1: need n >= 2*alpha+3");
  }
  if (n != ceil_div(2 * k, alpha) + 3) {
    throw std::invalid_argument("build_k_plus_2alpha_plus1: need n = ceil(2k/alpha)+3");
  }
  AlphaParams p = alpha_split(k, alpha);
  const int h = p.h;
  const int m = n - h;

  std::set<Vertex> d;
  {
    VertexSet base = d_of_h(n, alpha, h);
    d.insert(base.begin(), base.end());
  }
  auto swap_pair = [&](Vertex take, Vertex put1, Vertex put2) {
    if (d.erase(take) != 1) throw std::logic_error("k+2a+1 repair: vertex to remove not present");
    if (!d.insert(put1).second || !d.insert(put2).second) {
      throw std::logic_error("k+2a+1 repair: replacement vertex already present");
    }
  };

  switch (p.which) {
    case AlphaParams::Case::b_zero:
      break;  // D(alpha+2) verbatim
    case AlphaParams::Case::b_below_a:
      for (int j = 1; j <= p.b + 1; ++j) {
        for (int xi = 1; xi <= alpha - 2 * p.b; ++xi) {
          swap_pair(pairv(xi, wrap(xi + j, m)), pairv(xi, m + 2 * j - 1),
                    pairv(wrap(xi + j, m), m + 2 * j));
        }
      }
      break;
    case AlphaParams::Case::b_equal_a:
      if (alpha % 2 == 1) {
        for (int xi = 1; xi <= p.b + 1; ++xi) {
          swap_pair(pairv(xi, wrap(xi + 1, m)), pairv(xi, m + 2 * xi - 1),
                    pairv(wrap(xi + 1, m), m + 2 * xi));
        }
      }
      break;  // alpha even: D(2b+2) verbatim
    case AlphaParams::Case::b_above_a:
      if (alpha % 2 == 0) {
        for (int j = 1; j <= p.b - p.a + 1; ++j) {
          for (int xi = 1; xi <= 2 * alpha - 2 * p.b; ++xi) {
            swap_pair(pairv(xi, wrap(xi + j, m)), pairv(xi, m + 2 * j - 1),
                      pairv(wrap(xi + j, m), m + 2 * j));
          }
        }
      } else {
        for (int j = 1; j <= p.b - p.a; ++j) {
          for (int xi = 1; xi <= 2 * alpha - 2 * p.b; ++xi) {
            swap_pair(pairv(xi, wrap(xi + j, m)), pairv(xi, m + 2 * j - 1),
                      pairv(wrap(xi + j, m), m + 2 * j));
          }
        }
        // diameter-layer swap pairing through element n
        for (int xi = 1; xi <= alpha - p.b; ++xi) {
          swap_pair(pairv(xi, xi + m / 2), pairv(xi, n), pairv(xi + m / 2, n));
        }
      }
      break;
  }
  if (static_cast<long long>(d.size()) != k + 2 * alpha + 1) {
    throw std::logic_error("build_k_plus_2alpha_plus1: size mismatch");
  }
  return VertexSet(KneserParams(n, 2), {d.begin(), d.end()});
}

VertexSet large_k_complement(int n, int r, int t) {
  if (t < 0) throw std::invalid_argument("large_k_complement: t must be >= 0");
  KneserParams params(n, r);
  long long k = params.degree() - t;
  if (k < 1) throw std::invalid_argument("large_k_complement: k = C(n-r,r)-t would be < 1");
  long long threshold = static_cast<long long>(t + 3) * r - ceil_div(t + 2, 2);
  if (n < threshold) {
    throw std::invalid_argument("large_k_complement: need n >= (t+3)r - ceil((t+2)/2)");
  }
  VertexSet all = enumerate_vertices(params);
  std::vector<Vertex> out(all.begin() + (t + 1), all.end());
  return VertexSet(params, std::move(out));
}

VertexSet boundary_family_S(int n, int r, int t) {
  if (t < 0) throw std::invalid_argument("boundary_family_S: t must be >= 0");
  long long threshold = static_cast<long long>(t + 3) * r - ceil_div(t + 2, 2);
  if (n != threshold - 1) {
    throw std::invalid_argument("boundary_family_S: need n = (t+3)r - ceil((t+2)/2) - 1");
  }
  KneserParams params(n, r);
  auto block = [&](int lo, int hi) {
    std::vector<int> elems;
    for (int x = lo; x <= hi; ++x) elems.push_back(x);
    return vertex_from_elements(elems);
  };
  std::vector<Vertex> s;
  if (t % 2 == 0) {
    for (int x = 1; x <= t / 2 + 1; ++x) {
      int xi = (x - 1) * (2 * r - 1);
      s.push_back(block(xi + 1, xi + r));
      s.push_back(block(xi + r, xi + 2 * r - 1));
    }
  } else {
    // (t+1)/2 - 1 two-block rows, then the chained three-block row
    for (int x = 1; x <= (t + 1) / 2 - 1; ++x) {
      int xi = (x - 1) * (2 * r - 1);
      s.push_back(block(xi + 1, xi + r));
      s.push_back(block(xi + r, xi + 2 * r - 1));
    }
    int xi = ((t + 1) / 2 - 1) * (2 * r - 1);
    s.push_back(block(xi + 1, xi + r));
    s.push_back(block(xi + r, xi + 2 * r - 1));
    s.push_back(block(xi + 2 * r - 1, xi + 3 * r - 2));
  }
  if (static_cast<int>(s.size()) != t + 2) {
    throw std::logic_error("boundary_family_S: family size is not t+2");
  }
  return VertexSet(params, std::move(s));
}

std::pair<VertexSet, VertexSet> fano_planes() {
  KneserParams params(7, 3);
  auto mk = [&](std::initializer_list<std::array<int, 3>> triples) {
    std::vector<Vertex> vs;
    for (const auto& t : triples) vs.push_back(vertex_of({t[0], t[1], t[2]}));
    return VertexSet(params, std::move(vs));
  };
  VertexSet f1 = mk({{1, 2, 4}, {1, 5, 6}, {2, 3, 5}, {2, 6, 7}, {3, 4, 6}, {1, 3, 7}, {4, 5, 7}});
  VertexSet f2 = mk({{3, 5, 6}, {2, 3, 7}, {4, 6, 7}, {1, 3, 4}, {1, 5, 7}, {2, 4, 5}, {1, 2, 6}});
  return {f1, f2};
}

namespace {

VertexSet union_sets(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return VertexSet(a.params(), std::move(out));
}

// Completes a partial S(4,5,11) to the full 66 blocks by exact cover over
// 4-subsets: repeatedly take the uncovered 4-subset with fewest candidate
// blocks, try candidates in canonical order.
std::vector<Vertex> complete_steiner_4_5_11(std::vector<Vertex> seed,
                                            const std::set<Vertex>& forbidden) {
  std::map<std::uint64_t, int> cover;  // 4-subset bits -> covering blocks
  std::vector<std::uint64_t> quads;
  {
    std::uint64_t q = 0xF;
    const std::uint64_t last = std::uint64_t{0xF} << 7;
    while (true) {
      quads.push_back(q);
      cover[q] = 0;
      if (q == last) break;
      std::uint64_t c = q & (~q + 1);
      std::uint64_t rr = q + c;
      q = (((q ^ rr) >> 2) / c) | rr;
    }
  }
  auto quads_of = [](std::uint64_t block) {
    std::array<std::uint64_t, 5> qs;
    int i = 0;
    for (std::uint64_t b = block; b != 0; b &= b - 1) {
      qs[i++] = block & ~(b & (~b + 1));
    }
    return qs;
  };
  auto place = [&](std::uint64_t block, int delta) {
    for (std::uint64_t q : quads_of(block)) cover[q] += delta;
  };
  for (Vertex v : seed) {
    place(v.bits, 1);
    for (std::uint64_t q : quads_of(v.bits)) {
      if (cover[q] > 1) throw std::logic_error("steiner seed covers a 4-subset twice");
    }
  }
  auto candidates = [&](std::uint64_t q) {
    std::vector<std::uint64_t> out;
    for (int x = 1; x <= 11; ++x) {
      std::uint64_t bit = std::uint64_t{1} << (x - 1);
      if (q & bit) continue;
      std::uint64_t block = q | bit;
      if (forbidden.count(Vertex{block})) continue;
      bool clash = false;
      for (std::uint64_t qq : quads_of(block)) {
        if (cover[qq] > 0) { clash = true; break; }
      }
      if (!clash) out.push_back(block);
    }
    return out;
  };

  std::vector<Vertex> blocks = std::move(seed);
  auto dfs = [&](auto&& self) -> bool {
    if (blocks.size() == 66) return true;
    std::uint64_t pick = 0;
    std::size_t best = SIZE_MAX;
    for (std::uint64_t q : quads) {
      if (cover[q] > 0) continue;
      std::size_t c = candidates(q).size();
      if (c < best) {
        best = c;
        pick = q;
        if (c == 0) break;
      }
    }
    if (best == SIZE_MAX) return blocks.size() == 66;
    if (best == 0) return false;
    for (std::uint64_t block : candidates(pick)) {
      blocks.push_back(Vertex{block});
      place(block, 1);
      if (self(self)) return true;
      place(block, -1);
      blocks.pop_back();
    }
    return false;
  };
  if (!dfs(dfs)) throw std::logic_error("S(4,5,11) completion failed");
  return blocks;
}

struct SchemeRow {
  int a;
  int pairs[3][2];  // three disjoint pairs from the other side
};

struct Scheme {
  int base[5];
  SchemeRow rows[5];
};

std::vector<Vertex> steiner_seed(const Scheme& s) {
  std::vector<Vertex> seed;
  seed.push_back(vertex_of({s.base[0], s.base[1], s.base[2], s.base[3], s.base[4]}));
  for (const SchemeRow& row : s.rows) {
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        seed.push_back(vertex_of({row.a, row.pairs[i][0], row.pairs[i][1],
                                  row.pairs[j][0], row.pairs[j][1]}));
      }
    }
  }
  return seed;
}

const Scheme kScheme1 = {{1, 2, 3, 4, 5},
                         {{1, {{6, 7}, {8, 9}, {10, 11}}},
                          {2, {{6, 8}, {9, 10}, {7, 11}}},
                          {3, {{6, 9}, {7, 10}, {8, 11}}},
                          {4, {{6, 10}, {7, 8}, {9, 11}}},
                          {5, {{6, 11}, {8, 10}, {7, 9}}}}};

const Scheme kScheme2 = {{6, 8, 9, 10, 11},
                         {{6, {{1, 5}, {2, 4}, {3, 7}}},
                          {8, {{1, 2}, {3, 5}, {4, 7}}},
                          {9, {{1, 4}, {2, 3}, {5, 7}}},
                          {10, {{1, 3}, {2, 7}, {4, 5}}},
                          {11, {{1, 7}, {2, 5}, {3, 4}}}}};

const VertexSet& steiner_first() {
  static const VertexSet s(KneserParams(11, 5),
                           complete_steiner_4_5_11(steiner_seed(kScheme1), {}));
  return s;
}

const VertexSet& steiner_second() {
  static const VertexSet s = [] {
    const VertexSet& s1 = steiner_first();
    std::set<Vertex> forbid(s1.begin(), s1.end());
    VertexSet s2(KneserParams(11, 5),
                 complete_steiner_4_5_11(steiner_seed(kScheme2), forbid));
    for (Vertex v : s2) {
      if (forbid.count(v)) throw std::logic_error("second S(4,5,11) meets the first");
    }
    return s2;
  }();
  return s;
}

const VertexSet& k115_d3() {
  static const VertexSet d3 = [] {
    std::istringstream in(detail::k115_gamma3_text());
    return read_vertex_set_text(in, KneserParams(11, 5));
  }();
  return d3;
}

}  // namespace

VertexSet k73_gamma_sets(int k) {
  if (k < 1 || k > 5) throw std::invalid_argument("k73_gamma_sets: k must be in [1,5]");
  auto [f1, f2] = fano_planes();
  KneserParams params(7, 3);
  switch (k) {
    case 1: return f1;
    case 2: return union_sets(f1, f2);
    case 3: return complement_set(params, union_sets(f1, f2));
    case 4: return complement_set(params, f1);
    default: return enumerate_vertices(params);
  }
}

VertexSet steiner_4_5_11() { return steiner_first(); }

std::pair<VertexSet, VertexSet> steiner_4_5_11_pair() {
  return {steiner_first(), steiner_second()};
}

VertexSet k115_gamma_sets(int k) {
  if (k < 1 || k > 7) throw std::invalid_argument("k115_gamma_sets: k must be in [1,7]");
  KneserParams params(11, 5);
  switch (k) {
    case 1: return steiner_first();
    case 2: return union_sets(steiner_first(), steiner_second());
    case 3: return k115_d3();
    case 4: return complement_set(params, k115_d3());
    case 5: return complement_set(params, union_sets(steiner_first(), steiner_second()));
    case 6: return complement_set(params, steiner_first());
    default: return enumerate_vertices(params);
  }
}

VertexSet complement_set(const KneserParams& params, const VertexSet& D, long long cap) {
  if (!(D.params() == params)) throw std::invalid_argument("complement_set: params mismatch");
  VertexSet all = enumerate_vertices(params, cap);
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(all.size() - D.size()));
  for (Vertex v : all) {
    if (!D.contains(v)) out.push_back(v);
  }
  return VertexSet(params, std::move(out));
}

std::optional<VertexSet> best_construction(const KneserParams& params, long long k,
                                           long long cap) {
  const int n = params.n;
  const int r = params.r;
  const long long delta = params.degree();
  if (k < 1 || k > delta + 1) return std::nullopt;

  std::optional<VertexSet> best;
  auto consider = [&](VertexSet&& cand) {
    if (!best || cand.size() < best->size()) best = std::move(cand);
  };

  if (params.vertex_count() <= cap) consider(enumerate_vertices(params, cap));

  long long t = delta - k;
  if (t >= 0) {
    long long threshold = static_cast<long long>(t + 3) * r - ceil_div(t + 2, 2);
    if (n >= threshold && params.vertex_count() <= cap) {
      consider(large_k_complement(n, r, static_cast<int>(t)));
    } else if (n == threshold - 1 && params.vertex_count() <= cap) {
      consider(complement_set(params, boundary_family_S(n, r, static_cast<int>(t))));
    }
  }

  if (static_cast<long long>(r) * (k + r) <= n) {
    consider(disjoint_family(n, r, static_cast<int>(k + r)));
  }

  if (n == 7 && r == 3 && k <= 5) consider(k73_gamma_sets(static_cast<int>(k)));
  if (n == 11 && r == 5 && k <= 7) consider(k115_gamma_sets(static_cast<int>(k)));

  if (r == 2) {
    if (k == 1 && n >= 4) {
      consider(VertexSet(params, {pairv(1, 2), pairv(1, 3), pairv(2, 3)}));
    }
    if (k >= 2 && n >= 2 * k + 3) consider(dhat_n2(k, n));
    if (n >= 5) {
      // smallest alpha the k+2*alpha family supports
      long long alpha = std::max<long long>(2, ceil_div(2 * k, n - 4));
      if (alpha <= 62 && n >= alpha + 2 && alpha * n >= 2 * k + 4 * alpha) {
        consider(build_k_plus_2alpha(n, k, static_cast<int>(alpha)));
      }
    }
    for (int alpha = 2; 2 * alpha + 3 <= n; ++alpha) {
      if (n == ceil_div(2 * k, alpha) + 3) {
        consider(build_k_plus_2alpha_plus1(n, k, alpha));
      }
    }
    if (n >= 6 && k <= binomial(n - 4, 2) + 2) {
      std::vector<Vertex> d;
      for (int a = 1; a <= n - 2; ++a) {
        for (int b = a + 1; b <= n - 2; ++b) d.push_back(pairv(a, b));
      }
      d.push_back(pairv(n - 1, n));
      consider(VertexSet(params, std::move(d)));
    }
    if (n >= 5 && k <= binomial(n - 3, 2) + 1) {
      std::vector<Vertex> d;
      for (int a = 1; a <= n - 1; ++a) {
        for (int b = a + 1; b <= n - 1; ++b) d.push_back(pairv(a, b));
      }
      consider(VertexSet(params, std::move(d)));
    }
  }
  return best;
}

}  // namespace kneser
