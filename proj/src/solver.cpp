#include "kneser/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "kneser/bounds.hpp"
#include "kneser/certify.hpp"
#include "kneser/constructions.hpp"

namespace kneser {

namespace {

constexpr long long kDominationCap = 5000;
constexpr long long kPackingCap = 12000;

using Clock = std::chrono::steady_clock;

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

struct BitMatrix {
  int cols = 0;
  int words = 0;
  std::vector<std::uint64_t> data;

  BitMatrix(int rows, int cols_) : cols(cols_), words((cols_ + 63) / 64) {
    data.assign(static_cast<std::size_t>(rows) * words, 0);
  }
  std::uint64_t* row(int i) { return data.data() + static_cast<std::size_t>(i) * words; }
  const std::uint64_t* row(int i) const {
    return data.data() + static_cast<std::size_t>(i) * words;
  }
  void set(int i, int j) { row(i)[j >> 6] |= std::uint64_t{1} << (j & 63); }
  bool get(int i, int j) const { return row(i)[j >> 6] >> (j & 63) & 1; }
};

// --- minimum k-tuple dominating set ------------------------------------------

struct DomProblem {
  KneserParams params;
  long long k;
  int C = 0;
  long long cover_size = 0;  // delta + 1
  std::vector<Vertex> verts;
  std::vector<std::vector<int>> nbr;  // closed neighborhood index lists
  long long global_lb = 0;            // k*rho when the packing number is exact
  bool r2_prune = false;
  std::vector<long long> pair_index;  // r=2: colex index of pair {a,b}, a<b

  DomProblem(const KneserParams& p, long long k_) : params(p), k(k_) {
    if (k < 1 || k > p.degree() + 1) {
      throw std::invalid_argument("min_ktuple_dominating: k must be in [1, degree+1]");
    }
    if (p.vertex_count() > kDominationCap) {
      throw CapacityError("min_ktuple_dominating: instance over the solver cap");
    }
    VertexSet all = enumerate_vertices(p);
    verts.assign(all.begin(), all.end());
    C = static_cast<int>(verts.size());
    cover_size = p.degree() + 1;
    nbr.resize(C);
    for (int i = 0; i < C; ++i) {
      for (int j = 0; j < C; ++j) {
        if (i == j || are_adjacent(verts[i], verts[j])) nbr[i].push_back(j);
      }
    }
    ValueReport pv = packing_value(p.n, p.r, BoundsOptions{.use_cache = false});
    if (pv.exact) global_lb = k * pv.lower;
    r2_prune = (p.r == 2 && p.n >= 5);
    if (r2_prune) {
      pair_index.assign(static_cast<std::size_t>(p.n + 1) * (p.n + 1), -1);
      for (int i = 0; i < C; ++i) {
        auto e = verts[i].elements();
        pair_index[static_cast<std::size_t>(e[0]) * (p.n + 1) + e[1]] = i;
      }
    }
  }

  long long pair_at(int a, int b) const {  // a < b
    return pair_index[static_cast<std::size_t>(a) * (params.n + 1) + b];
  }
};

struct Shared {
  std::atomic<long long> best_size;
  std::vector<int> best_witness;  // indices; guarded by mutex
  std::mutex witness_mutex;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> out_of_budget{false};
  Clock::time_point deadline;
  std::uint64_t max_nodes = 0;
};

struct DomSearch {
  const DomProblem& pb;
  Shared& sh;
  const SolverOptions& opts;

  std::vector<int> cover;      // |chosen cap N[v]|
  std::vector<int> avail;      // undecided vertices in N[v]
  std::vector<char> chosen;    // decision flags for v < idx
  std::vector<int> stack;      // chosen indices in order
  std::vector<long long> icount;  // r=2 element occurrences in chosen
  long long demand = 0;           // sum over v of max(0, k - cover[v])
  std::vector<ProofEntry>* proof = nullptr;

  DomSearch(const DomProblem& pb_, Shared& sh_, const SolverOptions& opts_)
      : pb(pb_), sh(sh_), opts(opts_) {
    cover.assign(pb.C, 0);
    avail.assign(pb.C, 0);
    for (int v = 0; v < pb.C; ++v) avail[v] = static_cast<int>(pb.nbr[v].size());
    chosen.assign(pb.C, 0);
    icount.assign(pb.params.n + 1, 0);
    demand = pb.k * pb.C;
  }

  bool budget_ok() {
    std::uint64_t seen = sh.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (seen > sh.max_nodes) {
      sh.out_of_budget.store(true, std::memory_order_relaxed);
      return false;
    }
    if ((seen & 0xFFF) == 0 && Clock::now() > sh.deadline) {
      sh.out_of_budget.store(true, std::memory_order_relaxed);
      return false;
    }
    return !sh.out_of_budget.load(std::memory_order_relaxed);
  }

  void record_solution() {
    long long size = static_cast<long long>(stack.size());
    long long cur = sh.best_size.load(std::memory_order_relaxed);
    while (size < cur && !sh.best_size.compare_exchange_weak(cur, size)) {
    }
    if (size <= sh.best_size.load(std::memory_order_relaxed)) {
      std::lock_guard<std::mutex> lock(sh.witness_mutex);
      if (size <= sh.best_size.load(std::memory_order_relaxed)) sh.best_witness = stack;
    }
  }

  // i_a + i_b caps from the occurrence characterization, against the final
  // size bound B = incumbent - 1. Pairs already passed over and not chosen
  // can never enter D, so they obey the tighter non-member cap.
  bool r2_include_ok(int idx, long long B) {
    Vertex u = pb.verts[static_cast<std::size_t>(idx)];
    auto e = u.elements();
    for (int x = 1; x <= pb.params.n; ++x) {
      for (int a : {e[0], e[1]}) {
        if (x == a) continue;
        long long pi = pb.pair_at(std::min(a, x), std::max(a, x));
        bool can_be_member =
            pi >= idx || chosen[static_cast<std::size_t>(pi)];
        long long cap = B - pb.k + (can_be_member ? 2 : 0);
        if (icount[a] + icount[x] > cap) return false;
      }
      if (icount[x] > B - pb.k + 1) return false;
    }
    return true;
  }

  void dfs(int idx) {
    if (!budget_ok()) return;
    long long incumbent = sh.best_size.load(std::memory_order_relaxed);
    long long chosen_count = static_cast<long long>(stack.size());
    if (demand == 0) {
      record_solution();
      return;
    }
    if (idx == pb.C) return;

    long long bound =
        std::max(chosen_count + ceil_div(demand, pb.cover_size), pb.global_lb);
    if (bound >= incumbent) {
      if (proof && proof->size() < 1024) {
        proof->push_back({stack, idx, bound});
      }
      return;
    }

    // include idx, unless no smaller solution can contain it
    if (chosen_count + 1 < incumbent) {
      bool ok = true;
      if (pb.r2_prune) {
        auto e = pb.verts[static_cast<std::size_t>(idx)].elements();
        ++icount[e[0]];
        ++icount[e[1]];
        ok = r2_include_ok(idx, incumbent - 1);
        if (!ok) {
          --icount[e[0]];
          --icount[e[1]];
        }
      }
      if (ok) {
        chosen[static_cast<std::size_t>(idx)] = 1;
        stack.push_back(idx);
        for (int v : pb.nbr[idx]) {
          if (cover[v] < pb.k) --demand;
          ++cover[v];
          --avail[v];
        }
        dfs(idx + 1);
        for (int v : pb.nbr[idx]) {
          --cover[v];
          if (cover[v] < pb.k) ++demand;
          ++avail[v];
        }
        stack.pop_back();
        chosen[static_cast<std::size_t>(idx)] = 0;
        if (pb.r2_prune) {
          auto e = pb.verts[static_cast<std::size_t>(idx)].elements();
          --icount[e[0]];
          --icount[e[1]];
        }
      }
    }

    // exclude idx
    bool feasible = true;
    for (int v : pb.nbr[idx]) {
      --avail[v];
      if (cover[v] + avail[v] < pb.k) feasible = false;
    }
    if (feasible && pb.r2_prune) {
      auto e = pb.verts[static_cast<std::size_t>(idx)].elements();
      long long B = sh.best_size.load(std::memory_order_relaxed) - 1;
      if (icount[e[0]] + icount[e[1]] > B - pb.k) feasible = false;
    }
    if (feasible) dfs(idx + 1);
    for (int v : pb.nbr[idx]) ++avail[v];
  }

  // replays a decision prefix (values for vertices 0..prefix.size()-1),
  // returning false if a prune already fires
  bool apply_prefix(const std::vector<char>& prefix) {
    for (int idx = 0; idx < static_cast<int>(prefix.size()); ++idx) {
      if (prefix[static_cast<std::size_t>(idx)]) {
        chosen[static_cast<std::size_t>(idx)] = 1;
        stack.push_back(idx);
        auto e2 = pb.verts[static_cast<std::size_t>(idx)].elements();
        if (pb.r2_prune) {
          for (int a : {e2[0], e2[1]}) ++icount[a];
        }
        for (int v : pb.nbr[idx]) {
          if (cover[v] < pb.k) --demand;
          ++cover[v];
          --avail[v];
        }
      } else {
        for (int v : pb.nbr[idx]) {
          --avail[v];
          if (cover[v] + avail[v] < pb.k) return false;
        }
      }
    }
    return true;
  }
};

SolveOutcome run_domination(const KneserParams& params, long long k, const Budget& budget,
                            const SolverOptions& opts) {
  DomProblem pb(params, k);

  auto seed = best_construction(params, k);
  if (!seed) throw std::logic_error("no seed construction for a feasible k");

  Shared sh;
  sh.best_size.store(seed->size());
  for (Vertex v : *seed) {
    sh.best_witness.push_back(static_cast<int>(vertex_index(params, v)));
  }
  sh.max_nodes = budget.max_nodes;
  sh.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(budget.max_seconds));

  SolveOutcome out;
  int threads = std::max(1, opts.threads);
  if (threads == 1) {
    DomSearch search(pb, sh, opts);
    if (opts.record_proof) search.proof = &out.proof;
    search.dfs(0);
  } else {
    // split the search at a fixed shallow depth; workers claim subtrees in order
    int depth = 0;
    while ((1 << depth) < 8 * threads && depth + 1 < pb.C && depth < 14) ++depth;
    std::vector<std::vector<char>> prefixes;
    std::vector<char> cur;
    auto gen = [&](auto&& self) -> void {
      if (static_cast<int>(cur.size()) == depth) {
        prefixes.push_back(cur);
        return;
      }
      for (char bit : {char(1), char(0)}) {
        cur.push_back(bit);
        self(self);
        cur.pop_back();
      }
    };
    gen(gen);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= prefixes.size()) break;
        if (sh.out_of_budget.load(std::memory_order_relaxed)) break;
        DomSearch search(pb, sh, opts);
        if (search.apply_prefix(prefixes[i])) search.dfs(depth);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  out.optimum = sh.best_size.load();
  out.nodes = sh.nodes.load();
  out.exact = !sh.out_of_budget.load();
  std::vector<Vertex> wit;
  for (int i : sh.best_witness) wit.push_back(pb.verts[static_cast<std::size_t>(i)]);
  out.witness = VertexSet(params, std::move(wit));
  if (out.witness.size() != out.optimum ||
      !is_k_tuple_dominating(params, out.witness, k).holds) {
    throw std::logic_error("solver produced an invalid dominating witness");
  }
  return out;
}

// --- maximum 2-packing --------------------------------------------------------

struct PackProblem {
  KneserParams params;
  int C = 0;
  std::vector<Vertex> verts;
  BitMatrix compat;

  explicit PackProblem(const KneserParams& p) : params(p), compat(1, 1) {
    if (p.vertex_count() > kPackingCap) {
      throw CapacityError("max_2_packing: instance over the solver cap");
    }
    VertexSet all = enumerate_vertices(p);
    verts.assign(all.begin(), all.end());
    C = static_cast<int>(verts.size());
    compat = BitMatrix(C, C);
    // closed neighborhoods are disjoint iff the subsets meet but leave no room
    // for a common neighbor: 1 <= |u cap v| <= (3r-1)-n
    int hi = 3 * p.r - 1 - p.n;
    for (int i = 0; i < C; ++i) {
      for (int j = i + 1; j < C; ++j) {
        int inter = std::popcount(verts[i].bits & verts[j].bits);
        if (inter >= 1 && inter <= hi) {
          compat.set(i, j);
          compat.set(j, i);
        }
      }
    }
  }
};

struct PackSearch {
  const PackProblem& pb;
  Shared& sh;
  int words;
  std::vector<int> stack;
  std::vector<std::uint64_t> scratch;  // one P mask per depth level

  PackSearch(const PackProblem& pb_, Shared& sh_) : pb(pb_), sh(sh_) {
    words = pb.compat.words;
    scratch.assign(static_cast<std::size_t>(pb.C + 1) * words, 0);
  }

  bool budget_ok() {
    std::uint64_t seen = sh.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (seen > sh.max_nodes) {
      sh.out_of_budget.store(true, std::memory_order_relaxed);
      return false;
    }
    if ((seen & 0xFFF) == 0 && Clock::now() > sh.deadline) {
      sh.out_of_budget.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  void record() {
    long long size = static_cast<long long>(stack.size());
    long long cur = sh.best_size.load(std::memory_order_relaxed);
    while (size > cur && !sh.best_size.compare_exchange_weak(cur, size)) {
    }
    if (size >= sh.best_size.load(std::memory_order_relaxed)) {
      std::lock_guard<std::mutex> lock(sh.witness_mutex);
      if (size >= sh.best_size.load(std::memory_order_relaxed)) sh.best_witness = stack;
    }
  }

  void expand(std::uint64_t* P, int depth) {
    if (!budget_ok()) return;
    // greedy coloring of P; candidates kept ascending (color, index)
    std::vector<int> order;
    std::vector<int> color;
    std::vector<std::uint64_t> left(P, P + words);
    std::vector<std::uint64_t> cls(words);
    int ncolors = 0;
    bool any = false;
    for (int w = 0; w < words; ++w) any |= left[w] != 0;
    while (any) {
      ++ncolors;
      std::fill(cls.begin(), cls.end(), 0);
      for (int w = 0; w < words; ++w) {
        std::uint64_t bits = left[w];
        while (bits) {
          int v = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          const std::uint64_t* adj = pb.compat.row(v);
          bool clash = false;
          for (int x = 0; x < words; ++x) {
            if (adj[x] & cls[x]) { clash = true; break; }
          }
          if (!clash) {
            cls[v >> 6] |= std::uint64_t{1} << (v & 63);
            order.push_back(v);
            color.push_back(ncolors);
          }
        }
      }
      any = false;
      for (int w = 0; w < words; ++w) {
        left[w] &= ~cls[w];
        any |= left[w] != 0;
      }
    }

    std::uint64_t* live = scratch.data() + static_cast<std::size_t>(depth) * words;
    std::copy(P, P + words, live);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (sh.out_of_budget.load(std::memory_order_relaxed)) return;
      long long best = sh.best_size.load(std::memory_order_relaxed);
      if (static_cast<long long>(stack.size()) + color[static_cast<std::size_t>(i)] <= best) {
        return;  // every remaining candidate has an equal or smaller color
      }
      int v = order[static_cast<std::size_t>(i)];
      std::uint64_t* child = scratch.data() + static_cast<std::size_t>(depth + 1) * words;
      const std::uint64_t* adj = pb.compat.row(v);
      bool empty = true;
      for (int w = 0; w < words; ++w) {
        child[w] = live[w] & adj[w];
        empty &= child[w] == 0;
      }
      stack.push_back(v);
      if (empty) {
        if (static_cast<long long>(stack.size()) >
            sh.best_size.load(std::memory_order_relaxed)) {
          record();
        }
      } else {
        expand(child, depth + 1);
      }
      stack.pop_back();
      live[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
  }
};

SolveOutcome run_packing(const KneserParams& params, const Budget& budget) {
  PackProblem pb(params);
  Shared sh;
  sh.max_nodes = budget.max_nodes;
  sh.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(budget.max_seconds));

  // greedy canonical packing as the incumbent
  std::vector<int> greedy;
  {
    std::vector<std::uint64_t> cand(pb.compat.words);
    for (int i = 0; i < pb.C; ++i) cand[i >> 6] |= std::uint64_t{1} << (i & 63);
    for (int w = 0; w < pb.compat.words; ++w) {
      while (cand[w]) {
        int v = w * 64 + std::countr_zero(cand[w]);
        greedy.push_back(v);
        const std::uint64_t* adj = pb.compat.row(v);
        for (int x = 0; x < pb.compat.words; ++x) cand[x] &= adj[x];
        if (cand[w] == 0) break;
      }
    }
  }
  sh.best_size.store(static_cast<long long>(greedy.size()));
  sh.best_witness = greedy;

  PackSearch search(pb, sh);
  std::vector<std::uint64_t> all(pb.compat.words, 0);
  for (int i = 0; i < pb.C; ++i) all[i >> 6] |= std::uint64_t{1} << (i & 63);
  search.expand(all.data(), 0);

  SolveOutcome out;
  out.optimum = sh.best_size.load();
  out.nodes = sh.nodes.load();
  out.exact = !sh.out_of_budget.load();
  std::vector<Vertex> wit;
  for (int i : sh.best_witness) wit.push_back(pb.verts[static_cast<std::size_t>(i)]);
  out.witness = VertexSet(params, std::move(wit));
  if (out.witness.size() != out.optimum || !is_2_packing(params, out.witness).holds) {
    throw std::logic_error("solver produced an invalid packing witness");
  }
  return out;
}

}  // namespace

SolveOutcome min_ktuple_dominating(const KneserParams& params, long long k,
                                   const Budget& budget, const SolverOptions& opts) {
  return run_domination(params, k, budget, opts);
}

SolveOutcome max_2_packing(const KneserParams& params, const Budget& budget,
                           const SolverOptions&) {
  return run_packing(params, budget);
}

SolveOutcome brute_force_min(const KneserParams& params, long long k) {
  if (params.vertex_count() > 20) {
    throw CapacityError("brute_force_min: needs C(n,r) <= 20");
  }
  if (k < 1 || k > params.degree() + 1) {
    throw std::invalid_argument("brute_force_min: k must be in [1, degree+1]");
  }
  VertexSet all = enumerate_vertices(params);
  const int C = static_cast<int>(all.size());
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(C), 0);
  for (int i = 0; i < C; ++i) {
    for (int j = 0; j < C; ++j) {
      if (i == j || are_adjacent(all.members()[i], all.members()[j])) {
        nbr[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
      }
    }
  }
  SolveOutcome out;
  for (int size = 0; size <= C; ++size) {
    std::uint32_t mask = size == 0 ? 0 : (std::uint32_t{1} << size) - 1;
    std::uint64_t count = binomial(C, size);
    for (std::uint64_t it = 0; it < count; ++it) {
      bool ok = true;
      for (int v = 0; v < C; ++v) {
        if (std::popcount(nbr[static_cast<std::size_t>(v)] & mask) < k) {
          ok = false;
          break;
        }
      }
      ++out.nodes;
      if (ok) {
        std::vector<Vertex> wit;
        for (int i = 0; i < C; ++i) {
          if (mask >> i & 1) wit.push_back(all.members()[static_cast<std::size_t>(i)]);
        }
        out.optimum = size;
        out.witness = VertexSet(params, std::move(wit));
        return out;
      }
      if (size == 0) break;
      std::uint32_t c = mask & (~mask + 1);
      std::uint32_t r = mask + c;
      mask = (((mask ^ r) >> 2) / c) | r;
    }
  }
  throw std::logic_error("brute_force_min: no dominating set found for feasible k");
}

namespace {

std::string lp_var(Vertex v) {
  std::string s = "x";
  for (int x : v.elements()) s += "_" + std::to_string(x);
  return s;
}

}  // namespace

void export_lp(const KneserParams& params, long long k, std::ostream& out) {
  VertexSet all = enumerate_vertices(params);
  out << "Minimize\n obj:";
  bool first = true;
  for (Vertex v : all) {
    out << (first ? " " : " + ") << lp_var(v);
    first = false;
  }
  out << "\nSubject To\n";
  for (Vertex v : all) {
    out << " cN";
    for (int x : v.elements()) out << "_" << x;
    out << ":";
    first = true;
    for (Vertex u : all) {
      if (u == v || are_adjacent(u, v)) {
        out << (first ? " " : " + ") << lp_var(u);
        first = false;
      }
    }
    out << " >= " << k << "\n";
  }
  out << "Binary\n";
  for (Vertex v : all) out << " " << lp_var(v) << "\n";
  out << "End\n";
}

std::string export_lp_string(const KneserParams& params, long long k) {
  std::ostringstream oss;
  export_lp(params, k, oss);
  return oss.str();
}

}  // namespace kneser
