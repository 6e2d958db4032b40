#include "doctest.h"

#include <fstream>
#include <map>
#include <sstream>

#include "kneser/certify.hpp"
#include "kneser/constructions.hpp"
#include "kneser/solver.hpp"

using namespace kneser;

namespace {

// frozen exhaustive values over every instance with C(n,r) <= 20
const std::map<std::tuple<int, int, long long>, long long> kSmallTruth = {
    {{4, 2, 1}, 3},  {{4, 2, 2}, 6},  {{5, 2, 1}, 3},  {{5, 2, 2}, 6},
    {{5, 2, 3}, 9},  {{5, 2, 4}, 10}, {{6, 2, 1}, 3},  {{6, 2, 2}, 6},
    {{6, 2, 3}, 7},  {{6, 2, 4}, 10}, {{6, 2, 5}, 13}, {{6, 2, 6}, 14},
    {{6, 2, 7}, 15}, {{6, 3, 1}, 10}, {{6, 3, 2}, 20}};

// minimum completion size inside the subtree rooted at (chosen, next_index):
// exhaustive over the undecided suffix
long long subtree_optimum(const KneserParams& params, long long k,
                          const ProofEntry& entry) {
  VertexSet all = enumerate_vertices(params);
  int C = static_cast<int>(all.size());
  std::vector<Vertex> verts(all.begin(), all.end());
  long long best = C + 1;
  int suffix = C - entry.next_index;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << suffix); ++mask) {
    std::vector<Vertex> d;
    for (int i : entry.chosen) d.push_back(verts[static_cast<std::size_t>(i)]);
    for (int j = 0; j < suffix; ++j) {
      if (mask >> j & 1) d.push_back(verts[static_cast<std::size_t>(entry.next_index + j)]);
    }
    if (static_cast<long long>(d.size()) >= best) continue;
    VertexSet cand(params, d);
    if (is_k_tuple_dominating(params, cand, k).holds) {
      best = cand.size();
    }
  }
  return best;
}

}  // namespace

TEST_CASE("brute force matches frozen truths") {
  for (const auto& [key, value] : kSmallTruth) {
    auto [n, r, k] = key;
    KneserParams params(n, r);
    SolveOutcome res = brute_force_min(params, k);
    CAPTURE(n);
    CAPTURE(r);
    CAPTURE(k);
    CHECK(res.optimum == value);
    CHECK(res.witness.size() == value);
    CHECK(is_k_tuple_dominating(params, res.witness, k).holds);
  }
  CHECK_THROWS_AS(brute_force_min(KneserParams(7, 2), 1), CapacityError);
  CHECK_THROWS_AS(brute_force_min(KneserParams(5, 2), 5), std::invalid_argument);
}

TEST_CASE("branch and bound equals brute force") {
  for (const auto& [key, value] : kSmallTruth) {
    auto [n, r, k] = key;
    KneserParams params(n, r);
    SolveOutcome res = min_ktuple_dominating(params, k);
    CAPTURE(n);
    CAPTURE(r);
    CAPTURE(k);
    CHECK(res.exact);
    CHECK(res.optimum == value);
    CHECK(is_k_tuple_dominating(params, res.witness, k).holds);
  }
}

TEST_CASE("solver on paper instances") {
  CHECK(min_ktuple_dominating(KneserParams(7, 2), 2).optimum == 5);
  CHECK(min_ktuple_dominating(KneserParams(5, 2), 1).optimum == 3);
  SolveOutcome k73 = min_ktuple_dominating(KneserParams(7, 3), 1);
  CHECK(k73.exact);
  CHECK(k73.optimum == 7);
}

TEST_CASE("solver determinism") {
  KneserParams params(8, 2);
  SolveOutcome a = min_ktuple_dominating(params, 3);
  SolveOutcome b = min_ktuple_dominating(params, 3);
  CHECK(a.optimum == b.optimum);
  CHECK(a.nodes == b.nodes);
  CHECK(a.witness.members() == b.witness.members());
}

TEST_CASE("parallel mode preserves the optimum") {
  KneserParams params(9, 2);
  SolveOutcome seq = min_ktuple_dominating(params, 4);
  SolverOptions par;
  par.threads = 4;
  SolveOutcome parres = min_ktuple_dominating(params, 4, {}, par);
  CHECK(seq.exact);
  CHECK(parres.exact);
  CHECK(seq.optimum == parres.optimum);
  CHECK(is_k_tuple_dominating(params, parres.witness, 4).holds);
}

TEST_CASE("budget exhaustion returns the incumbent in-band") {
  Budget tiny;
  tiny.max_nodes = 5;
  SolveOutcome res = min_ktuple_dominating(KneserParams(9, 2), 4, tiny);
  CHECK_FALSE(res.exact);
  CHECK(res.optimum == res.witness.size());
  CHECK(is_k_tuple_dominating(KneserParams(9, 2), res.witness, 4).holds);
}

TEST_CASE("recorded pruning bounds never cut the subtree optimum") {
  for (auto [n, r, k] : {std::tuple<int, int, long long>{5, 2, 2},
                         std::tuple<int, int, long long>{5, 2, 3},
                         std::tuple<int, int, long long>{4, 2, 2}}) {
    KneserParams params(n, r);
    SolverOptions opts;
    opts.record_proof = true;
    SolveOutcome res = min_ktuple_dominating(params, k, {}, opts);
    REQUIRE(res.exact);
    int checked = 0;
    for (const auto& entry : res.proof) {
      if (checked >= 40) break;
      ++checked;
      CHECK(entry.bound <= subtree_optimum(params, k, entry));
    }
  }
}

TEST_CASE("maximum 2-packing") {
  SolveOutcome p42 = max_2_packing(KneserParams(4, 2));
  CHECK(p42.exact);
  CHECK(p42.optimum == 3);

  SolveOutcome p52 = max_2_packing(KneserParams(5, 2));
  CHECK(p52.optimum == 1);

  SolveOutcome p73 = max_2_packing(KneserParams(7, 3));
  CHECK(p73.exact);
  CHECK(p73.optimum == 7);
  CHECK(is_2_packing(KneserParams(7, 3), p73.witness).holds);

  SolveOutcome p104 = max_2_packing(KneserParams(10, 4));
  CHECK(p104.exact);
  CHECK(p104.optimum == 5);
}

TEST_CASE("lp export grammar") {
  std::string lp42 = export_lp_string(KneserParams(4, 2), 1);
  CHECK(lp42.find(" cN_1_2: x_1_2 + x_3_4 >= 1\n") != std::string::npos);
  CHECK(lp42.substr(0, 9) == "Minimize\n");
  CHECK(lp42.find("\nBinary\n") != std::string::npos);
  CHECK(lp42.back() == '\n');

  // generic re-parse: objective size, constraint count, per-constraint arity
  for (auto [n, r, k] : {std::tuple<int, int, long long>{4, 2, 1},
                         std::tuple<int, int, long long>{5, 2, 2},
                         std::tuple<int, int, long long>{7, 3, 1}}) {
    KneserParams params(n, r);
    std::istringstream in(export_lp_string(params, k));
    std::string line;
    long long obj_vars = 0, constraints = 0;
    bool in_subject = false;
    while (std::getline(in, line)) {
      if (line == "Subject To") {
        in_subject = true;
        continue;
      }
      if (line == "Binary") in_subject = false;
      if (line.rfind(" obj:", 0) == 0) {
        std::istringstream ls(line.substr(5));
        std::string tok;
        while (ls >> tok) {
          if (tok != "+") ++obj_vars;
        }
      } else if (in_subject && line.rfind(" cN", 0) == 0) {
        ++constraints;
        std::string rhs = line.substr(line.find(':') + 1);
        std::istringstream ls(rhs);
        std::string tok;
        long long arity = 0;
        while (ls >> tok && tok != ">=") {
          if (tok != "+") ++arity;
        }
        CHECK(arity == params.degree() + 1);
        long long bound;
        ls >> bound;
        CHECK(bound == k);
      }
    }
    CHECK(obj_vars == params.vertex_count());
    CHECK(constraints == params.vertex_count());
  }

  // every constraint in the Petersen model with k=2 has exactly four variables
  std::istringstream in(export_lp_string(KneserParams(5, 2), 2));
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(" cN", 0) == 0) {
      long long vars = 0;
      std::istringstream ls(line.substr(line.find(':') + 1));
      std::string tok;
      while (ls >> tok && tok != ">=") {
        if (tok != "+") ++vars;
      }
      CHECK(vars == 4);
    }
  }
}

TEST_CASE("lp export golden file") {
  std::ifstream golden(std::string(KNESER_SOURCE_DIR) + "/tests/golden/k52_k2.lp",
                       std::ios::binary);
  REQUIRE(golden.good());
  std::stringstream buf;
  buf << golden.rdbuf();
  CHECK(buf.str() == export_lp_string(KneserParams(5, 2), 2));
}
