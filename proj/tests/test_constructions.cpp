#include "doctest.h"

#include <bit>
#include <fstream>
#include <set>
#include <sstream>

#include "kneser/certify.hpp"
#include "kneser/constructions.hpp"
#include "oracles.hpp"

using namespace kneser;

TEST_CASE("disjoint families") {
  VertexSet d = disjoint_family(12, 2, 6);
  CHECK(d.size() == 6);
  CHECK(d.contains(vertex_of({11, 12})));
  CHECK(is_k_tuple_dominating_r2(KneserParams(12, 2), d, 4).holds);

  VertexSet singletons = disjoint_family(3, 1, 3);
  CHECK(singletons.size() == 3);
  CHECK(singletons.contains(vertex_of({2})));

  VertexSet triples = disjoint_family(21, 3, 7);
  CHECK(triples.size() == 7);
  CHECK(is_k_tuple_dominating(KneserParams(21, 3), triples, 4).holds);

  CHECK_THROWS_AS(disjoint_family(11, 2, 6), std::invalid_argument);
}

TEST_CASE("dhat") {
  CHECK(dhat_n2(2).size() == 5);
  CHECK(dhat_n2(3).size() == 6);
  CHECK(dhat_n2(3).params().n == 9);
  CHECK(is_k_tuple_dominating_r2(KneserParams(9, 2), dhat_n2(3), 3).holds);
  // wider ground set: still dominates by monotonicity, no longer minimum
  VertexSet wide = dhat_n2(2, 8);
  CHECK(is_k_tuple_dominating_r2(KneserParams(8, 2), wide, 2).holds);
  CHECK_THROWS_AS(dhat_n2(1), std::invalid_argument);
}

TEST_CASE("circulant layers") {
  VertexSet d16 = circulant_layer(6, 1);
  std::set<Vertex> expect16{vertex_of({1, 2}), vertex_of({2, 3}), vertex_of({3, 4}),
                            vertex_of({4, 5}), vertex_of({5, 6}), vertex_of({1, 6})};
  CHECK(std::set<Vertex>(d16.begin(), d16.end()) == expect16);

  std::set<Vertex> expect52{vertex_of({1, 3}), vertex_of({2, 4}), vertex_of({3, 5}),
                            vertex_of({1, 4}), vertex_of({2, 5})};
  VertexSet d52 = circulant_layer(5, 2);
  CHECK(std::set<Vertex>(d52.begin(), d52.end()) == expect52);

  VertexSet d142 = circulant_layer(14, 2);
  CHECK(d142.size() == 14);
  CHECK(d142.contains(vertex_of({1, 3})));
  CHECK(d142.contains(vertex_of({2, 4})));
  OccurrenceProfile prof = occurrence_profile(d142);
  for (int x = 1; x <= 14; ++x) CHECK(prof[x] == 2);

  CHECK_THROWS_AS(circulant_layer(6, 3), std::invalid_argument);
}

TEST_CASE("d_m_alpha cardinality and occurrences") {
  CHECK(d_m_alpha(6, 3).size() == 9);
  CHECK(d_m_alpha(11, 3).size() == 16);
  CHECK(d_m_alpha(14, 4).size() == 28);
  OccurrenceProfile p144 = occurrence_profile(d_m_alpha(14, 4));
  for (int x = 1; x <= 14; ++x) CHECK(p144[x] == 4);

  for (int alpha = 2; alpha <= 6; ++alpha) {
    for (int m = alpha + 1; m <= 20; ++m) {
      VertexSet d = d_m_alpha(m, alpha);
      CHECK(d.size() == (static_cast<long long>(alpha) * m) / 2);
      OccurrenceProfile prof = occurrence_profile(d);
      if (alpha % 2 == 1 && m % 2 == 1) {
        for (int x = 1; x < m; ++x) CHECK(prof[x] == alpha);
        CHECK(prof[m] == alpha - 1);
      } else {
        for (int x = 1; x <= m; ++x) CHECK(prof[x] == alpha);
      }
    }
  }
  CHECK_THROWS_AS(d_m_alpha(3, 3), std::invalid_argument);
}

TEST_CASE("d_of_h") {
  CHECK(d_of_h(13, 3, 5).size() == 22);
  CHECK(d_of_h(18, 4, 4).size() == 34);
  // h=1 adds no top pairs
  CHECK(d_of_h(10, 3, 1).members() == d_m_alpha(9, 3, 10).members());
  CHECK_THROWS_AS(d_of_h(10, 3, 7), std::invalid_argument);

  VertexSet d = d_of_h(13, 3, 5);
  OccurrenceProfile prof = occurrence_profile(d);
  for (int x = 1; x <= 8; ++x) CHECK(prof[x] == 3);
  for (int x = 9; x <= 13; ++x) CHECK(prof[x] == 4);
}

TEST_CASE("k+2alpha construction") {
  VertexSet a = build_k_plus_2alpha(11, 9, 3);
  CHECK(a.size() == 15);
  CHECK(is_k_tuple_dominating_r2(KneserParams(11, 2), a, 9).holds);

  VertexSet b = build_k_plus_2alpha(14, 17, 4);
  CHECK(b.size() == 25);
  CHECK(is_k_tuple_dominating_r2(KneserParams(14, 2), b, 17).holds);

  VertexSet c = build_k_plus_2alpha(8, 4, 2);
  CHECK(c.size() == 8);
  CHECK(c.members() == d_m_alpha(8, 2).members());
  CHECK(is_k_tuple_dominating_r2(KneserParams(8, 2), c, 4).holds);

  CHECK_THROWS_AS(build_k_plus_2alpha(7, 6, 2), std::invalid_argument);

  for (int alpha = 2; alpha <= 3; ++alpha) {
    for (int n = std::max(5, alpha + 2); n <= 16; ++n) {
      long long kmax = static_cast<long long>(alpha) * (n - 4) / 2;
      for (long long k = 1; k <= kmax; ++k) {
        VertexSet d = build_k_plus_2alpha(n, k, alpha);
        CHECK(d.size() == k + 2 * alpha);
        OccurrenceProfile prof = occurrence_profile(d);
        for (int x = 1; x <= n; ++x) CHECK(prof[x] <= alpha);
        CHECK(is_k_tuple_dominating_r2(KneserParams(n, 2), d, k).holds);
      }
    }
  }
}

TEST_CASE("k+2alpha+1 construction: worked instances") {
  VertexSet b0 = build_k_plus_2alpha_plus1(13, 15, 3);
  CHECK(b0.size() == 22);
  CHECK(b0.members() == d_of_h(13, 3, 5).members());
  CHECK(is_k_tuple_dominating_r2(KneserParams(13, 2), b0, 15).holds);

  // the b=1 instance over K(18,2): swap four base pairs for eight cross pairs
  VertexSet b1 = build_k_plus_2alpha_plus1(18, 29, 4);
  CHECK(b1.size() == 38);
  std::set<Vertex> expected(d_of_h(18, 4, 4).begin(), d_of_h(18, 4, 4).end());
  for (Vertex v : {vertex_of({1, 2}), vertex_of({2, 3}), vertex_of({1, 3}),
                   vertex_of({2, 4})}) {
    expected.erase(v);
  }
  for (Vertex v : {vertex_of({1, 15}), vertex_of({2, 16}), vertex_of({2, 15}),
                   vertex_of({3, 16}), vertex_of({1, 17}), vertex_of({3, 18}),
                   vertex_of({2, 17}), vertex_of({4, 18})}) {
    expected.insert(v);
  }
  CHECK(std::set<Vertex>(b1.begin(), b1.end()) == expected);
  CHECK(is_k_tuple_dominating_r2(KneserParams(18, 2), b1, 29).holds);

  VertexSet small = build_k_plus_2alpha_plus1(9, 6, 2);
  CHECK(small.size() == 11);
  CHECK(is_k_tuple_dominating_r2(KneserParams(9, 2), small, 6).holds);

  CHECK_THROWS_AS(build_k_plus_2alpha_plus1(12, 15, 3), std::invalid_argument);
}

TEST_CASE("k+2alpha+1 construction: every case of the split") {
  for (int alpha = 2; alpha <= 5; ++alpha) {
    for (int b = 0; b < alpha; ++b) {
      for (long long lambda = alpha; lambda <= alpha + 2; ++lambda) {
        long long k = static_cast<long long>(alpha) * lambda + b;
        long long n = (2 * k + alpha - 1) / alpha + 3;
        if (n < 2 * alpha + 3) continue;
        CAPTURE(alpha);
        CAPTURE(b);
        CAPTURE(k);
        VertexSet d = build_k_plus_2alpha_plus1(static_cast<int>(n), k, alpha);
        CHECK(d.size() == k + 2 * alpha + 1);
        OccurrenceProfile prof = occurrence_profile(d);
        std::vector<int> high;
        for (int x = 1; x <= n; ++x) {
          CHECK(prof[x] >= alpha);
          CHECK(prof[x] <= alpha + 1);
          if (prof[x] == alpha + 1) high.push_back(x);
        }
        for (std::size_t i = 0; i < high.size(); ++i) {
          for (std::size_t j = i + 1; j < high.size(); ++j) {
            CHECK(d.contains(vertex_of({high[i], high[j]})));
          }
        }
        CHECK(is_k_tuple_dominating_r2(KneserParams(static_cast<int>(n), 2), d, k).holds);
      }
    }
  }
}

TEST_CASE("large-k complements") {
  VertexSet a = large_k_complement(6, 2, 0);
  CHECK(a.size() == 14);
  CHECK(is_k_tuple_dominating_r2(KneserParams(6, 2), a, 6).holds);

  VertexSet b = large_k_complement(7, 2, 1);
  CHECK(b.size() == 19);
  CHECK(is_k_tuple_dominating_r2(KneserParams(7, 2), b, 9).holds);

  // k would drop below 1
  CHECK_THROWS_AS(large_k_complement(6, 3, 5), std::invalid_argument);
  // threshold violated
  CHECK_THROWS_AS(large_k_complement(6, 3, 0), std::invalid_argument);
}

TEST_CASE("boundary family") {
  VertexSet s73 = boundary_family_S(7, 3, 0);
  CHECK(std::set<Vertex>(s73.begin(), s73.end()) ==
        std::set<Vertex>{vertex_of({1, 2, 3}), vertex_of({3, 4, 5})});
  VertexSet rest = complement_set(KneserParams(7, 3), s73);
  CHECK(rest.size() == 33);
  CHECK(is_k_tuple_dominating(KneserParams(7, 3), rest, 4).holds);

  VertexSet s521 = boundary_family_S(5, 2, 1);
  CHECK(s521.size() == 3);
  CHECK(s521.contains(vertex_of({3, 4})));  // the chained third block
  CHECK(is_k_tuple_dominating_r2(KneserParams(5, 2),
                                 complement_set(KneserParams(5, 2), s521), 2)
            .holds);

  VertexSet s722 = boundary_family_S(7, 2, 2);
  CHECK(s722.size() == 4);
  CHECK(is_k_tuple_dominating_r2(KneserParams(7, 2),
                                 complement_set(KneserParams(7, 2), s722), 8)
            .holds);

  CHECK_THROWS_AS(boundary_family_S(8, 3, 0), std::invalid_argument);
}

TEST_CASE("fano planes") {
  auto [f1, f2] = fano_planes();
  CHECK(is_steiner_system(2, 3, 7, f1).holds);
  CHECK(is_steiner_system(2, 3, 7, f2).holds);
  for (Vertex v : f1) CHECK_FALSE(f2.contains(v));

  KneserParams p(7, 3);
  VertexSet both(p, [&] {
    std::vector<Vertex> vs(f1.begin(), f1.end());
    vs.insert(vs.end(), f2.begin(), f2.end());
    return vs;
  }());
  CHECK(both.size() == 14);
  CHECK(is_k_tuple_dominating(p, both, 2).holds);
}

TEST_CASE("K(7,3) gamma sets") {
  KneserParams p(7, 3);
  for (int k = 1; k <= 5; ++k) {
    VertexSet d = k73_gamma_sets(k);
    CHECK(d.size() == 7 * k);
    CHECK(is_k_tuple_dominating(p, d, k).holds);
    CHECK(certify_tight_domination(p, d, k).holds);
  }
  CHECK(k73_gamma_sets(5).size() == 35);
  CHECK_THROWS_AS(k73_gamma_sets(6), std::invalid_argument);
}

TEST_CASE("steiner 4-5-11 systems") {
  VertexSet s1 = steiner_4_5_11();
  CHECK(s1.size() == 66);
  CHECK(s1.contains(vertex_of({3, 5, 6, 7, 8})));
  CHECK(s1.contains(vertex_of({1, 2, 3, 6, 7})));
  CHECK(s1.contains(vertex_of({1, 4, 5, 6, 7})));
  CHECK(is_steiner_system(4, 5, 11, s1).holds);

  auto [a, b] = steiner_4_5_11_pair();
  CHECK(a.members() == s1.members());
  CHECK(is_steiner_system(4, 5, 11, b).holds);
  for (Vertex v : a) CHECK_FALSE(b.contains(v));
}

TEST_CASE("K(11,5) gamma sets") {
  KneserParams p(11, 5);
  for (int k = 1; k <= 7; ++k) {
    VertexSet d = k115_gamma_sets(k);
    CHECK(d.size() == 66 * k);
    CHECK(is_k_tuple_dominating(p, d, k).holds);
    CHECK(certify_tight_domination(p, d, k).holds);
  }
  VertexSet d3 = k115_gamma_sets(3);
  CHECK(d3.members().front() == vertex_of({1, 2, 3, 4, 5}));
  CHECK(d3.members().back() == vertex_of({6, 7, 8, 9, 11}));
  CHECK_THROWS_AS(k115_gamma_sets(8), std::invalid_argument);

  // the embedded list and the shipped data file stay in lockstep
  std::ifstream file(std::string(KNESER_SOURCE_DIR) + "/data/k115_gamma3.txt");
  REQUIRE(file.good());
  VertexSet from_file = read_vertex_set_text(file, p);
  CHECK(from_file.members() == d3.members());
}

TEST_CASE("complement") {
  KneserParams p(7, 3);
  VertexSet all = enumerate_vertices(p);
  CHECK(complement_set(p, all).empty());
  VertexSet f1 = fano_planes().first;
  CHECK(complement_set(p, complement_set(p, f1)).members() == f1.members());
}

TEST_CASE("alpha split") {
  AlphaParams p = alpha_split(15, 3);
  CHECK(p.b == 0);
  CHECK(p.which == AlphaParams::Case::b_zero);
  CHECK(p.h == 5);

  AlphaParams q = alpha_split(29, 4);
  CHECK(q.lambda == 7);
  CHECK(q.b == 1);
  CHECK(q.which == AlphaParams::Case::b_below_a);
  CHECK(q.h == 4);

  AlphaParams r = alpha_split(7, 3);
  CHECK(r.b == 1);
  CHECK(r.which == AlphaParams::Case::b_equal_a);

  AlphaParams s = alpha_split(11, 3);
  CHECK(s.b == 2);
  CHECK(s.which == AlphaParams::Case::b_above_a);
  CHECK(s.h == 3);
}

TEST_CASE("golden constructions stay bit-identical") {
  auto golden_path = [](const std::string& name) {
    return std::string(KNESER_SOURCE_DIR) + "/tests/golden/" + name;
  };
  auto render = [](const VertexSet& s) {
    std::ostringstream out;
    write_vertex_set_text(out, s);
    return out.str();
  };
  for (auto& [name, set] :
       std::vector<std::pair<std::string, VertexSet>>{{"fano_f1.txt", fano_planes().first},
                                                      {"fano_f2.txt", fano_planes().second},
                                                      {"steiner_4_5_11.txt", steiner_4_5_11()},
                                                      {"steiner_4_5_11_b.txt",
                                                       steiner_4_5_11_pair().second}}) {
    std::ifstream in(golden_path(name));
    REQUIRE_MESSAGE(in.good(), name);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK_MESSAGE(buf.str() == render(set), name);
  }
}

TEST_CASE("best construction sizes") {
  CHECK(best_construction(KneserParams(12, 2), 4)->size() == 6);
  CHECK(best_construction(KneserParams(7, 2), 2)->size() == 5);
  CHECK(best_construction(KneserParams(11, 2), 9)->size() == 15);
  CHECK(best_construction(KneserParams(13, 2), 15)->size() == 22);
  CHECK(best_construction(KneserParams(7, 3), 2)->size() == 14);
  CHECK(best_construction(KneserParams(11, 5), 3)->size() == 198);
  CHECK(best_construction(KneserParams(5, 2), 4)->size() == 10);
  CHECK_FALSE(best_construction(KneserParams(5, 2), 5).has_value());
}
