#include "kneser/bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "json.hpp"

#include "kneser/certify.hpp"

namespace kneser {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

struct CacheEntry {
  VertexSet set;
  std::string property;
  long long k = 0;
};

std::vector<CacheEntry> load_cache_entries(int n, int r) {
  std::vector<CacheEntry> out;
  auto dir = witness_cache_dir();
  if (!dir) return out;
  std::error_code ec;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(*dir, ec)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    try {
      std::ifstream in(f);
      nlohmann::json j;
      in >> j;
      if (j.at("n").get<int>() != n || j.at("r").get<int>() != r) continue;
      std::vector<Vertex> verts;
      for (const auto& arr : j.at("vertices")) {
        verts.push_back(vertex_from_elements(arr.get<std::vector<int>>()));
      }
      out.push_back({VertexSet(KneserParams(n, r), std::move(verts)),
                     j.at("property").get<std::string>(), j.value("k", 0LL)});
    } catch (const std::exception&) {
      // unreadable or malformed entries are simply skipped
    }
  }
  return out;
}

// A stale or tampered cache must never loosen soundness: every entry is
// re-certified before use, and graphs too large to certify are ignored.
constexpr long long kCacheCertifyCap = 100'000;

struct Exact {
  long long value;
  std::vector<std::string> tags;
};

void add_exact(std::optional<Exact>& acc, long long value, const std::string& tag) {
  if (!acc) {
    acc = Exact{value, {tag}};
    return;
  }
  if (acc->value != value) {
    throw std::logic_error("gamma_value: exact rules disagree (" + std::to_string(acc->value) +
                           " vs " + std::to_string(value) + " from " + tag + ")");
  }
  acc->tags.push_back(tag);
}

void tighten_lower(ValueReport& rep, long long v, const std::string& tag) {
  if (v > rep.lower) {
    rep.lower = v;
    rep.provenance.push_back(tag);
  }
}

void tighten_upper(ValueReport& rep, long long v, const std::string& tag) {
  if (v < rep.upper) {
    rep.upper = v;
    rep.provenance.push_back(tag);
  }
}

}  // namespace

std::optional<std::string> witness_cache_dir() {
  const char* dir = std::getenv("KNESER_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::string(dir);
}

void save_witness(const std::string& dir, const VertexSet& s,
                  const std::string& property, long long k) {
  std::filesystem::create_directories(dir);
  nlohmann::json j;
  j["n"] = s.params().n;
  j["r"] = s.params().r;
  j["property"] = property;
  j["k"] = k;
  auto arr = nlohmann::json::array();
  for (Vertex v : s) arr.push_back(v.elements());
  j["vertices"] = std::move(arr);
  std::string name = (property == "2-packing" ? "pack_" : "dom_") +
                     std::to_string(s.params().n) + "_" + std::to_string(s.params().r) +
                     (property == "2-packing" ? "" : "_k" + std::to_string(k)) + ".json";
  std::ofstream out(std::filesystem::path(dir) / name);
  out << j.dump(2) << "\n";
}

ValueReport packing_value(int n, int r, const BoundsOptions& opts) {
  KneserParams params(n, r);
  if (r >= 2 && n < 2 * r) throw std::invalid_argument("packing_value: need n >= 2r");
  ValueReport rep;
  rep.n = n;
  rep.r = r;

  auto exact = [&](long long v, const std::string& tag) {
    rep.lower = rep.upper = v;
    rep.exact = true;
    rep.provenance.push_back(tag);
    return rep;
  };

  if (r == 1) return exact(1, "COMPLETE_GRAPH");
  if (n >= 3 * r - 1) return exact(1, "DIAMETER_2");
  if (n == 2 * r) return exact(params.vertex_count() / 2, "MATCHING_COMPONENTS");
  if (n == 3 * r - 2 && r >= 3) {
    return exact(r == 3 ? 7 : r == 4 ? 5 : 3, "THM_3R_MINUS_2");
  }
  if (n == 2 * r + 1 && r == 5) return exact(66, "PERFECT_CODE_S4511");
  // (2r+1, r) with r = 3 is n = 3r-2 and was handled above

  // interval: 2r+1 <= n <= 3r-3, r >= 4
  rep.lower = 1;
  rep.provenance.push_back("SINGLE_VERTEX_LB");
  int c = (3 * r - 1) - n;
  long long upper = binomial(n, c);
  long long sum = 0;
  for (int i = 0; i <= c; ++i) sum += binomial(n - 1, i);
  rep.upper = std::min(upper, sum);
  rep.provenance.push_back("RAMANAN_UB");

  if (opts.use_cache && params.vertex_count() <= kCacheCertifyCap) {
    for (const auto& e : load_cache_entries(n, r)) {
      if (e.property != "2-packing") continue;
      if (e.set.size() <= rep.lower) continue;
      if (is_2_packing(params, e.set).holds) tighten_lower(rep, e.set.size(), "CACHE_LB");
    }
  }
  rep.exact = rep.lower == rep.upper;
  return rep;
}

ValueReport gamma_value(int n, int r, long long k, const BoundsOptions& opts) {
  KneserParams params(n, r);
  if (r >= 2 && n < 2 * r) throw std::invalid_argument("gamma_value: need n >= 2r (or r=1)");
  if (k < 1) throw std::invalid_argument("gamma_value: k must be >= 1");

  ValueReport rep;
  rep.n = n;
  rep.r = r;
  rep.k = k;

  const long long C = params.vertex_count();
  const long long delta = params.degree();

  if (k > delta + 1) {
    rep.infeasible = true;
    rep.provenance.push_back("INFEASIBLE");
    return rep;
  }

  std::optional<Exact> exact;

  if (r == 1) add_exact(exact, k, "R1_COMPLETE");
  if (r >= 2 && n == 2 * r) {
    add_exact(exact, k == 1 ? C / 2 : C, "N_EQ_2R");
  }
  if (k == delta + 1) add_exact(exact, C, "ALL_VERTICES");
  {
    long long t = delta - k;
    if (t >= 0 && n >= static_cast<long long>(t + 3) * r - ceil_div(t + 2, 2)) {
      add_exact(exact, C - (t + 1), "THM_LARGE_K");
      if (r == 2) exact->tags.push_back("COR_LARGE_K");
    }
  }
  if (k >= 2 && n >= static_cast<long long>(r) * (k + r)) {
    add_exact(exact, k + r, "THM_K_PLUS_R");
  }
  if (k == 1 && n >= r * (r + 1)) add_exact(exact, r + 1, "DOM_LARGE_N");
  if (k == 1 && r == 2 && n >= 4) add_exact(exact, 3, "DOM_N2");
  if (r == 2 && k >= 2 && n == 2 * k + 3) add_exact(exact, k + 3, "THM_N2_K3");
  if (r == 2) {
    for (long long alpha = 2; 2 * alpha + 3 + (alpha % 2) <= n; ++alpha) {
      if (alpha * n >= 2 * k + 4 * alpha && (alpha - 1) * n < 2 * k + 3 * (alpha - 1)) {
        add_exact(exact, k + 2 * alpha, "THM_B1");
      }
      if (n == ceil_div(2 * k, alpha) + 3) {
        add_exact(exact, k + 2 * alpha + 1, "THM_B2");
      }
    }
    if (n >= 5 && k == binomial(n - 3, 2) + 1) {
      add_exact(exact, binomial(n - 1, 2), "PROP_N3_PLUS_1");
    }
    if (n >= 6 && n <= 10 && k == binomial(n - 4, 2) + 2) {
      add_exact(exact, binomial(n - 2, 2) + 1, "PROP_N4_PLUS_2");
    }
  }
  if (n == 7 && r == 3 && k <= 5) add_exact(exact, 7 * k, "ODD_GRAPH_73");
  if (n == 11 && r == 5 && k <= 7) add_exact(exact, 66 * k, "ODD_GRAPH_115");

  if (exact) {
    rep.lower = rep.upper = exact->value;
    rep.exact = true;
    rep.provenance = std::move(exact->tags);
    return rep;
  }

  // interval fallback
  rep.lower = 1;
  rep.upper = C;
  rep.provenance.push_back("CONSTRUCTION_UB");  // the full vertex set
  if (k >= 2) {
    long long base = k + r;
    if (n < static_cast<long long>(r) * (k + r)) base = k + r + 1;
    tighten_lower(rep, base, "COR_K_PLUS_R_LB");
    if (r == 2 && n <= 2 * k + 2) tighten_lower(rep, k + 4, "MONOTONE_LB");
    ValueReport pv = packing_value(n, r, opts);
    if (pv.exact && delta >= k) tighten_lower(rep, k * pv.lower, "PACKING_LB");
    if (r == 2) {
      for (long long alpha = 2; 2 * alpha + 3 + (alpha % 2) <= n; ++alpha) {
        if (alpha * n >= 2 * k + 4 * alpha && (alpha - 1) * n < 2 * k + 3 * (alpha - 1)) {
          tighten_lower(rep, k + 2 * alpha, "PROP_ALPHA_LB");
        }
        if (n == ceil_div(2 * k, alpha) + 3) {
          tighten_lower(rep, k + 2 * alpha + 1, "PROP_ALPHA_LB");
        }
      }
    }
  }

  if (r == 2) {
    if (n >= 5) {
      long long alpha = std::max<long long>(2, ceil_div(2 * k, n - 4));
      if (n >= alpha + 2 && alpha * n >= 2 * k + 4 * alpha) {
        tighten_upper(rep, k + 2 * alpha, "CONSTRUCTION_UB");
      }
    }
    for (long long alpha = 2; 2 * alpha + 3 <= n; ++alpha) {
      if (n == ceil_div(2 * k, alpha) + 3) {
        tighten_upper(rep, k + 2 * alpha + 1, "CONSTRUCTION_UB");
      }
    }
    if (k >= 2 && n >= 2 * k + 3) tighten_upper(rep, k + 3, "CONSTRUCTION_UB");
    if (k <= binomial(n - 3, 2) + 1) tighten_upper(rep, binomial(n - 1, 2), "CONSTRUCTION_UB");
    if (n >= 6 && k <= binomial(n - 4, 2) + 2) {
      tighten_upper(rep, binomial(n - 2, 2) + 1, "CONSTRUCTION_UB");
    }
  }
  {
    long long t = delta - k;
    long long threshold = static_cast<long long>(t + 3) * r - ceil_div(t + 2, 2);
    if (t >= 0 && n == threshold - 1) {
      tighten_upper(rep, C - (t + 2), "CONSTRUCTION_UB");
    }
  }
  if (k >= 2 && n - 1 >= 2 * r) {
    // any k-tuple dominating set of K(n-1,r) still dominates in K(n,r)
    long long delta_prev = binomial(n - 1 - r, r);
    if (k <= delta_prev + 1) {
      ValueReport prev = gamma_value(n - 1, r, k, opts);
      tighten_upper(rep, prev.upper, "MONOTONE_UB");
    }
  }
  if (opts.use_cache && C <= kCacheCertifyCap) {
    for (const auto& e : load_cache_entries(n, r)) {
      if (e.property != "k-tuple-dominating" || e.k < k) continue;
      if (e.set.size() >= rep.upper) continue;
      if (is_k_tuple_dominating(params, e.set, k).holds) {
        tighten_upper(rep, e.set.size(), "CACHE_UB");
      }
    }
  }

  if (rep.lower > rep.upper) throw std::logic_error("gamma_value: lower bound exceeds upper");
  rep.exact = rep.lower == rep.upper;
  return rep;
}

}  // namespace kneser
