#include "kneser/core.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace kneser {

long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // n <= 64 keeps every intermediate product inside unsigned 64 bits when
  // multiplication and division are interleaved.
  unsigned long long res = 1;
  for (int i = 1; i <= k; ++i) {
    res = res * static_cast<unsigned long long>(n - k + i) / i;
  }
  return static_cast<long long>(res);
}

KneserParams::KneserParams(int n_, int r_) : n(n_), r(r_) {
  if (n < 1 || n > 64) throw std::invalid_argument("KneserParams: n must be in [1,64]");
  if (r < 1 || r > n) throw std::invalid_argument("KneserParams: r must be in [1,n]");
}

int Vertex::size() const { return std::popcount(bits); }

std::vector<int> Vertex::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

std::string Vertex::str() const {
  std::string out;
  for (int x : elements()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

Vertex vertex_from_elements(const std::vector<int>& elems) {
  Vertex v;
  for (int x : elems) {
    if (x < 1 || x > 64) throw std::invalid_argument("vertex element out of [1,64]");
    std::uint64_t bit = std::uint64_t{1} << (x - 1);
    if (v.bits & bit) throw std::invalid_argument("repeated element in vertex");
    v.bits |= bit;
  }
  return v;
}

Vertex vertex_of(std::initializer_list<int> elems) {
  return vertex_from_elements(std::vector<int>(elems));
}

bool are_adjacent(Vertex u, Vertex v) { return (u.bits & v.bits) == 0; }

namespace {

void check_member(const KneserParams& params, Vertex v) {
  if (v.size() != params.r) throw std::invalid_argument("vertex has wrong cardinality for K(n,r)");
  if (params.n < 64 && (v.bits >> params.n) != 0) {
    throw std::invalid_argument("vertex element exceeds ground set [n]");
  }
}

}  // namespace

VertexSet::VertexSet(KneserParams params, std::vector<Vertex> members)
    : params_(params), members_(std::move(members)) {
  for (Vertex v : members_) check_member(params_, v);
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("duplicate vertex in VertexSet");
  }
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet enumerate_vertices(const KneserParams& params, long long cap) {
  long long count = params.vertex_count();
  if (count > cap) {
    throw CapacityError("K(" + std::to_string(params.n) + "," + std::to_string(params.r) +
                        ") has " + std::to_string(count) + " vertices, over the cap of " +
                        std::to_string(cap));
  }
  std::vector<Vertex> verts;
  verts.reserve(static_cast<std::size_t>(count));
  std::uint64_t v = (params.r == 64) ? ~std::uint64_t{0}
                                     : (std::uint64_t{1} << params.r) - 1;
  const std::uint64_t last = v << (params.n - params.r);
  while (true) {
    verts.push_back(Vertex{v});
    if (v == last) break;
    // Gosper's hack: next bit pattern with the same popcount.
    std::uint64_t c = v & (~v + 1);
    std::uint64_t rr = v + c;
    v = (((v ^ rr) >> 2) / c) | rr;
  }
  return VertexSet(params, std::move(verts));
}

long long vertex_index(const KneserParams& params, Vertex v) {
  check_member(params, v);
  // colex rank: sum of C(pos_i, i) over ascending 0-based positions
  long long rank = 0;
  int i = 1;
  for (int x : v.elements()) {
    rank += binomial(x - 1, i);
    ++i;
  }
  return rank;
}

long long closed_neighborhood_count(Vertex v, const VertexSet& D) {
  check_member(D.params(), v);
  long long count = 0;
  for (Vertex u : D) {
    if (u == v || are_adjacent(u, v)) ++count;
  }
  return count;
}

long long OccurrenceProfile::total() const {
  long long t = 0;
  for (long long c : counts) t += c;
  return t;
}

OccurrenceProfile occurrence_profile(const VertexSet& D) {
  OccurrenceProfile p;
  p.n = D.params().n;
  p.counts.assign(p.n, 0);
  for (Vertex v : D) {
    for (int x : v.elements()) ++p.counts[x - 1];
  }
  return p;
}

std::vector<int> level_sets(const OccurrenceProfile& p, long long a, LevelMode mode) {
  if (a < 0) throw std::invalid_argument("level_sets: a must be non-negative");
  std::vector<int> out;
  for (int x = 1; x <= p.n; ++x) {
    long long c = p.counts[x - 1];
    bool in = (mode == LevelMode::exact)      ? c == a
              : (mode == LevelMode::at_least) ? c >= a
                                              : c <= a;
    if (in) out.push_back(x);
  }
  return out;
}

Vertex parse_vertex(const std::string& line) {
  std::istringstream iss(line);
  std::vector<int> elems;
  int x;
  while (iss >> x) elems.push_back(x);
  if (!iss.eof()) throw std::invalid_argument("bad vertex line: '" + line + "'");
  if (elems.empty()) throw std::invalid_argument("empty vertex line");
  return vertex_from_elements(elems);
}

VertexSet read_vertex_set_text(std::istream& in, const KneserParams& params) {
  std::vector<Vertex> verts;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    verts.push_back(parse_vertex(line));
  }
  return VertexSet(params, std::move(verts));
}

void write_vertex_set_text(std::ostream& out, const VertexSet& s,
                           const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << "\n";
  for (Vertex v : s) out << v.str() << "\n";
}

VertexSet read_vertex_set_json(std::istream& in) {
  nlohmann::json j;
  in >> j;
  KneserParams params(j.at("n").get<int>(), j.at("r").get<int>());
  std::vector<Vertex> verts;
  for (const auto& arr : j.at("vertices")) {
    verts.push_back(vertex_from_elements(arr.get<std::vector<int>>()));
  }
  return VertexSet(params, std::move(verts));
}

void write_vertex_set_json(std::ostream& out, const VertexSet& s) {
  nlohmann::json j;
  j["n"] = s.params().n;
  j["r"] = s.params().r;
  auto arr = nlohmann::json::array();
  for (Vertex v : s) arr.push_back(v.elements());
  j["vertices"] = std::move(arr);
  out << j.dump() << "\n";
}

}  // namespace kneser
