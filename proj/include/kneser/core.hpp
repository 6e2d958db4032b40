#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

// Ground-set and subset arithmetic for Kneser graphs K(n,r): vertices are
// r-subsets of [n] packed into a single 64-bit word (element x <-> bit x-1),
// adjacency is disjointness. Canonical vertex order is numeric order of the
// bit pattern, i.e. colexicographic on element sets.

namespace kneser {

inline constexpr long long kEnumerationCap = 10'000'000;

// Thrown when an operation would enumerate more vertices than its cap allows.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long long binomial(int n, int k);

struct KneserParams {
  int n = 0;
  int r = 0;

  KneserParams(int n_, int r_);

  long long vertex_count() const { return binomial(n, r); }
  // Every vertex of K(n,r) has this degree; 0 when n < 2r (edgeless).
  long long degree() const { return n >= 2 * r ? binomial(n - r, r) : 0; }

  friend bool operator==(const KneserParams&, const KneserParams&) = default;
};

struct Vertex {
  std::uint64_t bits = 0;

  int size() const;
  bool contains(int x) const { return x >= 1 && x <= 64 && (bits >> (x - 1) & 1); }
  std::vector<int> elements() const;
  std::string str() const;  // ascending elements joined by spaces

  auto operator<=>(const Vertex&) const = default;
};

Vertex vertex_of(std::initializer_list<int> elems);
Vertex vertex_from_elements(const std::vector<int>& elems);

bool are_adjacent(Vertex u, Vertex v);

// Duplicate-free, canonically ordered collection of vertices over one graph.
class VertexSet {
 public:
  VertexSet() : params_(1, 1) {}  // empty set over the trivial graph
  VertexSet(KneserParams params, std::vector<Vertex> members);

  const KneserParams& params() const { return params_; }
  const std::vector<Vertex>& members() const { return members_; }
  long long size() const { return static_cast<long long>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

 private:
  KneserParams params_;
  std::vector<Vertex> members_;  // strictly increasing
};

VertexSet enumerate_vertices(const KneserParams& params,
                             long long cap = kEnumerationCap);

// Index of v within enumerate_vertices(params), without enumerating.
long long vertex_index(const KneserParams& params, Vertex v);

long long closed_neighborhood_count(Vertex v, const VertexSet& D);

struct OccurrenceProfile {
  int n = 0;
  std::vector<long long> counts;  // counts[x-1] = i_x(D)

  long long operator[](int x) const { return counts.at(x - 1); }
  long long total() const;
};

OccurrenceProfile occurrence_profile(const VertexSet& D);

enum class LevelMode { exact, at_least, at_most };

// X_a, X_a^>= or X_a^<= of a profile, as an ascending element list.
std::vector<int> level_sets(const OccurrenceProfile& p, long long a, LevelMode mode);

// --- text / JSON interchange -------------------------------------------------

Vertex parse_vertex(const std::string& line);

// One vertex per line, '#' starts a comment, blank lines ignored.
VertexSet read_vertex_set_text(std::istream& in, const KneserParams& params);
void write_vertex_set_text(std::ostream& out, const VertexSet& s,
                           const std::string& comment = "");

// {"n":N,"r":R,"vertices":[[..],..]}
VertexSet read_vertex_set_json(std::istream& in);
void write_vertex_set_json(std::ostream& out, const VertexSet& s);

}  // namespace kneser
