#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lagrangia/rational.hpp"

namespace lagrangia {

using Vertex = int;
/// Sorted ascending, 1-based vertices.
using Edge = std::vector<Vertex>;
/// Bit i-1 set <=> element i present. Numeric order of masks is colex order.
using Mask = std::uint64_t;

inline constexpr int kMaxMaskGround = 64;

/// Colex comparison: the edge whose largest differing element is smaller comes first.
bool colex_less(const Edge& a, const Edge& b);

Mask to_mask(std::span<const Vertex> vertices);
Edge from_mask(Mask m);
inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline Mask ground_mask(int s) { return s >= 64 ? ~Mask{0} : (Mask{1} << s) - 1; }

/// An r-uniform hypergraph on vertices 1..n. Edges are kept sorted, duplicate
/// free and in colex order; isolated vertices are allowed.
class Hypergraph {
 public:
  Hypergraph(int r, int n, std::vector<Edge> edges);

  int r() const { return r_; }
  int n() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool contains(const Edge& e) const;
  std::vector<int> degrees() const;  // index v-1 holds deg(v)
  std::vector<Vertex> non_isolated() const;

  /// Edges as masks; requires n <= 64.
  std::vector<Mask> masks() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int r_;
  int n_;
  std::vector<Edge> edges_;
};

/// A (<= r_cap)-graph over ground set [s], edges stored as masks in colex order.
class SetSystem {
 public:
  SetSystem(int s, int r_cap, std::vector<Mask> edges);

  int s() const { return s_; }
  int r_cap() const { return r_cap_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<Mask>& edges() const { return edges_; }
  bool contains(Mask e) const;
  Mask support() const;

  std::vector<Edge> edge_lists() const;

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  int s_;
  int r_cap_;
  std::vector<Mask> edges_;
};

struct StarPartition {
  std::vector<Vertex> a_side;
  std::vector<Vertex> b_side;
};

// --- structure -----------------------------------------------------------

/// {J : J disjoint from I, I u J in F}; every J has r - |I| elements.
SetSystem link(const Hypergraph& f, std::span<const Vertex> I);

/// F[A] relabelled to 1..|A| preserving order.
Hypergraph induced(const Hypergraph& f, std::span<const Vertex> A);

bool is_intersecting(const Hypergraph& f);
bool is_intersecting(const SetSystem& g);
/// Every pair of edges shares at least t elements.
bool is_t_intersecting(const SetSystem& g, int t);

/// Smallest vertex common to all edges; the empty system reports vertex 1.
std::optional<Vertex> is_principal(const Hypergraph& f);
std::optional<Vertex> is_principal(const SetSystem& g);
/// The set-system convention: element 1 lies in every edge.
bool is_principal_at_one(const SetSystem& g);

/// Every pair of non-isolated vertices lies in a common edge.
bool covers_pairs(const Hypergraph& f);

/// Pairs of non-isolated vertices not covered by an edge, in colex order.
std::vector<std::pair<Vertex, Vertex>> uncovered_pairs(const Hypergraph& f);

/// Adds one edge {u, v} u W per uncovered pair, W being r-2 fresh vertices;
/// fresh blocks are allotted in colex order of the pairs.
Hypergraph extension(const Hypergraph& f);

// --- constructions ----------------------------------------------------------

Hypergraph matching2(int r);
Hypergraph complete(int t, int r);
Hypergraph k_rr(int r);
/// S^(r)[A, B] with A = {1..a}, B = {a+1..a+b}.
Hypergraph star(int a, int b, int r);
/// All r-sets of [n] containing vertex 1.
Hypergraph principal_star(int n, int r);
/// Balanced blowup of K_5^(3): five contiguous parts, sizes differing by <= 1.
Hypergraph balanced_blowup_t5(int n);
std::vector<int> t5_part_sizes(int n);

struct BestStar {
  int a_star;
  BigInt edges;
};
/// argmax over a in [1, n-r+1] of a * C(n-a, r-1), smallest on ties.
BestStar best_star(int n, int r);

/// Clones v into k copies (v itself plus k-1 new vertices n+1, ...); k = 0
/// deletes v and shifts higher labels down.
Hypergraph clone_vertex(const Hypergraph& f, Vertex v, int k);

std::optional<StarPartition> star_partition(const Hypergraph& f);
/// Admits a star partition with | |A| - n/r | <= eps * n.
bool is_balanced(const Hypergraph& f, double eps);

// --- text format ------------------------------------------------------------

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

std::string to_text(const Hypergraph& f);
Hypergraph parse_hypergraph(const std::string& text);
std::ostream& operator<<(std::ostream& os, const Hypergraph& f);

}  // namespace lagrangia
