#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lagrangia/hypergraph.hpp"

namespace lagrangia {

/// Relabelling-invariant encoding of an edge set: isolated vertices are dropped,
/// then the lexicographically least sorted mask sequence over the labellings
/// explored by colour refinement is kept.
struct CanonicalKey {
  int vertices = 0;
  std::vector<Mask> edges;

  std::string to_string() const;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept;
};

class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CanonicalLimits {
  int max_vertices = 14;
  std::uint64_t max_leaves = 2'000'000;
};

/// Canonical key of a mask edge set on ground [n].
CanonicalKey canonical_key(int n, const std::vector<Mask>& edges, const CanonicalLimits& limits = {});
CanonicalKey canonical_key(const Hypergraph& f, const CanonicalLimits& limits = {});
CanonicalKey canonical_key(const SetSystem& g, const CanonicalLimits& limits = {});

bool is_isomorphic(const Hypergraph& f, const Hypergraph& g, const CanonicalLimits& limits = {});
bool is_isomorphic(const SetSystem& f, const SetSystem& g, const CanonicalLimits& limits = {});

}  // namespace lagrangia
