#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lagrangia/hypergraph.hpp"

namespace lagrangia {

enum class SearchOutcome { found, not_found, inconclusive };

std::string_view to_string(SearchOutcome o);

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::inconclusive;
  std::uint64_t nodes = 0;
  /// Image of pattern vertex v at index v-1, when found.
  std::optional<std::vector<Vertex>> witness;

  bool found() const { return outcome == SearchOutcome::found; }
};

struct SearchConfig {
  std::uint64_t node_budget = 50'000'000;
};

/// Some vertex map V(pattern) -> V(target) sending every edge to an edge.
/// The target must have at most 64 vertices.
SearchResult has_homomorphism(const Hypergraph& pattern, const Hypergraph& target, const SearchConfig& cfg = {});

/// An injective such map: a copy of `pattern` inside `host`.
SearchResult contains_subgraph(const Hypergraph& host, const Hypergraph& pattern, const SearchConfig& cfg = {});

}  // namespace lagrangia
