#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fg/graph.hpp"

namespace fg {

/// Opaque, total-order-comparable fingerprint of an isomorphism class.
/// Two objects get equal keys exactly when a relabeling of vertices and
/// half-edges preserving all types, sigma, incidence (and any extra
/// colors) maps one onto the other.
struct CanonKey {
  std::string bytes;
  friend auto operator<=>(const CanonKey&, const CanonKey&) = default;
};

/// Extra invariant data mixed into the canonical form.
struct CanonColoring {
  /// One row per vertex; rows must have equal length. Isomorphisms must
  /// preserve these values (used for component specs and inner specs).
  std::vector<std::vector<int>> vertex_colors;
  /// One flag per internal pair (kept-in-subgraph marking and the like).
  std::vector<int> pair_flags;
};

/// Default size guard for canonicalization, overridable through the
/// FG_MAX_HALF_EDGES environment variable (read once at startup).
int canon_half_edge_bound();

/// Canonical key of a bare graph.
CanonKey canon(const Graph& g);

/// Canonical key of a colored graph.
CanonKey canon(const Graph& g, const CanonColoring& coloring);

bool are_isomorphic(const Graph& a, const Graph& b);

namespace detail {
/// Brute-force key: minimum certificate over all color-preserving
/// vertex permutations. Exponential; used below 8 vertices and as a
/// cross-check oracle in tests.
CanonKey canon_brute_force(const Graph& g, const CanonColoring& coloring);
/// Partition-refinement / individualization key; used at 8+ vertices.
CanonKey canon_refined(const Graph& g, const CanonColoring& coloring);
}  // namespace detail

}  // namespace fg
