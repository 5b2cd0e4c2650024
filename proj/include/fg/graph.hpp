#pragma once

#include <array>
#include <compare>
#include <memory>
#include <vector>

#include "fg/theory.hpp"

namespace fg {

/// Concrete species of a vertex inside a graph: the vertex type index
/// plus its specification mark (the cross index of two-point vertices).
struct VertexKind {
  int vtype = -1;
  int mark = 0;
  friend auto operator<=>(const VertexKind&, const VertexKind&) = default;
};

/// A Feynman graph in the half-edge model: an involution `sigma` on
/// half-edges and an incidence map `at_vertex`. Fixed points of sigma
/// are external legs; orbits {e, sigma(e)} with e != sigma(e) are
/// internal edges. Self-loops (both halves at one vertex) are allowed.
struct Graph {
  std::vector<VertexKind> vertex_kind;
  std::vector<int> half_edge_type;
  std::vector<int> sigma;
  std::vector<int> at_vertex;

  int num_vertices() const { return static_cast<int>(vertex_kind.size()); }
  int num_half_edges() const { return static_cast<int>(half_edge_type.size()); }

  /// Half-edges incident to v, ascending.
  std::vector<int> star(int v) const;

  /// Internal edges as {e, sigma(e)} with e < sigma(e), sorted by e.
  /// This ordering is the canonical edge-pair indexing used everywhere
  /// (covering subgraphs, pair JSON, contraction maps).
  std::vector<std::array<int, 2>> internal_pairs() const;

  std::vector<int> external_half_edges() const;

  /// Sorted multiset of half-edge types, st(v) restricted to legs that
  /// are external in this graph.
  std::vector<int> external_types_at(int v) const;
};

/// A covering subgraph: same vertices and half-edges as the parent,
/// with only the `kept` internal edge pairs still joined; every other
/// internal edge is cut into two external legs.
struct CoveringSubgraph {
  std::shared_ptr<const Graph> parent;
  std::vector<int> kept;  // indices into parent->internal_pairs(), ascending
};

/// Checks the half-edge model invariants and membership in the theory
/// (involutive sigma, sigma respecting half-edge types, vertex stars
/// matching their declared kind). Throws GraphError.
void validate(const Graph& g, const Theory& theory);

/// Vertex sets of the connected components, each ascending, ordered by
/// smallest vertex. Isolated vertices are components.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// |internal edges| - |vertices| + |components|.
int loop_number(const Graph& g);

bool is_connected(const Graph& g);

/// Connected and still connected after cutting any one internal edge.
bool is_1pi(const Graph& g);

/// Every connected component is 1PI (single vertices vacuously so).
bool is_locally_1pi(const Graph& g);

/// All 2^|internal pairs| covering subgraphs, in ascending bitmask
/// order of the kept set. Refuses graphs with more than `bound` pairs.
std::vector<CoveringSubgraph> covering_subgraphs(const Graph& g, int bound = 20);

CoveringSubgraph full_covering(const Graph& g);
CoveringSubgraph empty_covering(const Graph& g);

/// The subgraph as a standalone graph: kept pairs internal, all other
/// formerly-internal halves external. Vertices and half-edges keep
/// their parent indices.
Graph realize(const CoveringSubgraph& sub);

struct ContractionResult {
  Graph graph;
  /// component index of the subgraph -> vertex of the contracted graph
  std::vector<int> component_vertex;
  /// old half-edge index -> new index, -1 for removed (kept-pair) halves
  std::vector<int> half_edge_map;
  /// old internal-pair index -> new internal-pair index, -1 if contracted
  std::vector<int> pair_map;
  /// old vertex -> component index of the subgraph it belongs to
  std::vector<int> component_of_vertex;
};

/// Shrinks every connected component of `sub` onto a point. Components
/// with kept edges become a fresh vertex typed by vertex_type_for of
/// their external star and the given mark; single-vertex components
/// keep their kind (their entry in `component_marks` is ignored).
/// Throws NotInTheoryError when a contracted star is admitted by no
/// vertex type.
ContractionResult contract(const Theory& theory, const Graph& g,
                           const CoveringSubgraph& sub,
                           const std::vector<int>& component_marks);

/// Full contraction with the smallest allowed mark per component.
Graph residue(const Theory& theory, const Graph& g);

/// All internal edges cut.
Graph skeleton(const Graph& g);

/// Sorted multiset of types of the external legs (the star of the
/// residue vertex for a connected graph).
std::vector<int> residue_signature(const Graph& g);

}  // namespace fg
