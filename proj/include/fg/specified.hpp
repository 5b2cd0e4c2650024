#pragma once

#include <optional>
#include <vector>

#include "fg/canon.hpp"
#include "fg/graph.hpp"

namespace fg {

/// A specified graph: a locally 1PI superficially divergent graph
/// together with a specification value per connected component,
/// constrained by the vertex type its contraction produces.
/// Treat as immutable once constructed.
struct SpecifiedGraph {
  Graph graph;
  std::vector<int> spec;  // per component, components ordered by smallest vertex

  const CanonKey& canon_key() const;
  int loops() const;

 private:
  mutable std::optional<CanonKey> key_;
  mutable std::optional<int> loops_;
};

/// Validates and builds a specified graph. Errors: not locally 1PI,
/// component residue admitted by no vertex type, spec value outside the
/// allowed set, spec count mismatching the component count, or a
/// single-vertex component whose spec disagrees with the vertex mark.
SpecifiedGraph make_specified(const Theory& theory, Graph g, std::vector<int> spec);

/// A covering subgraph together with its specification choice: one
/// value per component of the realized subgraph (components ordered by
/// smallest vertex; single-vertex components carry their forced value).
struct SpecifiedSubgraph {
  CoveringSubgraph cover;
  std::vector<int> spec;
};

/// All specified covering subgraphs of `sg`: every covering subgraph
/// that is locally 1PI with superficially divergent components, with
/// the spec ranging over all allowed values for loop-carrying
/// components, forced to the parent's value on full components and to
/// the vertex mark on single-vertex components.
std::vector<SpecifiedSubgraph> specified_subgraphs(const Theory& theory,
                                                   const SpecifiedGraph& sg);

/// Checks the covering-subgraph relation for an externally supplied
/// candidate; returns a diagnostic naming the violated clause.
struct RelationCheck {
  bool holds = false;
  std::string reason;
};
RelationCheck check_specified_subgraph(const Theory& theory, const SpecifiedGraph& sg,
                                       const SpecifiedSubgraph& sub);

/// Contracts each component of the subgraph onto a point, typing the
/// new vertices with the subgraph's spec; the component specification
/// of the result is inherited from `sg`. Throws NotInTheoryError.
SpecifiedGraph contract_specified(const Theory& theory, const SpecifiedGraph& sg,
                                  const SpecifiedSubgraph& sub);

/// The fully contracted graph: one specified vertex per component.
SpecifiedGraph residue_specified(const Theory& theory, const SpecifiedGraph& sg);

/// Splits into connected components as standalone specified graphs,
/// ordered by smallest vertex.
std::vector<SpecifiedGraph> components_of(const Theory& theory, const SpecifiedGraph& sg);

/// The standalone specified graph carried by one component of a
/// specified covering subgraph.
SpecifiedGraph subgraph_component(const Theory& theory, const SpecifiedGraph& sg,
                                  const SpecifiedSubgraph& sub, int component);

/// Kind of the vertex a connected specified graph contracts to.
VertexKind residue_kind(const Theory& theory, const SpecifiedGraph& sg);

CanonKey canon_specified(const SpecifiedGraph& sg);

}  // namespace fg
