#pragma once

#include "fg/algebra.hpp"
#include "fg/hopf.hpp"
#include "fg/specified.hpp"

namespace fg {

using GraphLin = LinComb<SpecifiedGraph>;

/// One way of replacing vertex `v` of `host` by `piece`, with the index
/// maps needed to transport subgraph structure through the gluing.
struct Gluing {
  Graph graph;
  std::vector<int> piece_half_map;   // half-edge of piece -> result index
  std::vector<int> host_half_map;    // half-edge of host -> result index, -1 for st(v)
  std::vector<int> piece_vertex_map;
  std::vector<int> host_vertex_map;  // -1 for v
  std::vector<int> piece_pair_map;   // internal pair of piece -> result pair
  std::vector<int> host_pair_map;    // internal pair of host -> result pair
                                     // (pairs meeting v land on glue edges)
};

/// All gluings of `piece` into `host` at vertex `v`: one per
/// type-preserving bijection between the external legs of `piece` and
/// the star of `v`. Empty when the leg multisets disagree.
std::vector<Gluing> glue_all(const Graph& piece, const Graph& host, int v);

/// Insertion at one vertex. Zero unless the kind of `v` equals the
/// residue kind of `g1` (vertex type and specification both). The
/// result carries the specification of `g2`; multiplicities count the
/// leg bijections, collected per isomorphism class.
GraphLin insert_at(const Theory& theory, const SpecifiedGraph& g1, int v,
                   const SpecifiedGraph& g2);

/// The insertion product: sum of insert_at over all vertices of g2.
GraphLin insert(const Theory& theory, const SpecifiedGraph& g1, const SpecifiedGraph& g2);
GraphLin insert(const Theory& theory, const GraphLin& a, const GraphLin& b);

/// Insertion into a product, distributing over the factors.
HopfElement insert_mon(const Theory& theory, const SpecifiedGraph& g1,
                       const GraphMonomial& m);

GraphLin bracket(const Theory& theory, const GraphLin& a, const GraphLin& b);

/// Left pre-Lie identity for the insertion product, evaluated exactly.
bool check_prelie(const Theory& theory, const SpecifiedGraph& a, const SpecifiedGraph& b,
                  const SpecifiedGraph& c);

bool check_jacobi(const Theory& theory, const SpecifiedGraph& a, const SpecifiedGraph& b,
                  const SpecifiedGraph& c);

}  // namespace fg
