#pragma once

#include <optional>

#include "fg/hopf.hpp"
#include "fg/prelie.hpp"
#include "fg/specified.hpp"

namespace fg {

/// A basis element of the doubling space: a specified graph together
/// with one of its specified covering subgraphs. The subgraph is stored
/// as the kept internal pair indices plus a spec value per component of
/// the realized subgraph. Treat as immutable once constructed.
struct GraphPair {
  SpecifiedGraph outer;
  std::vector<int> inner_kept;
  std::vector<int> inner_spec;

  const CanonKey& canon_key() const;

  SpecifiedSubgraph inner_subgraph() const;

 private:
  mutable std::optional<CanonKey> key_;
};

using PairMonomial = Monomial<GraphPair>;
using PairLin = LinComb<GraphPair>;
using DoublingElement = LinComb<PairMonomial>;
using DoublingTensor = Tensor2<PairMonomial, PairMonomial>;
using DoublingTensor3 = Tensor3<PairMonomial, PairMonomial, PairMonomial>;

/// Validates the covering-subgraph relation and builds the pair.
GraphPair make_pair(const Theory& theory, SpecifiedGraph outer, std::vector<int> inner_kept,
                    std::vector<int> inner_spec);

/// Loop numbers of outer and inner (the doubling bidegree).
int outer_degree(const GraphPair& p);
int inner_degree(const GraphPair& p);
int inner_degree(const PairMonomial& m);

/// The inner subgraph as a specified graph on the outer's vertex set.
SpecifiedGraph inner_graph(const Theory& theory, const GraphPair& p);

/// Projection onto the inner component, as a product of its connected
/// components. A bialgebra morphism onto the graph algebra.
GraphMonomial p2(const Theory& theory, const GraphPair& p);
HopfElement p2(const Theory& theory, const PairLin& x);
HopfElement p2(const Theory& theory, const DoublingElement& x);

/// Vertices of the outer graph lying in single-vertex components of the
/// inner (insertion sites for the doubling product).
std::vector<int> free_vertices(const GraphPair& p);
/// Vertices incident to a kept inner edge (sites for the module action).
std::vector<int> inner_vertices(const GraphPair& p);

/// Coproduct of the doubling bialgebra: sum over specified covering
/// subgraphs delta of the inner, of (outer, delta) tensor
/// (outer/delta, inner/delta); out-of-theory contractions drop.
DoublingTensor doubling_coproduct(const Theory& theory, const GraphPair& p);
DoublingTensor doubling_coproduct(const Theory& theory, const PairMonomial& m);
DoublingTensor doubling_coproduct(const Theory& theory, const DoublingElement& x);

/// Counit of the doubling bialgebra: 1 on monomials all of whose pair
/// factors have edgeless inners, 0 otherwise.
Rat counit_doubling(const DoublingElement& x);

/// The doubling pre-Lie product: insert p's outer at every free vertex
/// of q matching its residue kind; inners juxtapose.
PairLin odot(const Theory& theory, const GraphPair& p, const GraphPair& q);
PairLin odot(const Theory& theory, const PairLin& a, const PairLin& b);

/// The module action: insert simultaneously into outer and inner at
/// every inner vertex of q matching g1's residue kind.
PairLin act(const Theory& theory, const SpecifiedGraph& g1, const GraphPair& q);
PairLin act(const Theory& theory, const GraphLin& a, const PairLin& b);

/// Pre-Lie module axiom for the action over the insertion product.
bool check_module(const Theory& theory, const SpecifiedGraph& g1, const SpecifiedGraph& g2,
                  const GraphPair& q);

/// The action is a derivation of the doubling pre-Lie product.
bool check_derivation(const Theory& theory, const SpecifiedGraph& g1, const GraphPair& p,
                      const GraphPair& q);

/// Projection onto the second component intertwines the action with
/// insertion, in the quotient Hopf algebra.
bool check_p2_prelie_module(const Theory& theory, const SpecifiedGraph& g1,
                            const GraphPair& q);

/// P2 is an algebra and coalgebra morphism.
bool check_p2_bialgebra(const Theory& theory, const GraphPair& p, const GraphPair& q);

}  // namespace fg
