#pragma once

#include "fg/algebra.hpp"
#include "fg/specified.hpp"

namespace fg {

using GraphMonomial = Monomial<SpecifiedGraph>;
using HopfElement = LinComb<GraphMonomial>;
using HopfTensor = Tensor2<GraphMonomial, GraphMonomial>;
using HopfTensor3 = Tensor3<GraphMonomial, GraphMonomial, GraphMonomial>;

/// Sum of loop numbers over the factors (the bialgebra grading).
int degree(const GraphMonomial& m);

/// The subgraph-contraction coproduct: sum over all specified covering
/// subgraphs whose contraction stays inside the theory, of
/// (subgraph components as a product) tensor (contracted graph).
/// Terms whose contraction leaves the theory are dropped here and
/// nowhere else.
HopfTensor coproduct_full(const Theory& theory, const SpecifiedGraph& sg);

/// Multiplicative extension to products and linear combinations.
HopfTensor coproduct_full(const Theory& theory, const GraphMonomial& m);
HopfTensor coproduct_full(const Theory& theory, const HopfElement& x);

/// Normal form modulo the ideal identifying loop-free graphs with the
/// unit: every degree-zero factor of a monomial is removed.
GraphMonomial reduce_mod_j(const GraphMonomial& m);
HopfElement reduce_mod_j(const HopfElement& x);
HopfTensor reduce_mod_j(const HopfTensor& t);

/// Coproduct of the quotient Hopf algebra (unit tensor x, x tensor
/// unit, and the proper reduced middle terms).
HopfTensor coproduct_reduced(const Theory& theory, const SpecifiedGraph& sg);
HopfTensor coproduct_reduced(const Theory& theory, const HopfElement& x);

/// Counit of the unreduced bialgebra: 1 on monomials all of whose
/// factors are loop-free, 0 otherwise. Descends to the coefficient of
/// the empty monomial in the quotient.
Rat counit_tilde(const HopfElement& x);

/// Antipode of the connected graded quotient, by the degree recursion.
/// Input is taken modulo the ideal first.
HopfElement antipode(const Theory& theory, const HopfElement& x);

bool check_coassoc_full(const Theory& theory, const HopfElement& x);
bool check_coassoc_reduced(const Theory& theory, const HopfElement& x);

/// m(S tensor I) Delta = u eps = m(I tensor S) Delta, in the quotient.
bool check_antipode_convolution(const Theory& theory, const HopfElement& x);

}  // namespace fg
