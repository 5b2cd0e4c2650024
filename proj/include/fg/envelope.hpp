#pragma once

#include <functional>
#include <map>

#include "fg/doubling.hpp"
#include "fg/hopf.hpp"

namespace fg {

/// Unshuffling coproduct on a commutative word: sum over ordered
/// two-block splits of the multiset, with multiplicities.
template <typename B>
Tensor2<Monomial<B>, Monomial<B>> unshuffle(const Monomial<B>& m) {
  Tensor2<Monomial<B>, Monomial<B>> out;
  const int n = m.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> left, right;
    for (int i = 0; i < n; ++i)
      (mask & (1u << i) ? left : right).push_back(i);
    out.add(m.select(left), m.select(right), 1);
  }
  return out;
}

/// Extension of a pre-Lie generator product to the symmetric algebra,
/// together with the associated associative star product. The four
/// defining rules: the unit acts as identity on the left and via the
/// counit on the right, generators peel off the left through the
/// associator correction, and products on the right split through the
/// unshuffle.
template <typename B>
class Enveloping {
 public:
  using GenProduct = std::function<LinComb<B>(const B&, const B&)>;
  using Elem = LinComb<Monomial<B>>;

  explicit Enveloping(GenProduct product) : product_(std::move(product)) {}

  Elem ext_product(const Monomial<B>& a, const Monomial<B>& b) {
    auto key = std::pair{a.canon_key(), b.canon_key()};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Elem result = compute(a, b);
    memo_.emplace(std::move(key), result);
    return result;
  }

  Elem ext_product(const Elem& a, const Elem& b) {
    Elem out;
    for (const auto& [ka, ta] : a.terms())
      for (const auto& [kb, tb] : b.terms())
        out.add(ext_product(ta.first, tb.first).scaled(ta.second * tb.second));
    return out;
  }

  Elem star(const Monomial<B>& a, const Monomial<B>& b) {
    Elem out;
    for (const auto& [k, t] : unshuffle(a).terms()) {
      Elem rhs = ext_product(std::get<1>(t), b);
      out.add(m_product(Elem::of(std::get<0>(t)), rhs).scaled(std::get<2>(t)));
    }
    return out;
  }

  Elem star(const Elem& a, const Elem& b) {
    Elem out;
    for (const auto& [ka, ta] : a.terms())
      for (const auto& [kb, tb] : b.terms())
        out.add(star(ta.first, tb.first).scaled(ta.second * tb.second));
    return out;
  }

 private:
  Elem compute(const Monomial<B>& a, const Monomial<B>& b) {
    if (a.empty()) return Elem::of(b);
    if (b.empty()) return Elem{};  // counit of a nonempty word
    if (b.size() == 1) {
      if (a.size() == 1) {
        Elem out;
        for (const auto& [k, t] : product_(a.factor(0), b.factor(0)).terms())
          out.add(Monomial<B>(t.first), t.second);
        return out;
      }
      // (x a') |> y = x |> (a' |> y) - (x |> a') |> y
      Monomial<B> x(a.factor(0));
      Monomial<B> rest = a.without(0);
      Elem out;
      for (const auto& [k, t] : ext_product(rest, b).terms())
        out.add(ext_product(x, t.first).scaled(t.second));
      for (const auto& [k, t] : ext_product(x, rest).terms())
        out.add(ext_product(t.first, b).scaled(-t.second));
      return out;
    }
    // a |> (y b') = sum (a1 |> y)(a2 |> b')
    Monomial<B> y(b.factor(0));
    Monomial<B> rest = b.without(0);
    Elem out;
    for (const auto& [k, t] : unshuffle(a).terms()) {
      Elem first = ext_product(std::get<0>(t), y);
      Elem second = ext_product(std::get<1>(t), rest);
      out.add(m_product(first, second).scaled(std::get<2>(t)));
    }
    return out;
  }

  GenProduct product_;
  std::map<std::pair<CanonKey, CanonKey>, Elem> memo_;
};

/// The two concrete enveloping algebras: graphs under insertion and
/// pairs under the doubling product.
Enveloping<SpecifiedGraph> graph_enveloping(const Theory& theory);
Enveloping<GraphPair> pair_enveloping(const Theory& theory);

/// Graphs embedded as pairs with edgeless inner subgraphs.
GraphPair embed_trivial(const Theory& theory, const SpecifiedGraph& g);
PairMonomial embed_trivial(const Theory& theory, const GraphMonomial& m);
DoublingElement embed_trivial(const Theory& theory, const HopfElement& x);

/// The enveloping extension of the module action: words of graphs
/// acting on a pair through nested insertions.
PairLin act_ext(const Theory& theory, const GraphMonomial& a, const GraphPair& q);
PairLin act_ext(const Theory& theory, const HopfElement& a, const PairLin& q);

/// Insertion restricted to the inner vertices of a pair (the outer
/// projection of the extended action), and its star companion.
GraphLin tri_g(const Theory& theory, const SpecifiedGraph& g1, const GraphPair& q);
HopfElement tri_g(const Theory& theory, const GraphMonomial& a, const GraphPair& q);
HopfElement star_g(const Theory& theory, const GraphMonomial& a, const GraphPair& q);

/// The action of the graph star algebra on the doubling star algebra:
/// star the outer against the embedded argument, inner rides along.
DoublingElement alpha(const Theory& theory, const PairMonomial& m, const GraphMonomial& a);
DoublingElement alpha(const Theory& theory, const DoublingElement& x, const HopfElement& a);

/// Comodule-coalgebra diagram at the graph level for one word:
/// (I x Psi) Delta = (m13 x I)(Delta x Delta) Psi, plus coaction
/// coassociativity.
bool check_comodule_h(const Theory& theory, const GraphMonomial& a);

/// Same diagram at the pair level with Phi and the doubling coproduct.
bool check_comodule_d(const Theory& theory, const PairMonomial& m);

/// The three module-bialgebra diagrams.
bool check_mb_action(const Theory& theory, const PairMonomial& p, const GraphMonomial& a,
                     const GraphMonomial& b);
bool check_mb_star_compat(const Theory& theory, const PairMonomial& p, const PairMonomial& q,
                          const GraphMonomial& a);
bool check_mb_coproduct(const Theory& theory, const PairMonomial& p, const GraphMonomial& a);

}  // namespace fg
