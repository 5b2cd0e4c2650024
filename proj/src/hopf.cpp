#include "fg/hopf.hpp"

#include <map>

#include "fg/errors.hpp"

namespace fg {

int degree(const GraphMonomial& m) {
  int d = 0;
  for (const auto& f : m.factors()) d += f.loops();
  return d;
}

HopfTensor coproduct_full(const Theory& theory, const SpecifiedGraph& sg) {
  HopfTensor out;
  for (const auto& sub : specified_subgraphs(theory, sg)) {
    SpecifiedGraph contracted;
    try {
      contracted = contract_specified(theory, sg, sub);
    } catch (const NotInTheoryError&) {
      continue;
    }
    Graph inner = realize(sub.cover);
    auto comps = connected_components(inner);
    std::vector<SpecifiedGraph> left_factors;
    for (size_t c = 0; c < comps.size(); ++c)
      left_factors.push_back(subgraph_component(theory, sg, sub, static_cast<int>(c)));
    GraphMonomial left(std::move(left_factors));
    GraphMonomial right(components_of(theory, contracted));
    out.add(std::move(left), std::move(right), 1);
  }
  return out;
}

HopfTensor coproduct_full(const Theory& theory, const GraphMonomial& m) {
  HopfTensor acc;
  acc.add(GraphMonomial{}, GraphMonomial{}, 1);
  for (const auto& f : m.factors()) {
    HopfTensor step = coproduct_full(theory, f);
    HopfTensor next;
    for (const auto& [ka, ta] : acc.terms())
      for (const auto& [kb, tb] : step.terms())
        next.add(std::get<0>(ta).times(std::get<0>(tb)),
                 std::get<1>(ta).times(std::get<1>(tb)),
                 std::get<2>(ta) * std::get<2>(tb));
    acc = std::move(next);
  }
  return acc;
}

HopfTensor coproduct_full(const Theory& theory, const HopfElement& x) {
  HopfTensor out;
  for (const auto& [k, t] : x.terms()) out.add(coproduct_full(theory, t.first), t.second);
  return out;
}

GraphMonomial reduce_mod_j(const GraphMonomial& m) {
  std::vector<SpecifiedGraph> kept;
  for (const auto& f : m.factors())
    if (f.loops() > 0) kept.push_back(f);
  return GraphMonomial(std::move(kept));
}

HopfElement reduce_mod_j(const HopfElement& x) {
  HopfElement out;
  for (const auto& [k, t] : x.terms()) out.add(reduce_mod_j(t.first), t.second);
  return out;
}

HopfTensor reduce_mod_j(const HopfTensor& t) {
  HopfTensor out;
  for (const auto& [k, term] : t.terms())
    out.add(reduce_mod_j(std::get<0>(term)), reduce_mod_j(std::get<1>(term)),
            std::get<2>(term));
  return out;
}

HopfTensor coproduct_reduced(const Theory& theory, const SpecifiedGraph& sg) {
  return reduce_mod_j(coproduct_full(theory, sg));
}

HopfTensor coproduct_reduced(const Theory& theory, const HopfElement& x) {
  return reduce_mod_j(coproduct_full(theory, reduce_mod_j(x)));
}

Rat counit_tilde(const HopfElement& x) {
  Rat out = 0;
  for (const auto& [k, t] : x.terms())
    if (degree(t.first) == 0) out += t.second;
  return out;
}

namespace {

HopfElement antipode_generator(const Theory& theory, const SpecifiedGraph& sg,
                               std::map<CanonKey, HopfElement>& memo);

HopfElement antipode_monomial(const Theory& theory, const GraphMonomial& m,
                              std::map<CanonKey, HopfElement>& memo) {
  HopfElement acc = HopfElement::of(GraphMonomial{});
  for (const auto& f : m.factors()) acc = m_product(acc, antipode_generator(theory, f, memo));
  return acc;
}

HopfElement antipode_generator(const Theory& theory, const SpecifiedGraph& sg,
                               std::map<CanonKey, HopfElement>& memo) {
  if (sg.loops() == 0) return HopfElement::of(GraphMonomial{});
  auto it = memo.find(sg.canon_key());
  if (it != memo.end()) return it->second;

  GraphMonomial self{sg};
  HopfElement result;
  result.add(self, -1);
  for (const auto& [k, term] : coproduct_reduced(theory, sg).terms()) {
    const GraphMonomial& left = std::get<0>(term);
    const GraphMonomial& right = std::get<1>(term);
    if (left.empty() || right.empty()) continue;  // the unit tensor legs
    HopfElement s_left = antipode_monomial(theory, left, memo);
    result.add(m_product(s_left, HopfElement::of(right)), -std::get<2>(term));
  }
  memo.emplace(sg.canon_key(), result);
  return result;
}

}  // namespace

HopfElement antipode(const Theory& theory, const HopfElement& x) {
  std::map<CanonKey, HopfElement> memo;
  HopfElement out;
  for (const auto& [k, t] : reduce_mod_j(x).terms())
    out.add(antipode_monomial(theory, t.first, memo).scaled(t.second));
  return out;
}

namespace {

bool coassoc_on(const Theory& theory, const HopfElement& x, bool reduced) {
  auto delta = [&](const GraphMonomial& m) {
    return reduced ? reduce_mod_j(coproduct_full(theory, m)) : coproduct_full(theory, m);
  };
  HopfTensor dx;
  for (const auto& [k, t] : x.terms()) dx.add(delta(t.first), t.second);
  HopfTensor3 lhs, rhs;
  for (const auto& [k, term] : dx.terms()) {
    const auto& [a, b, c] = term;
    for (const auto& [k2, t2] : delta(a).terms())
      lhs.add(std::get<0>(t2), std::get<1>(t2), b, std::get<2>(t2) * c);
    for (const auto& [k2, t2] : delta(b).terms())
      rhs.add(a, std::get<0>(t2), std::get<1>(t2), std::get<2>(t2) * c);
  }
  return lhs == rhs;
}

}  // namespace

bool check_coassoc_full(const Theory& theory, const HopfElement& x) {
  return coassoc_on(theory, x, false);
}

bool check_coassoc_reduced(const Theory& theory, const HopfElement& x) {
  return coassoc_on(theory, reduce_mod_j(x), true);
}

bool check_antipode_convolution(const Theory& theory, const HopfElement& x) {
  HopfElement xr = reduce_mod_j(x);
  HopfTensor dx = coproduct_reduced(theory, xr);
  std::map<CanonKey, HopfElement> memo;
  HopfElement left, right;
  for (const auto& [k, term] : dx.terms()) {
    const auto& [a, b, c] = term;
    left.add(m_product(antipode_monomial(theory, a, memo), HopfElement::of(b)).scaled(c));
    right.add(m_product(HopfElement::of(a), antipode_monomial(theory, b, memo)).scaled(c));
  }
  HopfElement ue;
  ue.add(GraphMonomial{}, counit(xr));
  return left == ue && right == ue;
}

}  // namespace fg
