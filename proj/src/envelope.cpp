#include "fg/envelope.hpp"

#include "fg/errors.hpp"
#include "fg/prelie.hpp"

namespace fg {

Enveloping<SpecifiedGraph> graph_enveloping(const Theory& theory) {
  return Enveloping<SpecifiedGraph>(
      [&theory](const SpecifiedGraph& a, const SpecifiedGraph& b) {
        return insert(theory, a, b);
      });
}

Enveloping<GraphPair> pair_enveloping(const Theory& theory) {
  return Enveloping<GraphPair>(
      [&theory](const GraphPair& a, const GraphPair& b) { return odot(theory, a, b); });
}

GraphPair embed_trivial(const Theory& theory, const SpecifiedGraph& g) {
  std::vector<int> spec;
  for (const auto& comp : connected_components(skeleton(g.graph)))
    spec.push_back(g.graph.vertex_kind[comp[0]].mark);
  return make_pair(theory, g, {}, std::move(spec));
}

PairMonomial embed_trivial(const Theory& theory, const GraphMonomial& m) {
  std::vector<GraphPair> fs;
  for (const auto& f : m.factors()) fs.push_back(embed_trivial(theory, f));
  return PairMonomial(std::move(fs));
}

DoublingElement embed_trivial(const Theory& theory, const HopfElement& x) {
  DoublingElement out;
  for (const auto& [k, t] : x.terms()) out.add(embed_trivial(theory, t.first), t.second);
  return out;
}

PairLin act_ext(const Theory& theory, const GraphMonomial& a, const GraphPair& q) {
  if (a.empty()) return PairLin::of(q);
  SpecifiedGraph x = a.factor(0);
  GraphMonomial rest = a.without(0);
  // (x a') -> q = x -> (a' -> q) - (x |> a') -> q
  PairLin out;
  for (const auto& [k, t] : act_ext(theory, rest, q).terms())
    out.add(act(theory, x, t.first).scaled(t.second));
  for (const auto& [k, t] : insert_mon(theory, x, rest).terms()) {
    if (t.first.size() != rest.size()) throw GraphError("unexpected insertion shape");
    out.add(act_ext(theory, t.first, q).scaled(-t.second));
  }
  return out;
}

PairLin act_ext(const Theory& theory, const HopfElement& a, const PairLin& q) {
  PairLin out;
  for (const auto& [ka, ta] : a.terms())
    for (const auto& [kb, tb] : q.terms())
      out.add(act_ext(theory, ta.first, tb.first).scaled(ta.second * tb.second));
  return out;
}

GraphLin tri_g(const Theory& theory, const SpecifiedGraph& g1, const GraphPair& q) {
  GraphLin out;
  for (const auto& [k, t] : act(theory, g1, q).terms())
    out.add(t.first.outer, t.second);
  return out;
}

HopfElement tri_g(const Theory& theory, const GraphMonomial& a, const GraphPair& q) {
  HopfElement out;
  for (const auto& [k, t] : act_ext(theory, a, q).terms())
    out.add(GraphMonomial(t.first.outer), t.second);
  return out;
}

HopfElement star_g(const Theory& theory, const GraphMonomial& a, const GraphPair& q) {
  HopfElement out;
  for (const auto& [k, t] : unshuffle(a).terms()) {
    HopfElement rhs = tri_g(theory, std::get<1>(t), q);
    out.add(m_product(HopfElement::of(std::get<0>(t)), rhs).scaled(std::get<2>(t)));
  }
  return out;
}

DoublingElement alpha(const Theory& theory, const PairMonomial& m, const GraphMonomial& a) {
  auto env = pair_enveloping(theory);
  return env.star(m, embed_trivial(theory, a));
}

DoublingElement alpha(const Theory& theory, const DoublingElement& x, const HopfElement& a) {
  DoublingElement out;
  auto env = pair_enveloping(theory);
  for (const auto& [kx, tx] : x.terms())
    for (const auto& [ka, ta] : a.terms())
      out.add(env.star(tx.first, embed_trivial(theory, ta.first)).scaled(tx.second * ta.second));
  return out;
}

bool check_comodule_h(const Theory& theory, const GraphMonomial& a) {
  // coaction coassociativity
  HopfTensor da = coproduct_full(theory, a);
  HopfTensor3 left3, right3;
  for (const auto& [k, term] : da.terms()) {
    const auto& [u, v, c] = term;
    for (const auto& [k2, t2] : coproduct_full(theory, u).terms())
      left3.add(std::get<0>(t2), std::get<1>(t2), v, std::get<2>(t2) * c);
    for (const auto& [k2, t2] : coproduct_full(theory, v).terms())
      right3.add(u, std::get<0>(t2), std::get<1>(t2), std::get<2>(t2) * c);
  }
  if (!(left3 == right3)) return false;

  // (I x Psi) Delta = (m13 x I)(Delta x Delta) Psi
  HopfTensor3 lhs;
  for (const auto& [k, term] : da.terms()) {
    const auto& [u, v, c] = term;
    for (const auto& [k2, t2] : unshuffle(v).terms())
      lhs.add(u, std::get<0>(t2), std::get<1>(t2), std::get<2>(t2) * c);
  }
  HopfTensor3 rhs;
  for (const auto& [k, term] : unshuffle(a).terms()) {
    const auto& [u, v, c] = term;
    for (const auto& [k1, t1] : coproduct_full(theory, u).terms())
      for (const auto& [k2, t2] : coproduct_full(theory, v).terms())
        rhs.add(std::get<0>(t1).times(std::get<0>(t2)), std::get<1>(t1), std::get<1>(t2),
                std::get<2>(t1) * std::get<2>(t2) * c);
  }
  return lhs == rhs;
}

bool check_comodule_d(const Theory& theory, const PairMonomial& m) {
  DoublingTensor dm = doubling_coproduct(theory, m);
  DoublingTensor3 left3, right3;
  for (const auto& [k, term] : dm.terms()) {
    const auto& [u, v, c] = term;
    for (const auto& [k2, t2] : doubling_coproduct(theory, u).terms())
      left3.add(std::get<0>(t2), std::get<1>(t2), v, std::get<2>(t2) * c);
    for (const auto& [k2, t2] : doubling_coproduct(theory, v).terms())
      right3.add(u, std::get<0>(t2), std::get<1>(t2), std::get<2>(t2) * c);
  }
  if (!(left3 == right3)) return false;

  DoublingTensor3 lhs;
  for (const auto& [k, term] : dm.terms()) {
    const auto& [u, v, c] = term;
    for (const auto& [k2, t2] : unshuffle(v).terms())
      lhs.add(u, std::get<0>(t2), std::get<1>(t2), std::get<2>(t2) * c);
  }
  DoublingTensor3 rhs;
  for (const auto& [k, term] : unshuffle(m).terms()) {
    const auto& [u, v, c] = term;
    for (const auto& [k1, t1] : doubling_coproduct(theory, u).terms())
      for (const auto& [k2, t2] : doubling_coproduct(theory, v).terms())
        rhs.add(std::get<0>(t1).times(std::get<0>(t2)), std::get<1>(t1), std::get<1>(t2),
                std::get<2>(t1) * std::get<2>(t2) * c);
  }
  return lhs == rhs;
}

bool check_mb_action(const Theory& theory, const PairMonomial& p, const GraphMonomial& a,
                     const GraphMonomial& b) {
  auto genv = graph_enveloping(theory);
  DoublingElement lhs = alpha(theory, alpha(theory, p, a), HopfElement::of(b));
  DoublingElement rhs;
  for (const auto& [k, t] : genv.star(a, b).terms())
    rhs.add(alpha(theory, p, t.first).scaled(t.second));
  return lhs == rhs;
}

bool check_mb_star_compat(const Theory& theory, const PairMonomial& p, const PairMonomial& q,
                          const GraphMonomial& a) {
  auto penv = pair_enveloping(theory);
  DoublingElement lhs;
  for (const auto& [k, term] : unshuffle(a).terms()) {
    const auto& [a1, a2, c] = term;
    lhs.add(penv.star(alpha(theory, p, a1), alpha(theory, q, a2)).scaled(c));
  }
  DoublingElement rhs = alpha(theory, penv.star(p, q), HopfElement::of(a));
  return lhs == rhs;
}

bool check_mb_coproduct(const Theory& theory, const PairMonomial& p, const GraphMonomial& a) {
  DoublingTensor lhs;
  for (const auto& [k, t] : alpha(theory, p, a).terms())
    lhs.add(unshuffle(t.first), t.second);
  DoublingTensor rhs;
  for (const auto& [kp, tp] : unshuffle(p).terms())
    for (const auto& [ka, ta] : unshuffle(a).terms()) {
      DoublingElement first = alpha(theory, std::get<0>(tp), std::get<0>(ta));
      DoublingElement second = alpha(theory, std::get<1>(tp), std::get<1>(ta));
      for (const auto& [k1, t1] : first.terms())
        for (const auto& [k2, t2] : second.terms())
          rhs.add(t1.first, t2.first,
                  t1.second * t2.second * std::get<2>(tp) * std::get<2>(ta));
    }
  return lhs == rhs;
}

}  // namespace fg
