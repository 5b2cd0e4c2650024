#include "fg/canon.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "fg/errors.hpp"

namespace fg {

namespace {

// A certificate is an integer sequence characterizing the colored graph
// up to a vertex ordering: vertex records (kind, extra colors, external
// stubs) followed by the normalized sorted edge list. Half-edges of the
// same type at one vertex are interchangeable, so the edge multiset
// determines sigma and the incidence map up to isomorphism.

using Cert = std::vector<int>;

struct CanonProblem {
  const Graph& g;
  const CanonColoring& coloring;
  std::vector<std::array<int, 2>> pairs;
  std::vector<int> initial_color;  // iso-invariant vertex color ids
};

Cert certificate(const CanonProblem& p, const std::vector<int>& position) {
  const Graph& g = p.g;
  Cert cert;
  cert.push_back(g.num_vertices());
  std::vector<int> order(g.num_vertices());  // new index -> old vertex
  for (int v = 0; v < g.num_vertices(); ++v) order[position[v]] = v;
  for (int i = 0; i < g.num_vertices(); ++i) {
    int v = order[i];
    cert.push_back(g.vertex_kind[v].vtype);
    cert.push_back(g.vertex_kind[v].mark);
    if (!p.coloring.vertex_colors.empty())
      for (int c : p.coloring.vertex_colors[v]) cert.push_back(c);
    auto ext = g.external_types_at(v);
    cert.push_back(static_cast<int>(ext.size()));
    for (int t : ext) cert.push_back(t);
  }
  std::vector<std::array<int, 5>> edges;
  edges.reserve(p.pairs.size());
  for (size_t i = 0; i < p.pairs.size(); ++i) {
    auto [e, f] = p.pairs[i];
    int flag = p.coloring.pair_flags.empty() ? 0 : p.coloring.pair_flags[i];
    std::array<int, 2> a{position[g.at_vertex[e]], g.half_edge_type[e]};
    std::array<int, 2> b{position[g.at_vertex[f]], g.half_edge_type[f]};
    if (b < a) std::swap(a, b);
    edges.push_back({a[0], a[1], b[0], b[1], flag});
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& rec : edges)
    cert.insert(cert.end(), rec.begin(), rec.end());
  return cert;
}

std::string cert_bytes(const Cert& cert) {
  std::string out;
  out.reserve(cert.size() * 4);
  for (int x : cert) {
    unsigned u = static_cast<unsigned>(x) ^ 0x80000000u;  // order-preserving for negatives
    for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<char>((u >> s) & 0xff));
  }
  return out;
}

std::vector<int> initial_colors(const Graph& g, const CanonColoring& coloring) {
  std::vector<std::vector<int>> tuples(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    auto& t = tuples[v];
    t.push_back(g.vertex_kind[v].vtype);
    t.push_back(g.vertex_kind[v].mark);
    if (!coloring.vertex_colors.empty())
      for (int c : coloring.vertex_colors[v]) t.push_back(c);
    auto ext = g.external_types_at(v);
    t.push_back(static_cast<int>(ext.size()));
    for (int x : ext) t.push_back(x);
    t.push_back(static_cast<int>(g.star(v).size()));
  }
  std::map<std::vector<int>, int> ids;
  for (const auto& t : tuples) ids.emplace(t, 0);
  int next = 0;
  for (auto& [k, id] : ids) id = next++;
  std::vector<int> out(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) out[v] = ids[tuples[v]];
  return out;
}

// Iteratively refines `color` by incident-edge signatures until stable.
// Color ids are renumbered so that the refined coloring depends only on
// the isomorphism class, never on input labels.
void refine(const CanonProblem& p, std::vector<int>& color) {
  const Graph& g = p.g;
  for (;;) {
    std::vector<std::pair<int, std::vector<std::array<int, 4>>>> sig(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) sig[v].first = color[v];
    for (size_t i = 0; i < p.pairs.size(); ++i) {
      auto [e, f] = p.pairs[i];
      int flag = p.coloring.pair_flags.empty() ? 0 : p.coloring.pair_flags[i];
      int ve = g.at_vertex[e], vf = g.at_vertex[f];
      sig[ve].second.push_back({color[vf], g.half_edge_type[e], g.half_edge_type[f], flag});
      sig[vf].second.push_back({color[ve], g.half_edge_type[f], g.half_edge_type[e], flag});
    }
    for (auto& s : sig) std::sort(s.second.begin(), s.second.end());
    std::map<std::pair<int, std::vector<std::array<int, 4>>>, int> ids;
    for (const auto& s : sig) ids.emplace(s, 0);
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    std::vector<int> newcolor(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) newcolor[v] = ids[sig[v]];
    if (newcolor == color) return;
    color = std::move(newcolor);
  }
}

// Individualization-refinement search: explore every discrete coloring
// reachable by splitting the first non-singleton cell, keep the minimal
// certificate. The leaf set depends only on the isomorphism class.
void search(const CanonProblem& p, std::vector<int> color, std::optional<Cert>& best) {
  const int n = p.g.num_vertices();
  std::vector<std::vector<int>> cells(*std::max_element(color.begin(), color.end()) + 1);
  for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
  int target = -1;
  for (size_t c = 0; c < cells.size(); ++c)
    if (cells[c].size() > 1) {
      target = static_cast<int>(c);
      break;
    }
  if (target < 0) {
    // discrete: color is a position assignment
    Cert cert = certificate(p, color);
    if (!best || cert < *best) best = std::move(cert);
    return;
  }
  for (int v : cells[target]) {
    std::vector<int> child(n);
    // split v off its cell, keeping the relative order of cells
    for (int w = 0; w < n; ++w) {
      child[w] = 2 * color[w];
      if (color[w] == target) child[w] = (w == v) ? 2 * target : 2 * target + 1;
    }
    std::map<int, int> compact;
    for (int w = 0; w < n; ++w) compact.emplace(child[w], 0);
    int next = 0;
    for (auto& [k, id] : compact) id = next++;
    for (int w = 0; w < n; ++w) child[w] = compact[child[w]];
    refine(p, child);
    search(p, std::move(child), best);
  }
}

}  // namespace

int canon_half_edge_bound() {
  static const int bound = [] {
    if (const char* env = std::getenv("FG_MAX_HALF_EDGES")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 24;
  }();
  return bound;
}

namespace detail {

CanonKey canon_brute_force(const Graph& g, const CanonColoring& coloring) {
  CanonProblem p{g, coloring, g.internal_pairs(), initial_colors(g, coloring)};
  const int n = g.num_vertices();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::optional<Cert> best;
  std::vector<int> position(n);
  do {
    for (int i = 0; i < n; ++i) position[order[i]] = i;
    Cert cert = certificate(p, position);
    if (!best || cert < *best) best = std::move(cert);
  } while (std::next_permutation(order.begin(), order.end()));
  return CanonKey{cert_bytes(*best)};
}

CanonKey canon_refined(const Graph& g, const CanonColoring& coloring) {
  CanonProblem p{g, coloring, g.internal_pairs(), initial_colors(g, coloring)};
  std::vector<int> color = p.initial_color;
  refine(p, color);
  std::optional<Cert> best;
  search(p, std::move(color), best);
  return CanonKey{cert_bytes(*best)};
}

}  // namespace detail

CanonKey canon(const Graph& g, const CanonColoring& coloring) {
  if (g.num_half_edges() > canon_half_edge_bound())
    throw BoundError("canonicalization size bound exceeded: " +
                     std::to_string(g.num_half_edges()) + " half-edges (bound " +
                     std::to_string(canon_half_edge_bound()) + ")");
  if (g.num_vertices() == 0) return CanonKey{std::string()};
  if (g.num_vertices() < 8) return detail::canon_brute_force(g, coloring);
  return detail::canon_refined(g, coloring);
}

CanonKey canon(const Graph& g) { return canon(g, CanonColoring{}); }

bool are_isomorphic(const Graph& a, const Graph& b) { return canon(a) == canon(b); }

}  // namespace fg
