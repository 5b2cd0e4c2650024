#include "fg/io.hpp"

#include <fstream>
#include <sstream>

#include "fg/errors.hpp"
#include "fg/rational.hpp"

namespace fg::io {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw JsonError(std::string("invalid JSON: ") + e.what());
  }
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonError("cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

json to_json(const Theory& theory, const Graph& g) {
  json j;
  j["vertices"] = g.num_vertices();
  json marks = json::array();
  for (const auto& k : g.vertex_kind) marks.push_back(k.mark);
  j["marks"] = std::move(marks);
  json hes = json::array();
  for (int t : g.half_edge_type)
    hes.push_back(json{{"type", theory.half_edge_types()[t].name}});
  j["half_edges"] = std::move(hes);
  j["sigma"] = g.sigma;
  j["incidence"] = g.at_vertex;
  return j;
}

Graph graph_from_json(const Theory& theory, const json& j) {
  Graph g;
  try {
    const int n = j.at("vertices").get<int>();
    for (const auto& h : j.at("half_edges")) {
      std::string name = h.is_string() ? h.get<std::string>() : h.at("type").get<std::string>();
      auto t = theory.half_edge_type_index(name);
      if (!t) throw JsonError("unknown half-edge type: " + name);
      g.half_edge_type.push_back(*t);
    }
    g.sigma = j.at("sigma").get<std::vector<int>>();
    g.at_vertex = j.at("incidence").get<std::vector<int>>();
    std::vector<int> marks(n, 0);
    if (j.contains("marks")) marks = j.at("marks").get<std::vector<int>>();
    if (static_cast<int>(marks.size()) != n) throw JsonError("marks length mismatch");
    // vertex types are recovered from the star signatures
    g.vertex_kind.resize(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig;
      for (size_t e = 0; e < g.half_edge_type.size(); ++e)
        if (e < g.at_vertex.size() && g.at_vertex[e] == v)
          sig.push_back(g.half_edge_type[e]);
      std::sort(sig.begin(), sig.end());
      auto vt = theory.vertex_type_for(sig, marks[v]);
      if (!vt)
        throw JsonError("vertex " + std::to_string(v) +
                        ": no vertex type admits its star with mark " +
                        std::to_string(marks[v]));
      g.vertex_kind[v] = VertexKind{*vt, marks[v]};
    }
  } catch (const json::exception& e) {
    throw JsonError(std::string("bad graph JSON: ") + e.what());
  }
  validate(g, theory);
  return g;
}

json to_json(const Theory& theory, const SpecifiedGraph& sg) {
  json j = to_json(theory, sg.graph);
  j["spec"] = sg.spec;
  return j;
}

SpecifiedGraph specified_from_json(const Theory& theory, const json& j) {
  Graph g = graph_from_json(theory, j);
  std::vector<int> spec;
  try {
    spec = j.at("spec").get<std::vector<int>>();
  } catch (const json::exception& e) {
    throw JsonError(std::string("bad specified-graph JSON: ") + e.what());
  }
  return make_specified(theory, std::move(g), std::move(spec));
}

json to_json(const Theory& theory, const GraphPair& p) {
  json j;
  j["outer"] = to_json(theory, p.outer);
  j["inner_kept_edges"] = p.inner_kept;
  j["inner_spec"] = p.inner_spec;
  return j;
}

GraphPair pair_from_json(const Theory& theory, const json& j) {
  try {
    SpecifiedGraph outer = specified_from_json(theory, j.at("outer"));
    auto kept = j.at("inner_kept_edges").get<std::vector<int>>();
    auto spec = j.at("inner_spec").get<std::vector<int>>();
    return make_pair(theory, std::move(outer), std::move(kept), std::move(spec));
  } catch (const json::exception& e) {
    throw JsonError(std::string("bad pair JSON: ") + e.what());
  }
}

json to_json(const Theory& theory, const GraphMonomial& m) {
  json arr = json::array();
  for (const auto& f : m.factors()) arr.push_back(to_json(theory, f));
  return arr;
}

GraphMonomial graph_monomial_from_json(const Theory& theory, const json& j) {
  std::vector<SpecifiedGraph> fs;
  for (const auto& e : j) fs.push_back(specified_from_json(theory, e));
  return GraphMonomial(std::move(fs));
}

json to_json(const Theory& theory, const PairMonomial& m) {
  json arr = json::array();
  for (const auto& f : m.factors()) arr.push_back(to_json(theory, f));
  return arr;
}

PairMonomial pair_monomial_from_json(const Theory& theory, const json& j) {
  std::vector<GraphPair> fs;
  for (const auto& e : j) fs.push_back(pair_from_json(theory, e));
  return PairMonomial(std::move(fs));
}

namespace {

template <typename T, typename ObjToJson>
json lincomb_to_json(const T& x, ObjToJson&& obj) {
  json arr = json::array();
  for (const auto& [k, t] : x.terms())
    arr.push_back(json{{"coeff", rat_to_string(t.second)}, {"object", obj(t.first)}});
  return arr;
}

}  // namespace

json to_json(const Theory& theory, const GraphLin& x) {
  return lincomb_to_json(x, [&](const SpecifiedGraph& g) { return to_json(theory, g); });
}

GraphLin graph_lin_from_json(const Theory& theory, const json& j) {
  GraphLin out;
  for (const auto& e : j)
    out.add(specified_from_json(theory, e.at("object")),
            rat_from_string(e.at("coeff").get<std::string>()));
  return out;
}

json to_json(const Theory& theory, const PairLin& x) {
  return lincomb_to_json(x, [&](const GraphPair& p) { return to_json(theory, p); });
}

PairLin pair_lin_from_json(const Theory& theory, const json& j) {
  PairLin out;
  for (const auto& e : j)
    out.add(pair_from_json(theory, e.at("object")),
            rat_from_string(e.at("coeff").get<std::string>()));
  return out;
}

json to_json(const Theory& theory, const HopfElement& x) {
  return lincomb_to_json(x, [&](const GraphMonomial& m) { return to_json(theory, m); });
}

HopfElement hopf_from_json(const Theory& theory, const json& j) {
  HopfElement out;
  for (const auto& e : j)
    out.add(graph_monomial_from_json(theory, e.at("object")),
            rat_from_string(e.at("coeff").get<std::string>()));
  return out;
}

json to_json(const Theory& theory, const DoublingElement& x) {
  return lincomb_to_json(x, [&](const PairMonomial& m) { return to_json(theory, m); });
}

DoublingElement doubling_from_json(const Theory& theory, const json& j) {
  DoublingElement out;
  for (const auto& e : j)
    out.add(pair_monomial_from_json(theory, e.at("object")),
            rat_from_string(e.at("coeff").get<std::string>()));
  return out;
}

json to_json(const Theory& theory, const HopfTensor& t) {
  json arr = json::array();
  for (const auto& [k, term] : t.terms())
    arr.push_back(json{{"coeff", rat_to_string(std::get<2>(term))},
                       {"left", to_json(theory, std::get<0>(term))},
                       {"right", to_json(theory, std::get<1>(term))}});
  return arr;
}

json to_json(const Theory& theory, const DoublingTensor& t) {
  json arr = json::array();
  for (const auto& [k, term] : t.terms())
    arr.push_back(json{{"coeff", rat_to_string(std::get<2>(term))},
                       {"left", to_json(theory, std::get<0>(term))},
                       {"right", to_json(theory, std::get<1>(term))}});
  return arr;
}

std::string to_dot(const Theory& theory, const Graph& g) {
  std::ostringstream out;
  out << "graph fg {\n  node [shape=circle];\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto& vt = theory.vertex_types()[g.vertex_kind[v].vtype];
    out << "  v" << v << " [label=\"" << vt.name;
    if (vt.allowed_specs.size() > 1) out << ":" << g.vertex_kind[v].mark;
    out << "\"];\n";
  }
  int stub = 0;
  for (int e = 0; e < g.num_half_edges(); ++e) {
    const std::string& tn = theory.half_edge_types()[g.half_edge_type[e]].name;
    if (g.sigma[e] == e) {
      out << "  x" << stub << " [shape=none, label=\"\"];\n";
      out << "  v" << g.at_vertex[e] << " -- x" << stub << " [label=\"" << tn << "\"];\n";
      ++stub;
    } else if (g.sigma[e] > e) {
      out << "  v" << g.at_vertex[e] << " -- v" << g.at_vertex[g.sigma[e]] << " [label=\""
          << tn << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace fg::io
