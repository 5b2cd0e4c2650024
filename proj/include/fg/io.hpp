#pragma once

#include <string>

#include "json.hpp"

#include "fg/doubling.hpp"
#include "fg/hopf.hpp"
#include "fg/specified.hpp"

namespace fg::io {

using nlohmann::json;

// Graph JSON:
//   { "vertices": n, "marks": [m0..], "half_edges": [{"type": name}..],
//     "sigma": [..], "incidence": [..] }
// "marks" may be omitted on input (all zero). A specified graph adds
// "spec": [one value per component, smallest-vertex order]; a pair is
//   { "outer": <specified graph>, "inner_kept_edges": [..], "inner_spec": [..] }.

json to_json(const Theory& theory, const Graph& g);
Graph graph_from_json(const Theory& theory, const json& j);

json to_json(const Theory& theory, const SpecifiedGraph& sg);
SpecifiedGraph specified_from_json(const Theory& theory, const json& j);

json to_json(const Theory& theory, const GraphPair& p);
GraphPair pair_from_json(const Theory& theory, const json& j);

json to_json(const Theory& theory, const GraphMonomial& m);
GraphMonomial graph_monomial_from_json(const Theory& theory, const json& j);
json to_json(const Theory& theory, const PairMonomial& m);
PairMonomial pair_monomial_from_json(const Theory& theory, const json& j);

json to_json(const Theory& theory, const GraphLin& x);
GraphLin graph_lin_from_json(const Theory& theory, const json& j);
json to_json(const Theory& theory, const PairLin& x);
PairLin pair_lin_from_json(const Theory& theory, const json& j);

json to_json(const Theory& theory, const HopfElement& x);
HopfElement hopf_from_json(const Theory& theory, const json& j);
json to_json(const Theory& theory, const DoublingElement& x);
DoublingElement doubling_from_json(const Theory& theory, const json& j);

json to_json(const Theory& theory, const HopfTensor& t);
json to_json(const Theory& theory, const DoublingTensor& t);

/// Graphviz rendering; external legs are drawn as arrowless stubs.
std::string to_dot(const Theory& theory, const Graph& g);

json parse(const std::string& text);
json load_file(const std::string& path);

}  // namespace fg::io
