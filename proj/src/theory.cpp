#include "fg/theory.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace fg {

Theory::Theory(std::string name, std::vector<HalfEdgeType> half_edge_types,
               std::vector<VertexType> vertex_types,
               std::vector<std::pair<int, int>> pairing)
    : name_(std::move(name)),
      half_edge_types_(std::move(half_edge_types)),
      vertex_types_(std::move(vertex_types)) {
  if (half_edge_types_.empty()) throw TheoryError("theory has no half-edge types");
  if (vertex_types_.empty()) throw TheoryError("theory has no vertex types");

  std::set<std::string> seen;
  for (const auto& t : half_edge_types_)
    if (!seen.insert(t.name).second)
      throw TheoryError("duplicate half-edge type name: " + t.name);
  seen.clear();
  for (const auto& v : vertex_types_)
    if (!seen.insert(v.name).second)
      throw TheoryError("duplicate vertex type name: " + v.name);

  const int n = static_cast<int>(half_edge_types_.size());
  compat_.assign(n, std::vector<char>(n, 0));
  for (auto [a, b] : pairing) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw TheoryError("pairing references unknown half-edge type");
    compat_[a][b] = compat_[b][a] = 1;
  }

  for (auto& v : vertex_types_) {
    if (v.signature.empty())
      throw TheoryError("vertex type with empty signature: " + v.name);
    if (v.allowed_specs.empty())
      throw TheoryError("vertex type with empty spec set: " + v.name);
    for (int t : v.signature)
      if (t < 0 || t >= n)
        throw TheoryError("signature of " + v.name + " references unknown half-edge type");
    std::sort(v.signature.begin(), v.signature.end());
    std::sort(v.allowed_specs.begin(), v.allowed_specs.end());
    v.allowed_specs.erase(std::unique(v.allowed_specs.begin(), v.allowed_specs.end()),
                          v.allowed_specs.end());
  }

  // Signature lookup must be unambiguous.
  for (size_t i = 0; i < vertex_types_.size(); ++i)
    for (size_t j = i + 1; j < vertex_types_.size(); ++j)
      if (vertex_types_[i].signature == vertex_types_[j].signature)
        throw TheoryError("vertex types " + vertex_types_[i].name + " and " +
                          vertex_types_[j].name + " share a signature");
}

std::optional<int> Theory::half_edge_type_index(std::string_view name) const {
  for (size_t i = 0; i < half_edge_types_.size(); ++i)
    if (half_edge_types_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> Theory::vertex_type_index(std::string_view name) const {
  for (size_t i = 0; i < vertex_types_.size(); ++i)
    if (vertex_types_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

bool Theory::sigma_compatible(int t1, int t2) const {
  return compat_[t1][t2] != 0;
}

std::optional<int> Theory::vertex_type_for_signature(
    const std::vector<int>& signature_sorted) const {
  for (size_t i = 0; i < vertex_types_.size(); ++i)
    if (vertex_types_[i].signature == signature_sorted) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> Theory::vertex_type_for(const std::vector<int>& signature_sorted,
                                           int spec) const {
  auto vt = vertex_type_for_signature(signature_sorted);
  if (!vt || !spec_allowed(*vt, spec)) return std::nullopt;
  return vt;
}

bool Theory::spec_allowed(int vtype, int spec) const {
  const auto& s = vertex_types_[vtype].allowed_specs;
  return std::binary_search(s.begin(), s.end(), spec);
}

Theory load_theory(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw TheoryError(std::string("theory document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.empty()) throw TheoryError("empty theory document");

  std::vector<HalfEdgeType> hets;
  for (const auto& h : doc.at("half_edge_types")) {
    if (h.is_string())
      hets.push_back({h.get<std::string>()});
    else
      hets.push_back({h.at("name").get<std::string>()});
  }

  auto het_index = [&](const std::string& n) -> int {
    for (size_t i = 0; i < hets.size(); ++i)
      if (hets[i].name == n) return static_cast<int>(i);
    throw TheoryError("unknown half-edge type: " + n);
  };

  std::vector<std::pair<int, int>> pairing;
  if (doc.contains("pairing")) {
    for (const auto& p : doc.at("pairing"))
      pairing.emplace_back(het_index(p.at(0).get<std::string>()),
                           het_index(p.at(1).get<std::string>()));
  } else {
    for (size_t i = 0; i < hets.size(); ++i)
      pairing.emplace_back(static_cast<int>(i), static_cast<int>(i));
  }

  std::vector<VertexType> vts;
  for (const auto& v : doc.at("vertex_types")) {
    VertexType vt;
    vt.name = v.at("name").get<std::string>();
    for (const auto& s : v.at("signature")) vt.signature.push_back(het_index(s.get<std::string>()));
    for (const auto& s : v.at("specs")) vt.allowed_specs.push_back(s.get<int>());
    vts.push_back(std::move(vt));
  }

  return Theory(doc.value("name", std::string("unnamed")), std::move(hets), std::move(vts),
                std::move(pairing));
}

namespace {

constexpr const char* kPhi3 = R"({
  "name": "phi3",
  "half_edge_types": ["s"],
  "pairing": [["s", "s"]],
  "vertex_types": [
    {"name": "v3", "signature": ["s", "s", "s"], "specs": [0]},
    {"name": "p2", "signature": ["s", "s"], "specs": [0, 1]}
  ]
})";

constexpr const char* kQed = R"({
  "name": "qed",
  "half_edge_types": ["photon", "fermion-in", "fermion-out"],
  "pairing": [["photon", "photon"], ["fermion-in", "fermion-out"]],
  "vertex_types": [
    {"name": "qed-vertex", "signature": ["photon", "fermion-in", "fermion-out"], "specs": [0]},
    {"name": "fermion-p2", "signature": ["fermion-in", "fermion-out"], "specs": [0, 1]},
    {"name": "photon-p2", "signature": ["photon", "photon"], "specs": [0, 1]}
  ]
})";

}  // namespace

Theory Theory::preset(std::string_view name) {
  if (name == "phi3") return load_theory(kPhi3);
  if (name == "qed") return load_theory(kQed);
  throw TheoryError("unknown theory preset: " + std::string(name));
}

}  // namespace fg
