#include "pathhom/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pathhom/errors.hpp"

namespace pathhom {

namespace {

[[noreturn]] void fail(const json::json_pointer& where, const std::string& what) {
  std::string loc = where.to_string();
  throw InputError((loc.empty() ? std::string("/") : loc) + ": " + what);
}

const json& member(const json& obj, const json::json_pointer& at, const char* key) {
  if (!obj.is_object()) fail(at, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(at, std::string("missing \"") + key + "\"");
  return *it;
}

std::string label_at(const json& j, const json::json_pointer& at) {
  if (!j.is_string()) fail(at, "expected a vertex label string");
  return j.get<std::string>();
}

VertexId vertex_at(const json& j, const json::json_pointer& at, const Digraph& g) {
  std::string label = label_at(j, at);
  auto v = g.find(label);
  if (!v) fail(at, "unknown vertex label \"" + label + "\"");
  return *v;
}

Scalar scalar_at(const json& j, const json::json_pointer& at, const Field& field) {
  try {
    return scalar_from_json(j, field);
  } catch (const InputError& e) {
    fail(at, e.what());
  }
}

}  // namespace

json read_json_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InputError(file.string() + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(file.string() + ": " + e.what());
  }
}

Digraph digraph_from_json(const json& j) {
  const json::json_pointer root;
  const json& verts = member(j, root, "vertices");
  if (!verts.is_array()) fail(root / "vertices", "expected an array of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < verts.size(); ++i) labels.push_back(label_at(verts[i], root / "vertices" / i));

  const json& edges = member(j, root, "edges");
  if (!edges.is_array()) fail(root / "edges", "expected an array of [from, to] pairs");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto at = root / "edges" / i;
    if (!edges[i].is_array() || edges[i].size() != 2) fail(at, "expected a [from, to] pair");
    pairs.emplace_back(label_at(edges[i][0], at / 0), label_at(edges[i][1], at / 1));
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    try {
      // validate one edge at a time so the error names its position
      Digraph::from_labels(labels, {pairs[i]});
    } catch (const InputError& e) {
      fail(root / "edges" / i, e.what());
    }
  }
  try {
    return Digraph::from_labels(std::move(labels), pairs);
  } catch (const InputError& e) {
    fail(root, e.what());
  }
}

json to_json(const Digraph& g) {
  json edges = json::array();
  for (auto [a, b] : g.edges()) edges.push_back({g.label(a), g.label(b)});
  return json{{"vertices", g.labels()}, {"edges", std::move(edges)}};
}

Scalar scalar_from_json(const json& j, const Field& field) {
  if (j.is_number_integer()) return field.from_int(j.get<long long>());
  if (j.is_string()) return field.parse_scalar(j.get<std::string>());
  throw InputError("expected a coefficient string \"num\" or \"num/den\", or an integer");
}

json to_json(const Scalar& s) {
  if (s.is_rational()) return s.to_string();
  return s.residue_value();
}

DiffElement diff_element_from_json(const json& j, const Digraph& g, const Field& field) {
  const json::json_pointer root;
  const json& deg = member(j, root, "degree");
  if (!deg.is_number_integer() || deg.get<long long>() < 0)
    fail(root / "degree", "expected a non-negative integer");
  const int degree = deg.get<int>();
  DiffElement e(degree);

  if (j.contains("weights")) {
    if (degree != 1) fail(root / "degree", "the weights shorthand requires degree 1");
    const json& w = j["weights"];
    if (!w.is_object()) fail(root / "weights", "expected an object mapping labels to weights");
    for (const auto& [label, value] : w.items()) {
      auto at = root / "weights" / label;
      auto v = g.find(label);
      if (!v) fail(at, "unknown vertex label \"" + label + "\"");
      VertexId id = *v;
      e.add_term(std::span<const VertexId>(&id, 1), scalar_at(value, at, field));
    }
    return e;
  }

  const json& terms = member(j, root, "terms");
  if (!terms.is_array()) fail(root / "terms", "expected an array of terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    auto at = root / "terms" / i;
    const json& mono = member(terms[i], at, "monomial");
    if (!mono.is_array()) fail(at / "monomial", "expected an array of vertex labels");
    if (mono.size() != static_cast<std::size_t>(degree))
      fail(at / "monomial", "monomial has " + std::to_string(mono.size()) +
                                " factors but the element has degree " + std::to_string(degree));
    std::vector<VertexId> raw;
    for (std::size_t k = 0; k < mono.size(); ++k) raw.push_back(vertex_at(mono[k], at / "monomial" / k, g));
    e.add_term(raw, scalar_at(member(terms[i], at, "coeff"), at / "coeff", field));
  }
  return e;
}

json to_json(const DiffElement& e, const Digraph& g) {
  json terms = json::array();
  for (const auto& [m, c] : e.terms()) {
    json mono = json::array();
    for (VertexId v : m.vertices()) mono.push_back(g.label(v));
    terms.push_back({{"monomial", std::move(mono)}, {"coeff", to_json(c)}});
  }
  return json{{"degree", e.degree()}, {"terms", std::move(terms)}};
}

json to_json(const PathChain& c, const Digraph& g) {
  json out = json::array();
  for (const auto& [p, x] : c) {
    json path = json::array();
    for (VertexId v : p) path.push_back(g.label(v));
    out.push_back({{"path", std::move(path)}, {"coeff", to_json(x)}});
  }
  return out;
}

json to_json(const Matrix& m) {
  std::vector<std::tuple<std::size_t, std::size_t, json>> entries;
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& [i, x] : m.column(j)) entries.emplace_back(i, j, to_json(x));
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  json list = json::array();
  for (auto& [i, j, x] : entries) list.push_back({i, j, std::move(x)});
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(list)}};
}

namespace {

json index_json(const DegreeIndex& d) {
  return json{{"p", d.p()}, {"k", d.k()}, {"q", d.q()}};
}

}  // namespace

json to_json(const HomologyResult& r, const Digraph& g) {
  json out{{"field", r.field.name()},
           {"alpha_degree", r.index.width()},
           {"t", r.index.t()},
           {"p", r.index.p()},
           {"k", r.index.k()},
           {"q", r.index.q()},
           {"max_n", r.max_n},
           {"path_lengths", r.path_lengths},
           {"omega_dims", r.omega_dims},
           {"boundary_ranks", r.boundary_ranks},
           {"betti", r.betti},
           {"euler", r.euler ? json(*r.euler) : json(nullptr)},
           {"truncated", r.truncated}};
  if (r.generators) {
    json gens = json::array();
    for (const auto& per_degree : *r.generators) {
      json list = json::array();
      for (const auto& c : per_degree) list.push_back(to_json(c, g));
      gens.push_back(std::move(list));
    }
    out["generators"] = std::move(gens);
  }
  return out;
}

json to_json(const InducedMap& m) {
  json out{{"beta_degree", m.beta_degree},
           {"source", index_json(m.source)},
           {"target", index_json(m.target)},
           {"degree_shift", m.source.k() - m.target.k()},
           {"source_betti", m.source_betti},
           {"target_betti", m.target_betti},
           {"ranks", m.ranks}};
  if (m.matrices) {
    json mats = json::array();
    for (const auto& mat : *m.matrices) mats.push_back(to_json(mat));
    out["matrices"] = std::move(mats);
  }
  return out;
}

}  // namespace pathhom
