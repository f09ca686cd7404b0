#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "pathhom/homology.hpp"

namespace pathhom {

using json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Throws InputError with the file name and
/// parser position on failure.
json read_json_file(const std::filesystem::path& file);

/// {"vertices": ["v0", ...], "edges": [["v0", "v1"], ...]}
Digraph digraph_from_json(const json& j);
json to_json(const Digraph& g);

/// Rational literals are "num" or "num/den"; integers are accepted in
/// every field.
Scalar scalar_from_json(const json& j, const Field& field);
json to_json(const Scalar& s);

/// {"degree": k, "terms": [{"monomial": ["v0", ...], "coeff": "3/2"}, ...]}
/// or the degree-1 shorthand {"degree": 1, "weights": {"v0": "1", ...}}.
/// Monomials may be unsorted; they are normalized with their sign folded in.
DiffElement diff_element_from_json(const json& j, const Digraph& g, const Field& field);
json to_json(const DiffElement& e, const Digraph& g);

json to_json(const PathChain& c, const Digraph& g);
/// {"rows": r, "cols": c, "entries": [[i, j, "num/den"], ...]} in row-major order.
json to_json(const Matrix& m);

json to_json(const HomologyResult& r, const Digraph& g);
json to_json(const InducedMap& m);

}  // namespace pathhom
