#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "drury/linalg.hpp"
#include "drury/subspace.hpp"
#include "drury/tuples.hpp"

namespace drury {

using Json = nlohmann::json;

/// Entries are [re, im] pairs; matrices are arrays of rows.
Json complex_to_json(Complex c);
Complex complex_from_json(const Json& j, const std::string& where);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const std::string& where);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j, const std::string& where = "vector");

/// {"d": d, "dim": n, "matrices": [...]}.
Json tuple_to_json(const RowTuple& t);
RowTuple tuple_from_json(const Json& j);

/// {"ambient_dim": n, "frame": rows}; a bare array of rows is accepted on
/// input, its columns spanning the subspace.
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

std::string read_text_file(const std::string& path);
Json parse_json(std::string_view text, const std::string& source);

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_digest(std::string_view data);

}  // namespace drury
