#include "drury/io.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace drury {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::invalid_argument(where + ": " + what);
}

}  // namespace

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j, const std::string& where) {
  if (j.is_number()) {
    return {j.get<double>(), 0.0};
  }
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    fail(where, "expected [re, im]");
  }
  const Complex c(j[0].get<double>(), j[1].get<double>());
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
    fail(where, "entries must be finite");
  }
  return c;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      row.push_back(complex_to_json(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) {
    fail(where, "expected an array of rows");
  }
  const Index rows = static_cast<Index>(j.size());
  if (rows == 0) {
    return Matrix(0, 0);
  }
  if (!j[0].is_array()) {
    fail(where + "[0]", "expected a row array");
  }
  const Index cols = static_cast<Index>(j[0].size());
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const std::string rw = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || static_cast<Index>(j[r].size()) != cols) {
      fail(rw, "expected a row of length " + std::to_string(cols));
    }
    for (Index c = 0; c < cols; ++c) {
      m(r, c) = complex_from_json(j[r][c], rw + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

Json vector_to_json(const Vector& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) {
    a.push_back(complex_to_json(v(i)));
  }
  return a;
}

Vector vector_from_json(const Json& j, const std::string& where) {
  const Json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("vector")) {
      fail(where, "missing field 'vector'");
    }
    arr = &j.at("vector");
  }
  if (!arr->is_array()) {
    fail(where, "expected an array of [re, im] entries");
  }
  Vector v(static_cast<Index>(arr->size()));
  for (Index i = 0; i < v.size(); ++i) {
    v(i) = complex_from_json((*arr)[i], where + "[" + std::to_string(i) + "]");
  }
  return v;
}

Json tuple_to_json(const RowTuple& t) {
  Json mats = Json::array();
  for (const auto& m : t.matrices()) {
    mats.push_back(matrix_to_json(m));
  }
  return Json{{"d", t.size()}, {"dim", t.dim()}, {"matrices", mats}};
}

RowTuple tuple_from_json(const Json& j) {
  if (!j.is_object()) {
    fail("tuple", "expected a JSON object");
  }
  for (const char* key : {"d", "dim", "matrices"}) {
    if (!j.contains(key)) {
      fail("tuple", std::string("missing field '") + key + "'");
    }
  }
  if (!j["d"].is_number_integer() || j["d"].get<long>() < 1) {
    fail("d", "expected a positive integer");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<long>() < 1) {
    fail("dim", "expected a positive integer");
  }
  const long d = j["d"].get<long>();
  const Index dim = j["dim"].get<Index>();
  const Json& mats = j["matrices"];
  if (!mats.is_array() || static_cast<long>(mats.size()) != d) {
    fail("matrices", "expected " + std::to_string(d) + " matrices");
  }
  std::vector<Matrix> out;
  for (long k = 0; k < d; ++k) {
    const std::string where = "matrices[" + std::to_string(k) + "]";
    Matrix m = matrix_from_json(mats[k], where);
    if (m.rows() != dim || m.cols() != dim) {
      fail(where, "expected a " + std::to_string(dim) + "x" +
                      std::to_string(dim) + " matrix");
    }
    out.push_back(std::move(m));
  }
  return RowTuple(std::move(out));
}

Json subspace_to_json(const Subspace& s) {
  Json frame = Json::array();
  for (Index i = 0; i < s.ambient_dim(); ++i) {
    Json row = Json::array();
    for (Index c = 0; c < s.dimension(); ++c) {
      row.push_back(complex_to_json(s.frame()(i, c)));
    }
    frame.push_back(std::move(row));
  }
  return Json{{"ambient_dim", s.ambient_dim()},
              {"dimension", s.dimension()},
              {"frame", frame}};
}

Subspace subspace_from_json(const Json& j) {
  if (j.is_array()) {
    const Matrix m = matrix_from_json(j, "subspace");
    return Subspace(m.rows(), m);
  }
  if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("frame")) {
    fail("subspace", "expected {\"ambient_dim\", \"frame\"} or an array of rows");
  }
  const Index n = j["ambient_dim"].get<Index>();
  const Json& f = j["frame"];
  if (!f.is_array() || static_cast<Index>(f.size()) != n) {
    fail("frame", "expected " + std::to_string(n) + " rows");
  }
  Matrix m(n, 0);
  if (n > 0 && !f[0].empty()) {
    m = matrix_from_json(f, "frame");
  }
  return Subspace(n, m);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument(path + ": cannot open file");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(source + ": malformed JSON (" +
                                std::string(e.what()) + ")");
  }
}

std::string fnv1a_digest(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace drury
