// Copyright 2026 The xkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "xkit/schema.h"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "xkit/error.h"

namespace xkit {

namespace {

[[noreturn]] void parse_fail(const std::string &path, const std::string &what) {
  throw Error(ErrorKind::ParseError, path + ": " + what);
}

const Json &field(const Json &doc, const std::string &name) {
  auto it = doc.find(name);
  if (it == doc.end()) {
    parse_fail(name, "missing field");
  }
  return *it;
}

size_t size_field(const Json &doc, const std::string &name) {
  const Json &v = field(doc, name);
  if (!v.is_number_unsigned() || v.get<size_t>() == 0) {
    parse_fail(name, "expected a positive integer");
  }
  return v.get<size_t>();
}

void check_header(const Json &doc, std::string_view kind) {
  if (!doc.is_object()) {
    parse_fail("$", "document must be a JSON object");
  }
  const Json &version = field(doc, "schema_version");
  if (!version.is_number_integer() || version.get<int>() != kSchemaVersion) {
    parse_fail("schema_version", "unsupported schema version (expected " + std::to_string(kSchemaVersion) + ")");
  }
  const Json &k = field(doc, "kind");
  if (!k.is_string()) {
    parse_fail("kind", "expected a string");
  }
  if (!kind.empty() && k.get<std::string>() != kind) {
    parse_fail("kind", "expected \"" + std::string(kind) + "\", got \"" + k.get<std::string>() + "\"");
  }
}

Json header(std::string_view kind) {
  Json doc = Json::object();
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = kind;
  return doc;
}

// Re-raises a validation failure with the field path of the offending item.
template <typename Fn>
auto validated(const std::string &list_field, Fn &&fn) {
  try {
    return fn();
  } catch (const Error &e) {
    if (e.kind() == ErrorKind::ParseError) {
      throw;
    }
    std::string path = e.index() ? list_field + "[" + std::to_string(*e.index()) + "]" : list_field;
    throw Error(ErrorKind::ValidationError, path + ": " + std::string(to_string(e.kind())) + ": " + e.what(),
                e.index());
  }
}

std::vector<ComplexMatrix> matrices(const Json &doc, const std::string &name, size_t dim) {
  const Json &list = field(doc, name);
  if (!list.is_array() || list.empty()) {
    parse_fail(name, "expected a nonempty array of matrices");
  }
  std::vector<ComplexMatrix> out;
  for (size_t i = 0; i < list.size(); ++i) {
    std::string path = name + "[" + std::to_string(i) + "]";
    ComplexMatrix m = matrix_from_json(list[i], path);
    if (static_cast<size_t>(m.rows()) != dim) {
      parse_fail(path, "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

Json matrix_to_json(const ComplexMatrix &m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json &j, const std::string &path) {
  if (!j.is_array() || j.empty()) {
    parse_fail(path, "expected a nonempty array of rows");
  }
  const size_t n = j.size();
  ComplexMatrix m(n, n);
  for (size_t r = 0; r < n; ++r) {
    const Json &row = j[r];
    std::string row_path = path + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != n) {
      parse_fail(row_path, "expected a row of " + std::to_string(n) + " entries (matrices are square)");
    }
    for (size_t c = 0; c < n; ++c) {
      const Json &z = row[c];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        parse_fail(row_path + "[" + std::to_string(c) + "]", "expected a [re, im] pair");
      }
      m(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  return m;
}

Json extended_to_json(ExtendedReal x) {
  if (x.is_infinite()) {
    return Json{{"inf", true}};
  }
  return Json{{"finite", x.value()}};
}

ExtendedReal extended_from_json(const Json &j, const std::string &path) {
  if (j.is_object()) {
    if (auto it = j.find("inf"); it != j.end() && *it == true) {
      return ExtendedReal::infinity();
    }
    if (auto it = j.find("finite"); it != j.end() && it->is_number()) {
      return ExtendedReal::finite(it->get<double>());
    }
  }
  parse_fail(path, "expected {\"finite\": x} or {\"inf\": true}");
}

Json to_document(const Povm &m) {
  Json doc = header("povm");
  doc["dim"] = m.dim();
  Json effects = Json::array();
  for (const auto &e : m.effects()) {
    effects.push_back(matrix_to_json(e.matrix()));
  }
  doc["effects"] = std::move(effects);
  return doc;
}

Json to_document(const Ensemble &e) {
  Json doc = header("ensemble");
  doc["dim"] = e.dim();
  doc["priors"] = e.priors();
  Json states = Json::array();
  for (const auto &s : e.states()) {
    states.push_back(matrix_to_json(s.matrix()));
  }
  doc["states"] = std::move(states);
  return doc;
}

Json to_document(const StochasticMap &q) {
  Json doc = header("stochastic_map");
  doc["rows"] = q.rows();
  doc["cols"] = q.cols();
  Json table = Json::array();
  for (size_t a = 0; a < q.rows(); ++a) {
    Json row = Json::array();
    for (size_t x = 0; x < q.cols(); ++x) {
      row.push_back(q(a, x));
    }
    table.push_back(std::move(row));
  }
  doc["table"] = std::move(table);
  return doc;
}

Povm povm_from_document(const Json &doc, const Tolerances &tol) {
  check_header(doc, "povm");
  size_t dim = size_field(doc, "dim");
  std::vector<ComplexMatrix> effects = matrices(doc, "effects", dim);
  return validated("effects", [&] { return validate_povm(effects, tol); });
}

Ensemble ensemble_from_document(const Json &doc, const Tolerances &tol) {
  check_header(doc, "ensemble");
  size_t dim = size_field(doc, "dim");
  std::vector<ComplexMatrix> raw = matrices(doc, "states", dim);
  const Json &priors_json = field(doc, "priors");
  if (!priors_json.is_array() || priors_json.size() != raw.size()) {
    parse_fail("priors", "expected one prior per state");
  }
  std::vector<double> priors;
  for (size_t x = 0; x < priors_json.size(); ++x) {
    if (!priors_json[x].is_number()) {
      parse_fail("priors[" + std::to_string(x) + "]", "expected a number");
    }
    priors.push_back(priors_json[x].get<double>());
  }
  std::vector<HermitianOperator> states;
  for (size_t x = 0; x < raw.size(); ++x) {
    states.push_back(validated("states[" + std::to_string(x) + "]",
                               [&] { return HermitianOperator::from_matrix(raw[x], tol.herm_tol); }));
  }
  return validated("states", [&] { return Ensemble::validate(std::move(states), std::move(priors), tol); });
}

StochasticMap stochastic_map_from_document(const Json &doc, const Tolerances &tol) {
  check_header(doc, "stochastic_map");
  size_t rows = size_field(doc, "rows");
  size_t cols = size_field(doc, "cols");
  const Json &table_json = field(doc, "table");
  if (!table_json.is_array() || table_json.size() != rows) {
    parse_fail("table", "expected " + std::to_string(rows) + " rows");
  }
  Eigen::MatrixXd table(rows, cols);
  for (size_t a = 0; a < rows; ++a) {
    const Json &row = table_json[a];
    if (!row.is_array() || row.size() != cols) {
      parse_fail("table[" + std::to_string(a) + "]", "expected " + std::to_string(cols) + " entries");
    }
    for (size_t x = 0; x < cols; ++x) {
      if (!row[x].is_number()) {
        parse_fail("table[" + std::to_string(a) + "][" + std::to_string(x) + "]", "expected a number");
      }
      table(a, x) = row[x].get<double>();
    }
  }
  return validated("table", [&] { return StochasticMap::validate(std::move(table), tol); });
}

Json Report::to_document() const {
  Json doc = header("report");
  doc["command"] = command;
  doc["inputs"] = inputs;
  doc["results"] = results;
  doc["diagnostics"] = diagnostics;
  return doc;
}

Report Report::from_document(const Json &doc) {
  check_header(doc, "report");
  const Json &command = field(doc, "command");
  if (!command.is_string()) {
    parse_fail("command", "expected a string");
  }
  Report r;
  r.command = command.get<std::string>();
  r.inputs = field(doc, "inputs");
  r.results = field(doc, "results");
  r.diagnostics = field(doc, "diagnostics");
  return r;
}

Json parse_document(std::string_view text, std::string_view expected_kind) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    parse_fail("$", "not valid JSON");
  }
  check_header(doc, expected_kind);
  return doc;
}

LoadedDocument load_document(const std::string &path, std::string_view expected_kind) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::ParseError, path + ": cannot open file");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  try {
    return {parse_document(text, expected_kind), sha256_hex(text)};
  } catch (const Error &e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::NumericalInstability, "sha256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

}  // namespace xkit
