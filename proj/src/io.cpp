// Copyright 2026 The mginv Authors
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

#include "mginv/io.hpp"

#include <cmath>
#include <fstream>

#include "mginv/errors.hpp"

namespace mginv::io {

namespace {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw FormatError(where + ": expected [re, im]");
  }
  const double re = v[0].get<double>();
  const double im = v[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) throw FormatError(where + ": non-finite value");
  return {re, im};
}

Index positive_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    throw FormatError(where + ": expected a positive integer");
  }
  return static_cast<Index>(v.get<long long>());
}

const Json& member(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw FormatError(std::string("missing field \"") + key + "\"");
  }
  return doc.at(key);
}

const Json& sized_array(const Json& v, Index n, const std::string& where) {
  if (!v.is_array() || static_cast<Index>(v.size()) != n) {
    throw FormatError(where + ": expected an array of length " + std::to_string(n));
  }
  return v;
}

Json rows_to_json(const Matrix& a) {
  Json rows = Json::array();
  for (Index i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < a.cols(); ++j) row.push_back(complex_to_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix rows_from_json(const Json& v, Index rows, Index cols, const std::string& where) {
  sized_array(v, rows, where);
  Matrix out(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const std::string row_where = where + "[" + std::to_string(i) + "]";
    const Json& row = sized_array(v[i], cols, row_where);
    for (Index j = 0; j < cols; ++j) {
      out(i, j) = complex_from_json(row[j], row_where + "[" + std::to_string(j) + "]");
    }
  }
  return out;
}

}  // namespace

Json tensor_to_json(const Tensor3& t, const std::optional<std::string>& name) {
  Json doc;
  doc["dims"] = {t.rows(), t.cols(), t.tubes()};
  Json data = Json::array();
  for (const Matrix& s : t.slices()) data.push_back(rows_to_json(s));
  doc["data"] = std::move(data);
  if (name) doc["name"] = *name;
  return doc;
}

Tensor3 tensor_from_json(const Json& doc) {
  const Json& dims = sized_array(member(doc, "dims"), 3, "dims");
  const Index rows = positive_int(dims[0], "dims[0]");
  const Index cols = positive_int(dims[1], "dims[1]");
  const Index tubes = positive_int(dims[2], "dims[2]");
  const Json& data = sized_array(member(doc, "data"), tubes, "data");
  std::vector<Matrix> slices;
  slices.reserve(static_cast<std::size_t>(tubes));
  for (Index k = 0; k < tubes; ++k) {
    slices.push_back(rows_from_json(data[k], rows, cols, "data[" + std::to_string(k) + "]"));
  }
  if (doc.contains("name") && !doc["name"].is_string()) {
    throw FormatError("name: expected a string");
  }
  return Tensor3::from_slices(std::move(slices));
}

Json matrix_to_json(const Matrix& a) {
  Json doc;
  doc["rows"] = a.rows();
  doc["cols"] = a.cols();
  doc["data"] = rows_to_json(a);
  return doc;
}

Matrix matrix_from_json(const Json& doc) {
  const Index rows = positive_int(member(doc, "rows"), "rows");
  const Index cols = positive_int(member(doc, "cols"), "cols");
  return rows_from_json(member(doc, "data"), rows, cols, "data");
}

Json report_to_json(const ResidualReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries()) {
    entries.push_back({{"label", e.label}, {"residual", e.residual}});
  }
  return {{"entries", std::move(entries)}, {"tol", report.tol()}, {"pass", report.pass()}};
}

Json law_outcome_to_json(const LawOutcome& outcome) {
  return {{"hypotheses", report_to_json(outcome.hypotheses)},
          {"conclusion", report_to_json(outcome.conclusion)},
          {"applicable", outcome.applicable},
          {"note", outcome.note}};
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << doc.dump(1) << '\n';
  if (!out) throw FormatError("write failed for " + path.string());
}

Tensor3 read_tensor_file(const std::filesystem::path& path) {
  const Json doc = read_json(path);
  try {
    return tensor_from_json(doc);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  const Json doc = read_json(path);
  try {
    return matrix_from_json(doc);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_tensor_file(const std::filesystem::path& path, const Tensor3& t,
                       const std::optional<std::string>& name) {
  write_json(path, tensor_to_json(t, name));
}

}  // namespace mginv::io
