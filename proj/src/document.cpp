// Copyright 2026 The gaussbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gaussbell/document.hpp"

#include <cmath>
#include <iterator>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace gaussbell::io {
namespace {

using nlohmann::json;

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(m(i, j));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const json& rows, std::size_t n_modes) {
  const auto dim = static_cast<Eigen::Index>(2 * n_modes);
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != dim) {
    throw ParseError("\"matrix\" must be an array of " + std::to_string(dim) +
                     " rows");
  }
  Mat m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
      throw ParseError("row " + std::to_string(i) + " of \"matrix\" must hold " +
                       std::to_string(dim) + " numbers");
    }
    for (Eigen::Index j = 0; j < dim; ++j) {
      const json& entry = row[static_cast<std::size_t>(j)];
      if (!entry.is_number()) {
        throw ParseError("matrix entry (" + std::to_string(i) + ", " +
                         std::to_string(j) + ") is not a number");
      }
      const double value = entry.get<double>();
      if (!std::isfinite(value)) {
        throw ParseError("matrix entry (" + std::to_string(i) + ", " +
                         std::to_string(j) + ") is not finite");
      }
      m(i, j) = value;
    }
  }
  return m;
}

}  // namespace

CmDocument CmDocument::from(const CovarianceMatrix& cm,
                            std::map<std::string, std::string> metadata) {
  return {cm.n_modes(), cm.matrix(), std::move(metadata)};
}

std::string to_text(const CmDocument& doc) {
  json j;
  j["format"] = kCmFormat;
  j["version"] = kFormatVersion;
  j["ordering"] = kOrdering;
  j["vacuum"] = "identity";
  j["n_modes"] = doc.n_modes;
  j["matrix"] = matrix_to_json(doc.matrix);
  j["metadata"] = doc.metadata;
  return j.dump(2) + "\n";
}

CmDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw ParseError("covariance-matrix document must be a JSON object");
  }
  if (j.contains("format") && j["format"] != kCmFormat) {
    throw ParseError("unexpected document format " + j["format"].dump());
  }
  if (j.contains("version") && j["version"] != kFormatVersion) {
    throw ParseError("unsupported document version " + j["version"].dump());
  }
  if (j.contains("ordering") && j["ordering"] != kOrdering) {
    throw ParseError("unsupported quadrature ordering " + j["ordering"].dump());
  }
  if (!j.contains("n_modes") || !j["n_modes"].is_number_unsigned() ||
      j["n_modes"].get<std::size_t>() == 0) {
    throw ParseError("\"n_modes\" must be a positive integer");
  }
  if (!j.contains("matrix")) {
    throw ParseError("missing \"matrix\"");
  }

  CmDocument doc;
  doc.n_modes = j["n_modes"].get<std::size_t>();
  doc.matrix = matrix_from_json(j["matrix"], doc.n_modes);
  if (j.contains("metadata")) {
    const json& meta = j["metadata"];
    if (!meta.is_object()) {
      throw ParseError("\"metadata\" must be an object of strings");
    }
    for (const auto& [key, value] : meta.items()) {
      if (!value.is_string()) {
        throw ParseError("metadata value for \"" + key + "\" is not a string");
      }
      doc.metadata.emplace(key, value.get<std::string>());
    }
  }
  return doc;
}

CmDocument read_document(std::istream& in) {
  const std::string text(std::istreambuf_iterator<char>(in), {});
  return parse_document(text);
}

void write_document(std::ostream& out, const CmDocument& doc) {
  out << to_text(doc);
}

std::string trace_to_text(const oracle::StepTrace& trace,
                          const CovarianceMatrix& closed_form,
                          double max_relative_deviation) {
  json j;
  j["format"] = kTraceFormat;
  j["version"] = kFormatVersion;
  j["ordering"] = kOrdering;
  json steps = json::array();
  for (const oracle::TraceStep& step : trace.steps) {
    steps.push_back({{"label", step.label},
                     {"n_modes", step.cm.n_modes()},
                     {"matrix", matrix_to_json(step.cm.matrix())}});
  }
  j["steps"] = std::move(steps);
  j["closed_form"] = {{"n_modes", closed_form.n_modes()},
                      {"matrix", matrix_to_json(closed_form.matrix())}};
  j["max_relative_deviation"] = max_relative_deviation;
  return j.dump(2) + "\n";
}

}  // namespace gaussbell::io
