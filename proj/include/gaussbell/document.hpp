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

#pragma once

// On-disk representation of covariance matrices and oracle step traces.
//
// Covariance-matrix documents are JSON objects:
//
//   {
//     "format": "gaussbell/covariance-matrix",
//     "version": 1,
//     "ordering": "q1,p1,...,qn,pn",
//     "vacuum": "identity",
//     "n_modes": 1,
//     "matrix": [[1.0, 0.0], [0.0, 1.0]],
//     "metadata": {"source": "vacuum"}
//   }
//
// Numbers are written in the shortest decimal form that parses back to the
// same double, so a write/read cycle is bit-exact.

#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "gaussbell/error.hpp"
#include "gaussbell/gaussian.hpp"
#include "gaussbell/oracle.hpp"

namespace gaussbell::io {

inline constexpr std::string_view kCmFormat = "gaussbell/covariance-matrix";
inline constexpr std::string_view kTraceFormat = "gaussbell/step-trace";
inline constexpr std::string_view kOrdering = "q1,p1,...,qn,pn";
inline constexpr int kFormatVersion = 1;

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A covariance matrix as stored on disk. The matrix is kept exactly as read
/// (not symmetrized) so that validation can report its symmetry defect.
struct CmDocument {
  std::size_t n_modes = 0;
  Mat matrix;
  std::map<std::string, std::string> metadata;

  static CmDocument from(const CovarianceMatrix& cm,
                         std::map<std::string, std::string> metadata = {});
  CovarianceMatrix cm() const { return CovarianceMatrix(matrix); }
};

std::string to_text(const CmDocument& doc);
/// Throws ParseError on malformed JSON, missing fields, inconsistent
/// dimensions or non-finite values.
CmDocument parse_document(std::string_view text);

CmDocument read_document(std::istream& in);
void write_document(std::ostream& out, const CmDocument& doc);

/// Writes the oracle trace together with the closed-form result it was
/// checked against.
std::string trace_to_text(const oracle::StepTrace& trace,
                          const CovarianceMatrix& closed_form,
                          double max_relative_deviation);

}  // namespace gaussbell::io
