// Copyright 2026 The realqm Authors
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
/**
 * @file
 * JSON file formats for matrices and vectors.
 *
 *   complex matrix:  {"dim": n, "entries": [[re, im], ...]}   (n*n, row-major)
 *   real matrix:     [[x00, x01, ...], [x10, ...], ...]
 *   real vector:     [x0, x1, ...]
 */
#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "realqm/error.hpp"
#include "realqm/types.hpp"

namespace realqm::io {

/// Malformed matrix document. `where()` is a byte offset for syntax errors
/// or a JSON path such as "entries[3][1]" for structural ones.
class ParseError : public Error {
  public:
    ParseError(const std::string &message, std::string where);
    [[nodiscard]] const std::string &where() const { return where_; }

  private:
    std::string where_;
};

nlohmann::json to_json(const ComplexMatrix &m);
nlohmann::json to_json(const RealOperator &o);
nlohmann::json to_json(const RealState &r);

ComplexMatrix complex_matrix_from_json(const nlohmann::json &doc);
/// Accepts any square real matrix; the caller decides whether it must be a
/// RealOperator (even dimension).
Eigen::MatrixXd real_matrix_from_json(const nlohmann::json &doc);

/// Either format, detected from the top-level JSON type.
using AnyMatrix = std::variant<ComplexMatrix, Eigen::MatrixXd>;
AnyMatrix parse_matrix(std::string_view text);

/// Serialized form used for fixtures: two-space indent, trailing newline.
std::string dump(const nlohmann::json &doc);

} // namespace realqm::io
