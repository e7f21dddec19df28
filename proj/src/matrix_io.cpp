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
#include "realqm/matrix_io.hpp"

#include <string>

namespace realqm::io {

using nlohmann::json;

namespace {

double number_at(const json &node, const std::string &path) {
    if (!node.is_number()) {
        throw ParseError("expected a number", path);
    }
    return node.get<double>();
}

} // namespace

ParseError::ParseError(const std::string &message, std::string where)
    : Error(message + " at " + where), where_(std::move(where)) {}

json to_json(const ComplexMatrix &m) {
    json entries = json::array();
    for (Index p = 0; p < m.dim(); ++p) {
        for (Index q = 0; q < m.dim(); ++q) {
            entries.push_back(json::array({m(p, q).real(), m(p, q).imag()}));
        }
    }
    return json{{"dim", m.dim()}, {"entries", std::move(entries)}};
}

json to_json(const RealOperator &o) {
    json rows = json::array();
    for (Index p = 0; p < o.dim2(); ++p) {
        json row = json::array();
        for (Index q = 0; q < o.dim2(); ++q) {
            row.push_back(o(p, q));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const RealState &r) {
    json out = json::array();
    for (Index k = 0; k < r.dim2(); ++k) {
        out.push_back(r[k]);
    }
    return out;
}

ComplexMatrix complex_matrix_from_json(const json &doc) {
    if (!doc.is_object()) {
        throw ParseError("expected an object with \"dim\" and \"entries\"", "$");
    }
    if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long>() <= 0) {
        throw ParseError("\"dim\" must be a positive integer", "dim");
    }
    const auto n = doc["dim"].get<Index>();
    if (!doc.contains("entries") || !doc["entries"].is_array()) {
        throw ParseError("\"entries\" must be an array", "entries");
    }
    const json &entries = doc["entries"];
    if (static_cast<Index>(entries.size()) != n * n) {
        throw ParseError("expected " + std::to_string(n * n) + " entries, found " +
                             std::to_string(entries.size()),
                         "entries");
    }
    Eigen::MatrixXcd m(n, n);
    for (Index k = 0; k < n * n; ++k) {
        const std::string path = "entries[" + std::to_string(k) + "]";
        const json &pair = entries[static_cast<std::size_t>(k)];
        if (!pair.is_array() || pair.size() != 2) {
            throw ParseError("expected a [re, im] pair", path);
        }
        m(k / n, k % n) = Complex(number_at(pair[0], path + "[0]"), number_at(pair[1], path + "[1]"));
    }
    return ComplexMatrix(std::move(m));
}

Eigen::MatrixXd real_matrix_from_json(const json &doc) {
    if (!doc.is_array() || doc.empty()) {
        throw ParseError("expected a non-empty array of rows", "$");
    }
    const std::size_t n = doc.size();
    Eigen::MatrixXd m(static_cast<Index>(n), static_cast<Index>(n));
    for (std::size_t p = 0; p < n; ++p) {
        const std::string path = "[" + std::to_string(p) + "]";
        const json &row = doc[p];
        if (!row.is_array() || row.size() != n) {
            throw ParseError("expected a row of " + std::to_string(n) + " numbers", path);
        }
        for (std::size_t q = 0; q < n; ++q) {
            m(static_cast<Index>(p), static_cast<Index>(q)) =
                number_at(row[q], path + "[" + std::to_string(q) + "]");
        }
    }
    return m;
}

AnyMatrix parse_matrix(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError("invalid JSON", "byte " + std::to_string(e.byte));
    }
    if (doc.is_object()) {
        return complex_matrix_from_json(doc);
    }
    return real_matrix_from_json(doc);
}

std::string dump(const json &doc) { return doc.dump(2) + "\n"; }

} // namespace realqm::io
