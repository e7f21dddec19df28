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
#include "realqm/superselection.hpp"

#include <algorithm>

#include "realqm/realmap.hpp"

namespace realqm {

RealOperator linear_part(const RealOperator &o) {
    const RealOperator j = j_operator(o.modes());
    return 0.5 * (o - j * o * j);
}

RealOperator antilinear_part(const RealOperator &o) {
    const RealOperator j = j_operator(o.modes());
    return 0.5 * (o + j * o * j);
}

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Physical:
        return "Physical";
    case Verdict::AntiLinear:
        return "AntiLinear";
    case Verdict::Extended:
        return "Extended";
    }
    return "Unknown";
}

AuditReport audit(const RealOperator &o, double rel_tol) {
    const RealOperator j = j_operator(o.modes());
    const RealOperator jo = j * o;
    const RealOperator ojj = o * j;

    AuditReport report;
    report.linear_residual = antilinear_part(o).norm();
    report.antilinear_residual = linear_part(o).norm();
    report.commutator_norm = distance(ojj, jo);
    report.threshold = rel_tol * std::max(o.norm(), 1.0);

    if (report.linear_residual <= report.threshold) {
        report.verdict = Verdict::Physical;
        report.complex_form = complexify_op(o);
    } else if (report.antilinear_residual <= report.threshold) {
        report.verdict = Verdict::AntiLinear;
    } else {
        report.verdict = Verdict::Extended;
    }
    return report;
}

std::vector<AuditReport> audit_all(std::span<const RealOperator> ops, double rel_tol) {
    std::vector<AuditReport> reports(ops.size());
    const auto count = static_cast<long>(ops.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < count; ++k) {
        reports[static_cast<std::size_t>(k)] = audit(ops[static_cast<std::size_t>(k)], rel_tol);
    }
    return reports;
}

RealOperator universal_not() {
    return RealOperator{
        {0.0, 0.0, 1.0, 0.0},
        {0.0, 0.0, 0.0, -1.0},
        {-1.0, 0.0, 0.0, 0.0},
        {0.0, 1.0, 0.0, 0.0},
    };
}

std::array<RealOperator, 4> commutant_basis() {
    const Complex i(0.0, 1.0);
    return {realify_op(i * pauli::identity()), realify_op(i * pauli::x()),
            realify_op(i * pauli::y()), realify_op(i * pauli::z())};
}

} // namespace realqm
