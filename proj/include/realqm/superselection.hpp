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
 * The superselection constraint on the real representation.
 *
 * Every real operator O on R^{2n} splits uniquely as
 *
 *     O = L + A,   L = (O - J O J) / 2,   A = (O + J O J) / 2,
 *
 * where L commutes with J (a complex-linear map, i.e. the realification of
 * some complex matrix) and A anticommutes with J (complex anti-linear).
 * Ordinary quantum mechanics is recovered by admitting only operators with
 * A = 0.
 */
#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "realqm/types.hpp"

namespace realqm {

/// Projection of @p o onto the commutant of J. Throws DimensionError on odd
/// dimension (enforced by RealOperator).
RealOperator linear_part(const RealOperator &o);

/// Projection of @p o onto the operators that anticommute with J.
RealOperator antilinear_part(const RealOperator &o);

enum class Verdict { Physical, AntiLinear, Extended };

std::string_view to_string(Verdict v);

struct AuditReport {
    /// ||antilinear_part(O)||_F: distance of O from the complex-linear maps.
    double linear_residual = 0.0;
    /// ||linear_part(O)||_F: distance of O from the anti-linear maps.
    double antilinear_residual = 0.0;
    /// ||O J - J O||_F.
    double commutator_norm = 0.0;
    /// Absolute threshold the residuals were compared against.
    double threshold = 0.0;
    Verdict verdict = Verdict::Extended;
    /// The complex matrix C with realify_op(C) = O; set iff Physical.
    std::optional<ComplexMatrix> complex_form;
};

/// Classifies @p o. The residuals are compared against
/// rel_tol * max(||O||_F, 1); Physical takes precedence when both vanish.
AuditReport audit(const RealOperator &o, double rel_tol = tolerance::kAuditRelative);

/// Audits every operator of @p ops, in parallel when OpenMP is enabled.
/// Output order matches input order.
std::vector<AuditReport> audit_all(std::span<const RealOperator> ops,
                                   double rel_tol = tolerance::kAuditRelative);

/// The universal NOT on one qubit: a|0> + b|1> -> b*|0> - a*|1>, i.e.
/// (a_r, a_i, b_r, b_i) -> (b_r, -b_i, -a_r, a_i). Anti-linear, so it is a
/// legitimate real 4x4 matrix that fails the audit.
RealOperator universal_not();

/// Real forms of i I, i sigma_x, i sigma_y, i sigma_z, in that order. They
/// span the J-commuting skew-symmetric operators on one real-encoded qubit.
std::array<RealOperator, 4> commutant_basis();

} // namespace realqm
