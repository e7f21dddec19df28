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
#pragma once

#include <Eigen/Dense>

namespace realqm::linalg {

/// exp(A) by scaling and squaring with a degree-13 Pade approximant.
Eigen::MatrixXd expm(const Eigen::MatrixXd &a);

/// Kronecker product a (x) b, first factor major.
Eigen::MatrixXd kron(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b);
Eigen::VectorXd kron(const Eigen::VectorXd &a, const Eigen::VectorXd &b);

/// Largest singular value (the operator 2-norm).
double operator_norm(const Eigen::MatrixXd &a);

inline Eigen::MatrixXd commutator(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b) {
    return a * b - b * a;
}

} // namespace realqm::linalg
