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
 * Finite-dimensional spaces with an indefinite (diagonal +-1) metric.
 *
 * Two models live here:
 *
 *  - the indefinite qubit, <0|0> = 1 = -<1|1>, and a pair of them restricted
 *    by (s+ (x) s- + s- (x) s+)|psi> = 0, whose solutions span |00>, |11>
 *    where the product metric is positive;
 *
 *  - a truncated two-mode Fock space for a single wave vector
 *    k = (omega, 0, 0, omega): a longitudinal mode (index 3, positive
 *    metric) and a scalar mode (index 0, metric (-1)^n). Creation operators
 *    are metric adjoints X^+ = G X^T G of the standard annihilators, which
 *    gives [a0, a0^+] = -1 without inserting any sign by hand. Physical
 *    states satisfy (a3 - a0)|psi> = 0 and ghost emission applies
 *    1 + lambda (a3^+ - a0^+).
 *
 * Truncation at cutoff N breaks the ladder identities at occupation N - 1,
 * so they are asserted only on states whose longitudinal and scalar
 * occupations are at most N - 2 (the guarded subspace).
 */
#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "realqm/types.hpp"

namespace realqm {

class IndefiniteSpace {
  public:
    /// Throws ValidationError unless every entry is +1 or -1 and the
    /// signature is non-empty; labels, when given, must match in length.
    explicit IndefiniteSpace(std::vector<int> signature, std::vector<std::string> labels = {});

    [[nodiscard]] Index dim() const { return static_cast<Index>(signature_.size()); }
    [[nodiscard]] const std::vector<int> &signature() const { return signature_; }
    [[nodiscard]] const std::vector<std::string> &labels() const { return labels_; }
    [[nodiscard]] const Eigen::VectorXd &metric_diagonal() const { return diagonal_; }
    [[nodiscard]] Eigen::MatrixXd metric() const;

  private:
    std::vector<int> signature_;
    std::vector<std::string> labels_;
    Eigen::VectorXd diagonal_;
};

/// v^T G w.
double eta_inner(const Eigen::VectorXd &v, const Eigen::VectorXd &w, const IndefiniteSpace &space);
/// v^dagger G w.
Complex eta_inner(const ComplexVector &v, const ComplexVector &w, const IndefiniteSpace &space);

/// Signature (+1, -1).
IndefiniteSpace indefinite_qubit();
/// Product metric of two indefinite qubits on |00>, |01>, |10>, |11>.
IndefiniteSpace indefinite_qubit_pair();

/// (cosh x, sinh x): unit eta-norm for every x.
Eigen::Vector2d boost_normalize(double x);
/// (c, s) -> (s, c), eta-orthogonal to (c, s).
Eigen::Vector2d orthogonal_partner(const Eigen::Vector2d &v);

/// s+ (x) s- + s- (x) s+ with s+ = |1><0|. Swaps |01> and |10>, kills |00>
/// and |11>.
Eigen::Matrix4d pair_constraint_operator();

/// ||(s+ (x) s- + s- (x) s+) v||. Throws DimensionError unless v has 4
/// components.
double pair_constraint_residual(const Eigen::VectorXd &v);

struct PairPhysicalSubspace {
    /// Orthonormal columns spanning the constraint kernel.
    Eigen::MatrixXd basis;
    /// Eigenvalues of basis^T G basis, ascending.
    Eigen::VectorXd restricted_metric_eigenvalues;

    [[nodiscard]] Index dim() const { return basis.cols(); }
};

/// Kernel of the pair constraint (numerically, via SVD) and the metric
/// restricted to it.
PairPhysicalSubspace pair_physical_subspace(double tol = tolerance::kFrobenius);

class FockToy {
  public:
    /// Throws ValidationError unless cutoff >= 4 and transverse_cutoff >= 1.
    /// The transverse mode is a positive-metric spectator with no ladder
    /// operators; transverse_cutoff = 1 leaves it in its vacuum.
    explicit FockToy(int cutoff, int transverse_cutoff = 1);

    [[nodiscard]] int cutoff() const { return cutoff_; }
    [[nodiscard]] int transverse_cutoff() const { return transverse_cutoff_; }
    /// Largest longitudinal or scalar occupation on which identities hold.
    [[nodiscard]] int guard() const { return cutoff_ - 2; }
    [[nodiscard]] Index dim() const { return space_.dim(); }
    [[nodiscard]] const IndefiniteSpace &space() const { return space_; }

    [[nodiscard]] const Eigen::MatrixXd &a3() const { return a3_; }
    [[nodiscard]] const Eigen::MatrixXd &a0() const { return a0_; }
    [[nodiscard]] const Eigen::MatrixXd &a3_dag() const { return a3_dag_; }
    [[nodiscard]] const Eigen::MatrixXd &a0_dag() const { return a0_dag_; }

    /// a3 - a0.
    [[nodiscard]] Eigen::MatrixXd constraint() const { return a3_ - a0_; }
    /// a3^+ - a0^+.
    [[nodiscard]] Eigen::MatrixXd emission() const { return a3_dag_ - a0_dag_; }

    /// G X^T G.
    [[nodiscard]] Eigen::MatrixXd metric_adjoint(const Eigen::MatrixXd &x) const;

    [[nodiscard]] Index index(int n3, int n0, int nt = 0) const;
    [[nodiscard]] Eigen::VectorXd basis_state(int n3, int n0, int nt = 0) const;
    [[nodiscard]] Eigen::VectorXd vacuum() const { return basis_state(0, 0); }

    /// Diagonal projector onto occupations n3, n0 <= guard().
    [[nodiscard]] Eigen::MatrixXd guarded_projector() const;
    /// True when every non-zero component of @p psi lies in the guarded
    /// subspace.
    [[nodiscard]] bool within_guard(const Eigen::VectorXd &psi) const;

  private:
    int cutoff_;
    int transverse_cutoff_;
    IndefiniteSpace space_;
    Eigen::MatrixXd a3_;
    Eigen::MatrixXd a0_;
    Eigen::MatrixXd a3_dag_;
    Eigen::MatrixXd a0_dag_;
};

FockToy build_fock_toy(int cutoff, int transverse_cutoff = 1);

/// ||(a3 - a0) psi||. Throws GuardError when psi reaches the cutoff region,
/// DimensionError on size mismatch.
double gb_constraint_residual(const FockToy &toy, const Eigen::VectorXd &psi);

/// (1 + lambda (a3^+ - a0^+)) psi. Requires a physical psi (constraint
/// residual <= tol max(1, ||psi||)) inside the guard.
Eigen::VectorXd ghost_emit(const FockToy &toy, const Eigen::VectorXd &psi, double lambda,
                           double tol = tolerance::kFrobenius);

/// (a3^+ - a0^+)|0, 0>: the zero-norm ghost pair |1,0> + |0,1>.
Eigen::VectorXd ghost_pair(const FockToy &toy);

/// |<psi'|psi1> - <psi|psi1>| with psi' obtained from psi by @p emissions
/// successive ghost emissions of strength lambda. Both states must be
/// physical and inside the guard.
double overlap_invariance_check(const FockToy &toy, const Eigen::VectorXd &psi,
                                const Eigen::VectorXd &psi1, double lambda, int emissions = 1);

} // namespace realqm
