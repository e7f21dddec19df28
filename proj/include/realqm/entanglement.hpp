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
 * One real-encoded qubit read as a state of two real qubits.
 *
 * The encoding (a_r, a_i, b_r, b_i) equals
 *
 *     (a_r, a_i) (x) |0> + (b_r, b_i) (x) |1>,
 *
 * i.e. a "pair" qubit (real vs. imaginary part) tensored with an "amplitude"
 * qubit (which complex amplitude). Tracing out the amplitude qubit leaves
 *
 *     rho_1 = [[a_r^2 + b_r^2,      a_r a_i + b_r b_i],
 *              [a_r a_i + b_r b_i,  a_i^2 + b_i^2    ]]
 *
 * with det(rho_1) = (a_r b_i - a_i b_r)^2 = Im(a* b)^2. Multiplication by i
 * acts only on the pair qubit, as J (x) I.
 */
#pragma once

#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "realqm/types.hpp"

namespace realqm {

struct ConditionalDecomposition {
    double weight_a = 0.0;
    /// (a_r, a_i) / |a|; zero when !defined_a.
    Eigen::Vector2d unit_a = Eigen::Vector2d::Zero();
    double weight_b = 0.0;
    Eigen::Vector2d unit_b = Eigen::Vector2d::Zero();
    bool defined_a = false;
    bool defined_b = false;

    /// weight_a unit_a (+) weight_b unit_b.
    [[nodiscard]] RealState reconstruct() const;
};

/// Splits a normalized one-qubit encoding into amplitude weights and the
/// conditional pair-qubit states. A weight below 1e-15 leaves its unit
/// vector undefined. Throws DimensionError unless dim2 == 4 and
/// ValidationError unless normalized.
ConditionalDecomposition conditional_decomposition(const RealState &r);

/// Reduced state of the pair qubit (amplitude qubit traced out).
Eigen::Matrix2d reduced_density_first(const RealState &r);

enum class EntanglementClass { Product, Partial, Maximal };

std::string_view to_string(EntanglementClass c);

struct EntanglementReport {
    Eigen::Matrix2d rho1 = Eigen::Matrix2d::Zero();
    /// det(rho_1) from the matrix, clamped to [0, 1/4].
    double det_rho1 = 0.0;
    /// (a_r b_i - a_i b_r)^2.
    double det_closed_form = 0.0;
    /// Eigenvalues of rho_1, r1 >= r2, r1 + r2 = 1.
    double r1 = 1.0;
    double r2 = 0.0;
    double entropy_nats = 0.0;
    EntanglementClass cls = EntanglementClass::Product;

    [[nodiscard]] double entropy_bits() const;
};

/// Entropy of entanglement -r1 ln r1 - r2 ln r2 with
/// r1 = (1 + sqrt(1 - 4 det rho_1)) / 2. The class uses @p tol as in
/// classify_entanglement.
EntanglementReport entanglement_entropy(const RealState &r,
                                        double tol = tolerance::kClassification);

/// Maximal iff |det rho_1 - 1/4| <= tol, Product iff det rho_1 <= tol,
/// Partial otherwise.
EntanglementClass classify_entanglement(const RealState &r,
                                        double tol = tolerance::kClassification);

/// a_r = b_i and a_i = -b_r (with normalization this forces det = 1/4).
/// A sufficient, not necessary, condition for maximal entanglement.
bool maximal_witness(const RealState &r, double tol = tolerance::kClassification);

/// a = 0, b = 0, or (a_r = b_r and a_i = b_i). Sufficient for a product
/// state.
bool product_witness(const RealState &r, double tol = tolerance::kClassification);

/// realify_state(psi) (x) realify_state(phi): each qubit encoded on its own,
/// 16 reals. Unlike the global encoding realify_state(psi (x) phi), this
/// distinguishes i psi (x) phi from psi (x) i phi. Both inputs must be
/// normalized one-qubit states.
RealState encode_local(const ComplexVector &psi, const ComplexVector &phi);

/// Complex Kronecker product psi (x) phi, first factor major.
ComplexVector kron(const ComplexVector &psi, const ComplexVector &phi);

struct CouplingCheck {
    /// ||[exp(theta X), realify(UA) (x) realify(UB)]||_F, X = J (x) J.
    double commutator_residual = 0.0;
    /// ||exp(theta X) - (cosh theta I + sinh theta X)||_F. X is symmetric with
    /// X^2 = +I, so the series sums to hyperbolic, not circular, functions.
    double closed_form_deviation = 0.0;
    /// ||X^2 - I||_F.
    double square_deviation = 0.0;
};

/// Checks that the coupling exp(theta J (x) J) between two real-encoded
/// qubits commutes with every pair of local physical unitaries. Throws
/// ValidationError unless UA and UB are 2x2 unitaries.
CouplingCheck coupling_commutation_check(double theta, const ComplexMatrix &ua,
                                         const ComplexMatrix &ub);

/// cos(beta) |0> + e^{i alpha} sin(beta) |1>.
ComplexVector scan_state(double alpha, double beta);

struct EntropyScanRecord {
    double alpha = 0.0;
    double beta = 0.0;
    double det_rho1 = 0.0;
    double entropy_nats = 0.0;
    EntanglementClass cls = EntanglementClass::Product;
};

/// Entanglement report over the alpha x beta grid of scan_state, alpha
/// major. Parallel when OpenMP is enabled; output order is deterministic.
std::vector<EntropyScanRecord> entropy_scan(std::span<const double> alphas,
                                            std::span<const double> betas);

} // namespace realqm
