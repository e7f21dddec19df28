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
 * Value types shared by every module: complex vectors and matrices (used for
 * inputs and oracles) and their real counterparts.
 *
 * All types are immutable after construction and hold their data in Eigen
 * containers. A complex number is stored as a (re, im) pair of doubles, which
 * is exactly the layout of std::complex<double>.
 */
#pragma once

#include <complex>
#include <initializer_list>

#include <Eigen/Dense>

namespace realqm {

using Complex = std::complex<double>;
using Index = Eigen::Index;

namespace tolerance {
/// Absolute bound on Frobenius-norm residuals.
inline constexpr double kFrobenius = 1e-12;
/// Relative bound used by the superselection audit (scaled by ||O||_F).
inline constexpr double kAuditRelative = 1e-9;
/// Bound on | ||v|| - 1 | for inputs that must be normalized.
inline constexpr double kNormalized = 1e-9;
/// Bound on det(rho_1) used for the entanglement classes.
inline constexpr double kClassification = 1e-9;
/// Bound on ||H - H^dagger||_F for Hermitian inputs.
inline constexpr double kHermitian = 1e-12;
/// Bound on ||U^dagger U - I||_F for unitary inputs.
inline constexpr double kUnitary = 1e-12;
} // namespace tolerance

class ComplexVector {
  public:
    /// Throws DimensionError when @p values is empty.
    explicit ComplexVector(Eigen::VectorXcd values);
    ComplexVector(std::initializer_list<Complex> values);

    static ComplexVector basis(Index dim, Index k);

    [[nodiscard]] Index dim() const { return values_.size(); }
    [[nodiscard]] Complex operator[](Index k) const { return values_(k); }
    [[nodiscard]] const Eigen::VectorXcd &values() const { return values_; }

    [[nodiscard]] double norm() const { return values_.norm(); }
    [[nodiscard]] bool is_normalized(double tol = tolerance::kNormalized) const;

    [[nodiscard]] ComplexVector scaled(Complex z) const;

  private:
    Eigen::VectorXcd values_;
};

class ComplexMatrix {
  public:
    /// Throws DimensionError unless @p values is square and non-empty.
    explicit ComplexMatrix(Eigen::MatrixXcd values);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(Index dim);

    [[nodiscard]] Index dim() const { return values_.rows(); }
    [[nodiscard]] Complex operator()(Index p, Index q) const { return values_(p, q); }
    [[nodiscard]] const Eigen::MatrixXcd &values() const { return values_; }

    [[nodiscard]] bool is_hermitian(double tol = tolerance::kHermitian) const;
    [[nodiscard]] bool is_unitary(double tol = tolerance::kUnitary) const;

    [[nodiscard]] ComplexMatrix adjoint() const;

    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexVector operator*(const ComplexMatrix &a, const ComplexVector &v);
    friend ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator*(Complex z, const ComplexMatrix &a);

  private:
    Eigen::MatrixXcd values_;
};

/// Real encoding of an n-dimensional complex vector, interleaved as
/// (Re c0, Im c0, Re c1, Im c1, ...).
class RealState {
  public:
    /// Throws DimensionError unless the length is even and non-zero.
    explicit RealState(Eigen::VectorXd values);
    RealState(std::initializer_list<double> values);

    [[nodiscard]] Index dim2() const { return values_.size(); }
    /// Number of complex amplitudes encoded.
    [[nodiscard]] Index modes() const { return values_.size() / 2; }
    [[nodiscard]] double operator[](Index k) const { return values_(k); }
    [[nodiscard]] const Eigen::VectorXd &values() const { return values_; }
    [[nodiscard]] double norm() const { return values_.norm(); }

  private:
    Eigen::VectorXd values_;
};

/// Square real matrix of even dimension acting on RealState.
class RealOperator {
  public:
    /// Throws DimensionError unless square with even non-zero dimension.
    explicit RealOperator(Eigen::MatrixXd values);
    RealOperator(std::initializer_list<std::initializer_list<double>> rows);

    static RealOperator identity(Index dim2);
    static RealOperator zero(Index dim2);

    [[nodiscard]] Index dim2() const { return values_.rows(); }
    [[nodiscard]] Index modes() const { return values_.rows() / 2; }
    [[nodiscard]] double operator()(Index p, Index q) const { return values_(p, q); }
    [[nodiscard]] const Eigen::MatrixXd &values() const { return values_; }
    [[nodiscard]] double norm() const { return values_.norm(); }

    [[nodiscard]] RealOperator transpose() const;

    friend RealOperator operator*(const RealOperator &a, const RealOperator &b);
    friend RealState operator*(const RealOperator &a, const RealState &v);
    friend RealOperator operator+(const RealOperator &a, const RealOperator &b);
    friend RealOperator operator-(const RealOperator &a, const RealOperator &b);
    friend RealOperator operator*(double s, const RealOperator &a);

  private:
    Eigen::MatrixXd values_;
};

/// Frobenius norm of a - b.
double distance(const RealOperator &a, const RealOperator &b);
double distance(const ComplexMatrix &a, const ComplexMatrix &b);
/// Euclidean norm of a - b.
double distance(const RealState &a, const RealState &b);
double distance(const ComplexVector &a, const ComplexVector &b);

/// The Pauli matrices and their identity, as complex 2x2 matrices.
namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
} // namespace pauli

} // namespace realqm
