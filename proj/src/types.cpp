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
#include "realqm/types.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "realqm/error.hpp"

namespace realqm {

namespace {

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>
from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
    const auto n_rows = static_cast<Index>(rows.size());
    const auto n_cols = n_rows == 0 ? Index{0} : static_cast<Index>(rows.begin()->size());
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m(n_rows, n_cols);
    Index p = 0;
    for (const auto &row : rows) {
        if (static_cast<Index>(row.size()) != n_cols) {
            throw DimensionError("ragged matrix literal");
        }
        Index q = 0;
        for (const auto &x : row) {
            m(p, q++) = x;
        }
        ++p;
    }
    return m;
}

void require_square(Index rows, Index cols, const char *what) {
    if (rows == 0 || rows != cols) {
        throw DimensionError(std::string(what) + ": expected a non-empty square matrix, got " +
                             std::to_string(rows) + "x" + std::to_string(cols));
    }
}

} // namespace

// ComplexVector

ComplexVector::ComplexVector(Eigen::VectorXcd values) : values_(std::move(values)) {
    if (values_.size() == 0) {
        throw DimensionError("ComplexVector: dimension must be positive");
    }
}

ComplexVector::ComplexVector(std::initializer_list<Complex> values)
    : ComplexVector(Eigen::VectorXcd(
          Eigen::Map<const Eigen::VectorXcd>(values.begin(), static_cast<Index>(values.size())))) {}

ComplexVector ComplexVector::basis(Index dim, Index k) {
    if (dim <= 0 || k < 0 || k >= dim) {
        throw DimensionError("ComplexVector::basis: index out of range");
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    v(k) = 1.0;
    return ComplexVector(std::move(v));
}

bool ComplexVector::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

ComplexVector ComplexVector::scaled(Complex z) const { return ComplexVector(z * values_); }

// ComplexMatrix

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd values) : values_(std::move(values)) {
    require_square(values_.rows(), values_.cols(), "ComplexMatrix");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : ComplexMatrix(from_rows<Complex>(rows)) {}

ComplexMatrix ComplexMatrix::identity(Index dim) {
    return ComplexMatrix(Eigen::MatrixXcd::Identity(dim, dim));
}

bool ComplexMatrix::is_hermitian(double tol) const {
    return (values_ - values_.adjoint()).norm() <= tol;
}

bool ComplexMatrix::is_unitary(double tol) const {
    return (values_.adjoint() * values_ - Eigen::MatrixXcd::Identity(dim(), dim())).norm() <= tol;
}

ComplexMatrix ComplexMatrix::adjoint() const { return ComplexMatrix(values_.adjoint()); }

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("ComplexMatrix product: dimension mismatch");
    }
    return ComplexMatrix(a.values_ * b.values_);
}

ComplexVector operator*(const ComplexMatrix &a, const ComplexVector &v) {
    if (a.dim() != v.dim()) {
        throw DimensionError("ComplexMatrix * ComplexVector: dimension mismatch");
    }
    return ComplexVector(a.values_ * v.values());
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("ComplexMatrix sum: dimension mismatch");
    }
    return ComplexMatrix(a.values_ + b.values_);
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("ComplexMatrix difference: dimension mismatch");
    }
    return ComplexMatrix(a.values_ - b.values_);
}

ComplexMatrix operator*(Complex z, const ComplexMatrix &a) { return ComplexMatrix(z * a.values_); }

// RealState

RealState::RealState(Eigen::VectorXd values) : values_(std::move(values)) {
    if (values_.size() == 0 || values_.size() % 2 != 0) {
        throw DimensionError("RealState: length must be even and positive, got " +
                             std::to_string(values_.size()));
    }
}

RealState::RealState(std::initializer_list<double> values)
    : RealState(Eigen::VectorXd(
          Eigen::Map<const Eigen::VectorXd>(values.begin(), static_cast<Index>(values.size())))) {}

// RealOperator

RealOperator::RealOperator(Eigen::MatrixXd values) : values_(std::move(values)) {
    require_square(values_.rows(), values_.cols(), "RealOperator");
    if (values_.rows() % 2 != 0) {
        throw DimensionError("RealOperator: dimension must be even, got " +
                             std::to_string(values_.rows()));
    }
}

RealOperator::RealOperator(std::initializer_list<std::initializer_list<double>> rows)
    : RealOperator(from_rows<double>(rows)) {}

RealOperator RealOperator::identity(Index dim2) {
    return RealOperator(Eigen::MatrixXd::Identity(dim2, dim2));
}

RealOperator RealOperator::zero(Index dim2) {
    return RealOperator(Eigen::MatrixXd::Zero(dim2, dim2));
}

RealOperator RealOperator::transpose() const { return RealOperator(values_.transpose()); }

RealOperator operator*(const RealOperator &a, const RealOperator &b) {
    if (a.dim2() != b.dim2()) {
        throw DimensionError("RealOperator product: dimension mismatch");
    }
    return RealOperator(a.values_ * b.values_);
}

RealState operator*(const RealOperator &a, const RealState &v) {
    if (a.dim2() != v.dim2()) {
        throw DimensionError("RealOperator * RealState: dimension mismatch");
    }
    return RealState(a.values_ * v.values());
}

RealOperator operator+(const RealOperator &a, const RealOperator &b) {
    if (a.dim2() != b.dim2()) {
        throw DimensionError("RealOperator sum: dimension mismatch");
    }
    return RealOperator(a.values_ + b.values_);
}

RealOperator operator-(const RealOperator &a, const RealOperator &b) {
    if (a.dim2() != b.dim2()) {
        throw DimensionError("RealOperator difference: dimension mismatch");
    }
    return RealOperator(a.values_ - b.values_);
}

RealOperator operator*(double s, const RealOperator &a) { return RealOperator(s * a.values_); }

double distance(const RealOperator &a, const RealOperator &b) { return (a - b).norm(); }

double distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    return (a - b).values().norm();
}

double distance(const RealState &a, const RealState &b) {
    if (a.dim2() != b.dim2()) {
        throw DimensionError("distance: dimension mismatch");
    }
    return (a.values() - b.values()).norm();
}

double distance(const ComplexVector &a, const ComplexVector &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("distance: dimension mismatch");
    }
    return (a.values() - b.values()).norm();
}

namespace pauli {

ComplexMatrix identity() { return ComplexMatrix::identity(2); }

ComplexMatrix x() { return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}; }

ComplexMatrix y() { return ComplexMatrix{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}; }

ComplexMatrix z() { return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}; }

} // namespace pauli

} // namespace realqm
