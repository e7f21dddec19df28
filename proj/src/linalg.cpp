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
#include "realqm/linalg.hpp"

#include <array>
#include <cmath>

#include <Eigen/SVD>

#include "realqm/error.hpp"

namespace realqm::linalg {

namespace {

// Higham (2005), "The scaling and squaring method for the matrix exponential
// revisited": coefficients of the [13/13] Pade approximant and the 1-norm
// bound under which it is accurate to double precision.
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};
constexpr double kTheta13 = 5.371920351148152;

} // namespace

Eigen::MatrixXd expm(const Eigen::MatrixXd &a) {
    if (a.rows() != a.cols()) {
        throw DimensionError("expm: matrix must be square");
    }
    const Eigen::Index n = a.rows();
    if (n == 0) {
        return a;
    }

    const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm1 > kTheta13) {
        squarings = static_cast<int>(std::ceil(std::log2(norm1 / kTheta13)));
    }
    const Eigen::MatrixXd scaled = a / std::ldexp(1.0, squarings);

    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    const Eigen::MatrixXd a2 = scaled * scaled;
    const Eigen::MatrixXd a4 = a2 * a2;
    const Eigen::MatrixXd a6 = a4 * a2;
    // Normalized so that the constant term is exactly 1 and exp(0) = I.
    std::array<double, 14> b{};
    for (std::size_t k = 0; k < b.size(); ++k) {
        b[k] = kPade13[k] / kPade13[0];
    }

    const Eigen::MatrixXd u_inner = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 +
                                    b[5] * a4 + b[3] * a2 + b[1] * id;
    const Eigen::MatrixXd u = scaled * u_inner;
    const Eigen::MatrixXd v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 +
                              b[2] * a2 + id;

    Eigen::MatrixXd result = (v - u).partialPivLu().solve(v + u);
    for (int k = 0; k < squarings; ++k) {
        result = (result * result).eval();
    }
    return result;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b) {
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Eigen::VectorXd kron(const Eigen::VectorXd &a, const Eigen::VectorXd &b) {
    Eigen::VectorXd out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

double operator_norm(const Eigen::MatrixXd &a) {
    if (a.size() == 0) {
        return 0.0;
    }
    return Eigen::JacobiSVD<Eigen::MatrixXd>(a).singularValues()(0);
}

} // namespace realqm::linalg
