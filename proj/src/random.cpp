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
#include "realqm/random.hpp"

#include <cmath>

#include <Eigen/QR>

namespace realqm::random {

namespace {

Eigen::MatrixXcd gaussian(Index n, Rng &rng) {
    std::normal_distribution<double> dist;
    Eigen::MatrixXcd m(n, n);
    for (Index p = 0; p < n; ++p) {
        for (Index q = 0; q < n; ++q) {
            const double re = dist(rng);
            const double im = dist(rng);
            m(p, q) = Complex(re, im);
        }
    }
    return m;
}

} // namespace

ComplexMatrix complex_matrix(Index n, Rng &rng) { return ComplexMatrix(gaussian(n, rng)); }

ComplexMatrix hermitian(Index n, Rng &rng) {
    const Eigen::MatrixXcd a = gaussian(n, rng);
    return ComplexMatrix(0.5 * (a + a.adjoint()));
}

ComplexMatrix unitary(Index n, Rng &rng) {
    const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(gaussian(n, rng));
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index k = 0; k < n; ++k) {
        const double mag = std::abs(r(k, k));
        if (mag > 0.0) {
            q.col(k) *= r(k, k) / mag;
        }
    }
    return ComplexMatrix(std::move(q));
}

ComplexVector state(Index n, Rng &rng) {
    std::normal_distribution<double> dist;
    Eigen::VectorXcd v(n);
    for (Index k = 0; k < n; ++k) {
        const double re = dist(rng);
        const double im = dist(rng);
        v(k) = Complex(re, im);
    }
    v.normalize();
    return ComplexVector(std::move(v));
}

Eigen::MatrixXd real_matrix(Index n, Rng &rng) {
    std::normal_distribution<double> dist;
    Eigen::MatrixXd m(n, n);
    for (Index p = 0; p < n; ++p) {
        for (Index q = 0; q < n; ++q) {
            m(p, q) = dist(rng);
        }
    }
    return m;
}

} // namespace realqm::random
