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
#include "realqm/oracle.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "realqm/error.hpp"

namespace realqm {

ComplexVector oracle_complex_propagate(const ComplexMatrix &h, const ComplexVector &v0, double t,
                                       double hbar) {
    if (h.dim() != v0.dim()) {
        throw DimensionError("oracle_complex_propagate: dimension mismatch");
    }
    if (!(hbar > 0.0)) {
        throw ValidationError("oracle_complex_propagate: hbar must be positive");
    }
    if (!h.is_hermitian(tolerance::kHermitian * std::max(1.0, h.values().norm()))) {
        throw ValidationError("oracle_complex_propagate: Hamiltonian is not Hermitian");
    }
    if (t == 0.0) {
        return v0;
    }

    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h.values());
    if (eig.info() != Eigen::Success) {
        throw ValidationError("oracle_complex_propagate: eigensolver did not converge");
    }
    const Eigen::MatrixXcd &vecs = eig.eigenvectors();
    Eigen::VectorXcd coeffs = vecs.adjoint() * v0.values();
    for (Index k = 0; k < coeffs.size(); ++k) {
        const double angle = -eig.eigenvalues()(k) * t / hbar;
        coeffs(k) *= Complex(std::cos(angle), std::sin(angle));
    }
    return ComplexVector(vecs * coeffs);
}

} // namespace realqm
