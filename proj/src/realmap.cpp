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
#include "realqm/realmap.hpp"

#include "realqm/error.hpp"

namespace realqm {

RealState realify_state(const ComplexVector &v) {
    Eigen::VectorXd out(2 * v.dim());
    for (Index k = 0; k < v.dim(); ++k) {
        out(2 * k) = v[k].real();
        out(2 * k + 1) = v[k].imag();
    }
    return RealState(std::move(out));
}

ComplexVector complexify_state(const RealState &r) {
    Eigen::VectorXcd out(r.modes());
    for (Index k = 0; k < r.modes(); ++k) {
        out(k) = Complex(r[2 * k], r[2 * k + 1]);
    }
    return ComplexVector(std::move(out));
}

RealOperator realify_op(const ComplexMatrix &m) {
    const Index n = m.dim();
    Eigen::MatrixXd out(2 * n, 2 * n);
    for (Index p = 0; p < n; ++p) {
        for (Index q = 0; q < n; ++q) {
            const double re = m(p, q).real();
            const double im = m(p, q).imag();
            out(2 * p, 2 * q) = re;
            out(2 * p, 2 * q + 1) = -im;
            out(2 * p + 1, 2 * q) = im;
            out(2 * p + 1, 2 * q + 1) = re;
        }
    }
    return RealOperator(std::move(out));
}

ComplexMatrix complexify_op(const RealOperator &o) {
    const Index n = o.modes();
    Eigen::MatrixXcd out(n, n);
    for (Index p = 0; p < n; ++p) {
        for (Index q = 0; q < n; ++q) {
            const double re = 0.5 * (o(2 * p, 2 * q) + o(2 * p + 1, 2 * q + 1));
            const double im = 0.5 * (o(2 * p + 1, 2 * q) - o(2 * p, 2 * q + 1));
            out(p, q) = Complex(re, im);
        }
    }
    return ComplexMatrix(std::move(out));
}

RealOperator j_operator(Index n) {
    if (n <= 0) {
        throw DimensionError("j_operator: n must be positive");
    }
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (Index k = 0; k < n; ++k) {
        out(2 * k, 2 * k + 1) = -1.0;
        out(2 * k + 1, 2 * k) = 1.0;
    }
    return RealOperator(std::move(out));
}

RealOperator conjugation_operator(Index n) {
    if (n <= 0) {
        throw DimensionError("conjugation_operator: n must be positive");
    }
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (Index k = 0; k < n; ++k) {
        out(2 * k, 2 * k) = 1.0;
        out(2 * k + 1, 2 * k + 1) = -1.0;
    }
    return RealOperator(std::move(out));
}

RealState scalar_action(Complex z, const RealState &r) {
    Eigen::VectorXd out(r.dim2());
    for (Index k = 0; k < r.modes(); ++k) {
        const double x = r[2 * k];
        const double y = r[2 * k + 1];
        out(2 * k) = z.real() * x - z.imag() * y;
        out(2 * k + 1) = z.imag() * x + z.real() * y;
    }
    return RealState(std::move(out));
}

} // namespace realqm
