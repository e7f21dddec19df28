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
#include "realqm/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kernels.hpp"
#include "realqm/error.hpp"
#include "realqm/linalg.hpp"
#include "realqm/realmap.hpp"

namespace realqm {

namespace detail {

void validate_times(std::span<const double> times) {
    for (std::size_t k = 0; k < times.size(); ++k) {
        if (!(times[k] >= 0.0)) {
            throw ValidationError("larmor_experiment: times must be non-negative");
        }
        if (k > 0 && times[k] < times[k - 1]) {
            throw ValidationError("larmor_experiment: times must be sorted");
        }
    }
}

TrajectoryRecord larmor_record(const RealOperator &g, const RealState &v0, double t) {
    RealState state = propagate_exact(g, v0, t);
    std::vector<double> p = probabilities(state);
    return TrajectoryRecord{t, std::move(state), std::move(p)};
}

RealOperator larmor_generator(double omega) {
    return real_generator(PauliHamiltonian{0.0, 0.0, 0.0, omega}, 1.0);
}

} // namespace detail

ComplexMatrix PauliHamiltonian::matrix() const {
    return Complex(h0) * pauli::identity() + Complex(h1) * pauli::x() + Complex(h2) * pauli::y() +
           Complex(h3) * pauli::z();
}

RealOperator real_generator(const ComplexMatrix &h, double hbar) {
    if (!(hbar > 0.0)) {
        throw ValidationError("real_generator: hbar must be positive");
    }
    if (!h.is_hermitian(tolerance::kHermitian * std::max(1.0, h.values().norm()))) {
        throw ValidationError("real_generator: Hamiltonian is not Hermitian");
    }
    return realify_op(Complex(0.0, -1.0 / hbar) * h);
}

RealOperator real_generator(const PauliHamiltonian &h, double hbar) {
    return real_generator(h.matrix(), hbar);
}

RealState propagate_exact(const RealOperator &g, const RealState &v0, double t) {
    if (g.dim2() != v0.dim2()) {
        throw DimensionError("propagate_exact: generator and state dimensions differ");
    }
    return RealState(linalg::expm(t * g.values()) * v0.values());
}

RealState propagate_rk4(const RealOperator &g, const RealState &v0, double t, double dt) {
    if (g.dim2() != v0.dim2()) {
        throw DimensionError("propagate_rk4: generator and state dimensions differ");
    }
    if (!(dt > 0.0)) {
        throw ValidationError("propagate_rk4: dt must be positive");
    }
    if (!(t >= 0.0)) {
        throw ValidationError("propagate_rk4: t must be non-negative");
    }
    if (t == 0.0) {
        return v0;
    }
    const auto steps = static_cast<long>(std::ceil(t / dt));
    const double h = t / static_cast<double>(steps);
    const Eigen::MatrixXd &m = g.values();

    Eigen::VectorXd v = v0.values();
    for (long s = 0; s < steps; ++s) {
        const Eigen::VectorXd k1 = m * v;
        const Eigen::VectorXd k2 = m * (v + 0.5 * h * k1);
        const Eigen::VectorXd k3 = m * (v + 0.5 * h * k2);
        const Eigen::VectorXd k4 = m * (v + h * k3);
        v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return RealState(std::move(v));
}

std::vector<double> probabilities(const RealState &r) {
    std::vector<double> p(static_cast<std::size_t>(r.modes()));
    for (Index k = 0; k < r.modes(); ++k) {
        p[static_cast<std::size_t>(k)] = r[2 * k] * r[2 * k] + r[2 * k + 1] * r[2 * k + 1];
    }
    return p;
}

double relative_phase(const RealState &r) {
    if (r.modes() != 2) {
        throw DimensionError("relative_phase: expected a one-qubit state");
    }
    const Complex a(r[0], r[1]);
    const Complex b(r[2], r[3]);
    return std::arg(a * std::conj(b));
}

RealState larmor_initial_state() {
    const double s = 1.0 / std::numbers::sqrt2;
    return RealState{s, 0.0, s, 0.0};
}

std::vector<TrajectoryRecord> larmor_experiment(double omega, std::span<const double> times) {
    detail::validate_times(times);
    const RealOperator g = detail::larmor_generator(omega);
    const RealState v0 = larmor_initial_state();

    std::vector<TrajectoryRecord> records(times.size());
    const auto count = static_cast<long>(times.size());
#pragma omp parallel for schedule(static)
    for (long k = 0; k < count; ++k) {
        const auto i = static_cast<std::size_t>(k);
        records[i] = detail::larmor_record(g, v0, times[i]);
    }
    return records;
}

} // namespace realqm
