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
 * Schrodinger evolution written entirely in real arithmetic.
 *
 * i hbar d/dt c = H c becomes d/dt r = G r with G = realify_op(-i H / hbar).
 * G is antisymmetric whenever H is Hermitian, so exp(t G) is orthogonal and
 * the Euclidean norm of r is conserved.
 *
 * Sign convention: with H = hbar Omega sigma_z and r(0) = (1, 0, 1, 0)/sqrt2
 * the solution is a(t) = e^{-i Omega t}/sqrt2, b(t) = e^{+i Omega t}/sqrt2,
 * so a_i(t) = -sin(Omega t)/sqrt2 and b_i(t) = +sin(Omega t)/sqrt2. The
 * opposite-sign pair (a ~ e^{+i Omega t}) corresponds to evolving with -H.
 */
#pragma once

#include <span>
#include <vector>

#include "realqm/types.hpp"

namespace realqm {

/// H = h0 I + h1 sigma_x + h2 sigma_y + h3 sigma_z on one qubit.
struct PauliHamiltonian {
    double h0 = 0.0;
    double h1 = 0.0;
    double h2 = 0.0;
    double h3 = 0.0;

    [[nodiscard]] ComplexMatrix matrix() const;
};

/// realify_op(-i H / hbar). Throws ValidationError unless H is Hermitian
/// and hbar > 0.
RealOperator real_generator(const ComplexMatrix &h, double hbar = 1.0);
RealOperator real_generator(const PauliHamiltonian &h, double hbar = 1.0);

/// exp(t G) v0 via scaling-and-squaring Pade.
RealState propagate_exact(const RealOperator &g, const RealState &v0, double t);

/// Classical fourth-order Runge-Kutta from 0 to @p t. Uses ceil(t / dt)
/// equal steps of size t / ceil(t / dt) <= dt. Throws ValidationError for
/// dt <= 0 or t < 0.
RealState propagate_rk4(const RealOperator &g, const RealState &v0, double t, double dt);

/// |c_k|^2 = r_{2k}^2 + r_{2k+1}^2 for each encoded amplitude.
std::vector<double> probabilities(const RealState &r);

/// arg(a b*) for a one-qubit state (a, b). Throws DimensionError unless
/// r encodes exactly two amplitudes.
double relative_phase(const RealState &r);

struct TrajectoryRecord {
    double t = 0.0;
    RealState state{0.0, 0.0};
    std::vector<double> p;
};

/// Larmor precession under H = hbar Omega sigma_z from (1, 0, 1, 0)/sqrt2,
/// evaluated exactly at each requested time. Times must be non-negative and
/// sorted (ValidationError otherwise). Time points are evaluated in parallel
/// when OpenMP is enabled; records are returned in input order.
std::vector<TrajectoryRecord> larmor_experiment(double omega, std::span<const double> times);

/// (1, 0, 1, 0) / sqrt2.
RealState larmor_initial_state();

} // namespace realqm
