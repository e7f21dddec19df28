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
#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "realqm/error.hpp"
#include "realqm/indefinite_metric.hpp"
#include "realqm/linalg.hpp"
#include "support/oracles.hpp"

namespace realqm {
namespace {

using testing::Gen;

// Random physical state on the guarded subspace: a combination of vacuum
// descendants (a3^+ - a0^+)^k |0,0,t>, which the constraint annihilates.
Eigen::VectorXd random_physical(const FockToy &toy, Gen &gen) {
    Eigen::VectorXd psi = Eigen::VectorXd::Zero(toy.dim());
    for (int nt = 0; nt < toy.transverse_cutoff(); ++nt) {
        Eigen::VectorXd term = toy.basis_state(0, 0, nt);
        for (int k = 0; k <= toy.guard() / 2; ++k) {
            psi += gen.normal() * term;
            term = toy.emission() * term;
        }
    }
    return psi;
}

TEST(IndefiniteQubit, EtaInner) {
    const IndefiniteSpace q = indefinite_qubit();
    EXPECT_EQ(eta_inner(Eigen::Vector2d(1, 0), Eigen::Vector2d(1, 0), q), 1.0);
    EXPECT_EQ(eta_inner(Eigen::Vector2d(0, 1), Eigen::Vector2d(0, 1), q), -1.0);
    const double c = 0.8, s = 0.3;
    EXPECT_EQ(eta_inner(Eigen::Vector2d(c, s), Eigen::Vector2d(c, s), q), c * c - s * s);
}

TEST(IndefiniteQubit, ComplexEtaInnerConjugatesLeft) {
    const IndefiniteSpace q = indefinite_qubit();
    const ComplexVector v{Complex(0, 1), Complex(1, 1)};
    EXPECT_EQ(eta_inner(v, v, q), Complex(1.0 - 2.0, 0.0));
    const ComplexVector w{Complex(1, 0), Complex(0, 0)};
    EXPECT_EQ(eta_inner(v, w, q), Complex(0, -1));
}

TEST(IndefiniteQubit, RejectsMismatch) {
    EXPECT_THROW(eta_inner(Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(1, 0, 0), indefinite_qubit()),
                 DimensionError);
    EXPECT_THROW(IndefiniteSpace({1, 2}), ValidationError);
    EXPECT_THROW(IndefiniteSpace({}), ValidationError);
    EXPECT_THROW(IndefiniteSpace({1, -1}, {"a"}), ValidationError);
}

TEST(IndefiniteQubit, MetricSquaresToIdentity) {
    const IndefiniteSpace q = indefinite_qubit_pair();
    EXPECT_EQ(q.metric() * q.metric(), Eigen::Matrix4d::Identity());
}

TEST(Boost, Normalization) {
    EXPECT_EQ(boost_normalize(0.0), Eigen::Vector2d(1, 0));
    const Eigen::Vector2d b = boost_normalize(1.0);
    EXPECT_NEAR(b(0), 1.5430806348152437, 1e-15);
    EXPECT_NEAR(b(1), 1.1752011936438014, 1e-15);
    const IndefiniteSpace q = indefinite_qubit();
    Gen gen(81);
    for (int trial = 0; trial < 200; ++trial) {
        const double x = gen.uniform(-3.0, 3.0);
        const Eigen::Vector2d v = boost_normalize(x);
        EXPECT_NEAR(eta_inner(v, v, q), 1.0, 1e-12);
        EXPECT_NEAR(eta_inner(v, orthogonal_partner(v), q), 0.0, 1e-12);
        const Eigen::Vector2d w = orthogonal_partner(v);
        EXPECT_NEAR(eta_inner(w, w, q), -1.0, 1e-12);
    }
}

TEST(PairConstraint, Residuals) {
    EXPECT_EQ(pair_constraint_residual(Eigen::Vector4d(1, 0, 0, 0)), 0.0);
    EXPECT_EQ(pair_constraint_residual(Eigen::Vector4d(0, 0, 0, 1)), 0.0);
    EXPECT_EQ(pair_constraint_residual(Eigen::Vector4d(0, 1, 0, 0)), 1.0);
    EXPECT_EQ(pair_constraint_operator() * Eigen::Vector4d(0, 1, 0, 0), Eigen::Vector4d(0, 0, 1, 0));
    EXPECT_THROW(pair_constraint_residual(Eigen::Vector2d(1, 0)), DimensionError);
}

TEST(PairConstraint, KernelAndRestrictedMetric) {
    const PairPhysicalSubspace sub = pair_physical_subspace();
    ASSERT_EQ(sub.dim(), 2);
    EXPECT_LE((sub.restricted_metric_eigenvalues - Eigen::Vector2d(1, 1)).norm(), 1e-14);
    // The kernel is span{|00>, |11>}: the projector onto it is diag(1, 0, 0, 1).
    const Eigen::Matrix4d proj = sub.basis * sub.basis.transpose();
    EXPECT_LE((proj - Eigen::Vector4d(1, 0, 0, 1).asDiagonal().toDenseMatrix()).norm(), 1e-14);
    const IndefiniteSpace q = indefinite_qubit_pair();
    EXPECT_EQ(eta_inner(Eigen::Vector4d(0, 0, 0, 1), Eigen::Vector4d(0, 0, 0, 1), q), 1.0);
}

TEST(FockToy, RejectsSmallCutoff) {
    EXPECT_THROW(build_fock_toy(3), ValidationError);
    EXPECT_THROW(build_fock_toy(8, 0), ValidationError);
}

TEST(FockToy, NormAlternation) {
    const FockToy toy = build_fock_toy(8);
    for (int n = 0; n < toy.cutoff(); ++n) {
        const Eigen::VectorXd s = toy.basis_state(0, n);
        EXPECT_EQ(eta_inner(s, s, toy.space()), n % 2 == 0 ? 1.0 : -1.0);
        const Eigen::VectorXd l = toy.basis_state(n, 0);
        EXPECT_EQ(eta_inner(l, l, toy.space()), 1.0);
    }
}

TEST(FockToy, ScalarCreationIsMinusStandardCreation) {
    const FockToy toy = build_fock_toy(6);
    EXPECT_EQ(toy.a0_dag(), -toy.a0().transpose());
    EXPECT_EQ(toy.a3_dag(), toy.a3().transpose());
}

TEST(FockToy, CommutatorsOnGuardedSubspace) {
    for (int cutoff : {4, 6, 8}) {
        for (int transverse : {1, 2}) {
            const FockToy toy = build_fock_toy(cutoff, transverse);
            const Eigen::MatrixXd p = toy.guarded_projector();
            const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(toy.dim(), toy.dim());
            const Eigen::MatrixXd c0 = toy.a0() * toy.a0_dag() - toy.a0_dag() * toy.a0();
            const Eigen::MatrixXd c3 = toy.a3() * toy.a3_dag() - toy.a3_dag() * toy.a3();
            const Eigen::MatrixXd ce = toy.constraint() * toy.emission() -
                                       toy.emission() * toy.constraint();
            EXPECT_LE(linalg::operator_norm((c0 + id) * p), 1e-14);
            EXPECT_LE(linalg::operator_norm((c3 - id) * p), 1e-14);
            EXPECT_LE(linalg::operator_norm(ce * p), 1e-14);
            // Each entry is n + 1 - n with both terms rounded, so a few ulps of n.
            EXPECT_LE(((c0 + id) * p).cwiseAbs().maxCoeff(),
                      4 * std::numeric_limits<double>::epsilon() * cutoff);
            // Outside the guard the truncation shows up.
            EXPECT_GT(((c0 + id) * (id - p)).norm(), 0.5);
        }
    }
}

TEST(FockToy, MetricAdjointIsInvolution) {
    const FockToy toy = build_fock_toy(5, 2);
    Gen gen(82);
    const Eigen::MatrixXd x = gen.real_matrix(static_cast<int>(toy.dim()));
    EXPECT_EQ(toy.metric_adjoint(toy.metric_adjoint(x)), x);
    // <v, X w>_eta = <X^+ v, w>_eta.
    const Eigen::VectorXd v = gen.real_vector(static_cast<int>(toy.dim()));
    const Eigen::VectorXd w = gen.real_vector(static_cast<int>(toy.dim()));
    EXPECT_NEAR(eta_inner(v, x * w, toy.space()), eta_inner(toy.metric_adjoint(x) * v, w, toy.space()),
                1e-11);
}

TEST(FockToy, IndexLayout) {
    const FockToy toy = build_fock_toy(5, 3);
    EXPECT_EQ(toy.dim(), 75);
    EXPECT_EQ(toy.index(2, 1, 2), (2 * 5 + 1) * 3 + 2);
    EXPECT_THROW(static_cast<void>(toy.index(5, 0, 0)), DimensionError);
    EXPECT_EQ(toy.space().labels()[toy.index(2, 1, 2)], "|2,1,2>");
}

TEST(GbConstraint, Examples) {
    const FockToy toy = build_fock_toy(8);
    EXPECT_EQ(gb_constraint_residual(toy, toy.vacuum()), 0.0);
    EXPECT_EQ(gb_constraint_residual(toy, ghost_pair(toy)), 0.0);
    EXPECT_EQ(gb_constraint_residual(toy, toy.basis_state(1, 0)), 1.0);
    EXPECT_THROW(gb_constraint_residual(toy, toy.basis_state(7, 0)), GuardError);
    EXPECT_THROW(gb_constraint_residual(toy, Eigen::VectorXd::Zero(3)), DimensionError);
}

TEST(GhostPair, IsEtaNull) {
    const FockToy toy = build_fock_toy(8);
    const Eigen::VectorXd g = ghost_pair(toy);
    EXPECT_EQ(g, toy.basis_state(1, 0) + toy.basis_state(0, 1));
    EXPECT_LE(std::abs(eta_inner(g, g, toy.space())), 1e-14);
}

TEST(GhostEmit, PreservesConstraintAndNorm) {
    for (int transverse : {1, 2}) {
        const FockToy toy = build_fock_toy(8, transverse);
        Gen gen(83 + transverse);
        for (int trial = 0; trial < 50; ++trial) {
            const Eigen::VectorXd psi = random_physical(toy, gen);
            for (double lambda : {0.3, 1.0, 5.0}) {
                const Eigen::VectorXd out = ghost_emit(toy, psi, lambda);
                EXPECT_LE(gb_constraint_residual(toy, out), 1e-12 * std::max(1.0, out.norm()));
                EXPECT_NEAR(eta_inner(out, out, toy.space()), eta_inner(psi, psi, toy.space()),
                            1e-12 * std::max(1.0, out.squaredNorm()));
            }
            EXPECT_EQ(ghost_emit(toy, psi, 0.0), psi);
        }
    }
}

TEST(GhostEmit, AddedComponentIsEtaOrthogonalToPhysicalStates) {
    const FockToy toy = build_fock_toy(8, 2);
    Gen gen(85);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::VectorXd psi = random_physical(toy, gen);
        const Eigen::VectorXd phi = random_physical(toy, gen);
        const Eigen::VectorXd ghost = toy.emission() * psi;
        EXPECT_LE(std::abs(eta_inner(ghost, phi, toy.space())), 1e-12 * (1 + psi.norm() * phi.norm()));
    }
}

TEST(GhostEmit, RejectsInvalidInput) {
    const FockToy toy = build_fock_toy(8);
    EXPECT_THROW(ghost_emit(toy, toy.basis_state(1, 0), 0.5), ValidationError);
    EXPECT_THROW(ghost_emit(toy, toy.basis_state(7, 7), 0.5), GuardError);
}

TEST(OverlapInvariance, Examples) {
    const FockToy toy = build_fock_toy(8);
    EXPECT_LE(overlap_invariance_check(toy, toy.vacuum(), toy.vacuum(), 0.7), 1e-14);
    EXPECT_LE(overlap_invariance_check(toy, toy.vacuum(), toy.vacuum(), 0.7, 2), 1e-14);
    EXPECT_EQ(overlap_invariance_check(toy, toy.vacuum(), toy.vacuum(), 0.0), 0.0);
}

TEST(OverlapInvariance, RandomPhysicalStatesWithSpectator) {
    const FockToy toy = build_fock_toy(8, 2);
    Gen gen(86);
    for (int trial = 0; trial < 50; ++trial) {
        // Keep psi at low occupation so two emissions stay inside the guard.
        Eigen::VectorXd psi = gen.normal() * toy.vacuum() + gen.normal() * ghost_pair(toy);
        const Eigen::VectorXd psi1 = random_physical(toy, gen);
        for (int emissions : {1, 2}) {
            const double dev = overlap_invariance_check(toy, psi, psi1, 0.7, emissions);
            EXPECT_LE(dev, 1e-12 * (1 + psi.norm() * psi1.norm()));
        }
    }
}

} // namespace
} // namespace realqm
