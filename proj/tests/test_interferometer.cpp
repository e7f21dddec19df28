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
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "realqm/error.hpp"
#include "realqm/interferometer.hpp"
#include "realqm/realmap.hpp"
#include "support/oracles.hpp"

namespace realqm {
namespace {

using testing::Cplx;
using testing::Gen;

constexpr Cplx kI(0.0, 1.0);

// Real 4x4 matrices of the interferometer as printed (beamsplitters without
// the 1/sqrt2 factor).
Eigen::Matrix4d printed_beamsplitter() {
    Eigen::Matrix4d m;
    m << 1, 0, 0, -1,
         0, 1, 1, 0,
         0, -1, 1, 0,
         1, 0, 0, 1;
    return m;
}

Eigen::Matrix4d printed_mirror() {
    Eigen::Matrix4d m;
    m << 0, 0, 0, -1,
         0, 0, 1, 0,
         0, -1, 0, 0,
         1, 0, 0, 0;
    return m;
}

TEST(Elements, BeamsplitterForms) {
    const OpticalElement bs = beamsplitter();
    EXPECT_EQ(bs.kind, ElementKind::BeamSplitter);
    EXPECT_TRUE(bs.complex_form.is_unitary());
    EXPECT_EQ(bs.real_form.values(), realify_op(bs.complex_form).values());
    EXPECT_LE((std::numbers::sqrt2 * bs.real_form.values() - printed_beamsplitter()).norm(), 1e-15);
    const double s = 1.0 / std::numbers::sqrt2;
    EXPECT_LE(testing::max_abs(bs.real_form.values().row(0).transpose(), Eigen::Vector4d(s, 0, 0, -s)),
              0.0);
    const ComplexVector out = bs.complex_form * ComplexVector::basis(2, 0);
    EXPECT_LE(std::abs(out[0] - s), 1e-16);
    EXPECT_LE(std::abs(out[1] - kI * s), 1e-16);
}

TEST(Elements, UnnormalizedBeamsplitterMatchesPrinted) {
    EXPECT_EQ(beamsplitter_unnormalized().real_form.values(), printed_beamsplitter());
}

TEST(Elements, MirrorForms) {
    const OpticalElement m = mirror();
    EXPECT_EQ(m.kind, ElementKind::Mirror);
    EXPECT_EQ(m.real_form.values(), printed_mirror());
    EXPECT_TRUE(m.complex_form.is_unitary());
    EXPECT_EQ((m.complex_form * m.complex_form).values(), -Eigen::Matrix2cd::Identity());
}

TEST(Elements, PhaseShifter) {
    const OpticalElement p = phase_shifter(0.4);
    EXPECT_EQ(p.kind, ElementKind::PhaseShifter);
    EXPECT_EQ(p.phase, 0.4);
    EXPECT_EQ(p.complex_form(0, 0), Cplx(1.0, 0.0));
    EXPECT_EQ(p.complex_form(1, 1), std::polar(1.0, 0.4));
    EXPECT_EQ(p.complex_form(0, 1), Cplx(0.0, 0.0));
    EXPECT_TRUE(p.complex_form.is_unitary());
}

TEST(Elements, BeamsplitterSquaredIsMirror) {
    const OpticalElement bs = beamsplitter();
    EXPECT_LE(distance(bs.complex_form * bs.complex_form, mirror().complex_form), 1e-12);
    EXPECT_LE(distance(bs.real_form * bs.real_form, mirror().real_form), 1e-12);
}

TEST(MachZehnder, NormalizedCompositeIsMinusIdentity) {
    EXPECT_LE((mach_zehnder_complex().values() + Eigen::Matrix2cd::Identity()).norm(), 1e-12);
    EXPECT_LE((mach_zehnder_real().values() + Eigen::Matrix4d::Identity()).norm(), 1e-12);
    EXPECT_LE(distance(realify_op(mach_zehnder_complex()), mach_zehnder_real()), 1e-12);

    const auto c = identity_multiple(mach_zehnder_complex());
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(format_identity_multiple(*c), "-I");
    const auto r = identity_multiple(mach_zehnder_real());
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(format_identity_multiple(*r), "-I");
}

TEST(MachZehnder, RealActionNegatesComponents) {
    Gen gen(51);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Vector4d v = gen.real_vector(4);
        EXPECT_LE(testing::max_abs(mach_zehnder_real().values() * v, -v), 1e-12 * v.norm());
    }
}

TEST(MachZehnder, PrintedProductIsMinusTwoIdentity) {
    const Eigen::Matrix4d product =
        printed_beamsplitter() * printed_mirror() * printed_beamsplitter();
    EXPECT_EQ(product, -2.0 * Eigen::Matrix4d::Identity());
    EXPECT_EQ(mach_zehnder_unnormalized_real().values(), product);
    EXPECT_EQ(mach_zehnder_unnormalized_complex().values(), -2.0 * Eigen::Matrix2cd::Identity());
    EXPECT_EQ(format_identity_multiple(*identity_multiple(mach_zehnder_unnormalized_real())), "-2I");
}

TEST(MachZehnder, IdentityMultipleRejectsOtherMatrices) {
    EXPECT_FALSE(identity_multiple(pauli::x()).has_value());
    EXPECT_FALSE(identity_multiple(beamsplitter().real_form).has_value());
    EXPECT_EQ(format_identity_multiple(Cplx(1, 0)), "I");
}

// p0 = |1 + e^{i phi}|^2 / 4 follows from multiplying the four 2x2 matrices
// by hand.
TEST(MachZehnder, PhaseProbabilitiesMatchClosedForm) {
    for (double phi : phase_grid(64)) {
        const ArmProbabilities c = mach_zehnder_with_phase(phi, Representation::Complex);
        const ArmProbabilities r = mach_zehnder_with_phase(phi, Representation::Real);
        const double p0 = std::norm(1.0 + std::polar(1.0, phi)) / 4.0;
        EXPECT_NEAR(c.p0, p0, 1e-14);
        EXPECT_NEAR(c.p1, 1.0 - p0, 1e-14);
        EXPECT_NEAR(c.p0 + c.p1, 1.0, 1e-14);
        EXPECT_LE(std::abs(c.p0 - r.p0), 1e-12);
        EXPECT_LE(std::abs(c.p1 - r.p1), 1e-12);
    }
}

TEST(MachZehnder, PhaseEndpoints) {
    const ArmProbabilities zero = mach_zehnder_with_phase(0.0);
    EXPECT_NEAR(zero.p0, 1.0, 1e-15);
    EXPECT_NEAR(zero.p1, 0.0, 1e-15);
    const ArmProbabilities pi = mach_zehnder_with_phase(std::numbers::pi);
    EXPECT_NEAR(pi.p0, 0.0, 1e-15);
    EXPECT_NEAR(pi.p1, 1.0, 1e-15);
}

TEST(Compose, RealifyOfComplexProductMatchesRealProduct) {
    Gen gen(52);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<OpticalElement> seq;
        const int len = gen.integer(1, 8);
        for (int k = 0; k < len; ++k) {
            switch (gen.integer(0, 3)) {
            case 0:
                seq.push_back(beamsplitter());
                break;
            case 1:
                seq.push_back(mirror());
                break;
            case 2:
                seq.push_back(beamsplitter_unnormalized());
                break;
            default:
                seq.push_back(phase_shifter(gen.uniform(0.0, 2 * std::numbers::pi)));
                break;
            }
        }
        EXPECT_LE(distance(realify_op(compose_complex(seq)), compose_real(seq)),
                  1e-12 * std::max(1.0, compose_real(seq).norm()));
    }
}

TEST(Compose, FirstElementActsFirst) {
    const std::vector<OpticalElement> seq{phase_shifter(0.3), mirror()};
    const ComplexMatrix expected = mirror().complex_form * phase_shifter(0.3).complex_form;
    EXPECT_EQ(compose_complex(seq).values(), expected.values());
    EXPECT_THROW(compose_complex(std::vector<OpticalElement>{}), DimensionError);
}

TEST(PhaseGrid, EndpointsInclusive) {
    const auto g = phase_grid(5);
    ASSERT_EQ(g.size(), 5u);
    EXPECT_EQ(g.front(), 0.0);
    EXPECT_EQ(g.back(), 2 * std::numbers::pi);
    EXPECT_THROW(phase_grid(1), ValidationError);
}

TEST(Sweep, RepresentationsAgreeOnGrid) {
    const auto g = phase_grid(64);
    for (const MziRecord &rec : mzi_sweep(g)) {
        EXPECT_LE(std::abs(rec.complex_path.p0 - rec.real_path.p0), 1e-12);
        EXPECT_LE(std::abs(rec.complex_path.p1 - rec.real_path.p1), 1e-12);
    }
}

} // namespace
} // namespace realqm
