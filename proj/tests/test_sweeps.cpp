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
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "realqm/random.hpp"
#include "realqm/realmap.hpp"
#include "realqm/ref.hpp"

// The OpenMP sweeps must reproduce the serial reference bit for bit,
// whatever the thread count (ctest runs this binary with OMP_NUM_THREADS=4).

namespace realqm {
namespace {

std::vector<double> grid(double lo, double hi, int n) {
    std::vector<double> out;
    for (int k = 0; k < n; ++k) {
        out.push_back(lo + (hi - lo) * k / (n - 1));
    }
    return out;
}

TEST(Sweeps, LarmorMatchesReference) {
    const auto times = grid(0.0, 20.0, 257);
    for (double omega : {0.5, 1.0, 3.7}) {
        const auto par = larmor_experiment(omega, times);
        const auto ser = ref::larmor_experiment(omega, times);
        ASSERT_EQ(par.size(), ser.size());
        for (std::size_t k = 0; k < par.size(); ++k) {
            EXPECT_EQ(par[k].t, ser[k].t);
            EXPECT_EQ(par[k].state.values(), ser[k].state.values());
            EXPECT_EQ(par[k].p, ser[k].p);
        }
    }
}

TEST(Sweeps, MziMatchesReference) {
    const auto phases = grid(0.0, 2 * std::numbers::pi, 301);
    const auto par = mzi_sweep(phases);
    const auto ser = ref::mzi_sweep(phases);
    ASSERT_EQ(par.size(), ser.size());
    for (std::size_t k = 0; k < par.size(); ++k) {
        EXPECT_EQ(par[k].phi, ser[k].phi);
        EXPECT_EQ(par[k].complex_path.p0, ser[k].complex_path.p0);
        EXPECT_EQ(par[k].complex_path.p1, ser[k].complex_path.p1);
        EXPECT_EQ(par[k].real_path.p0, ser[k].real_path.p0);
        EXPECT_EQ(par[k].real_path.p1, ser[k].real_path.p1);
    }
}

TEST(Sweeps, EntropyScanMatchesReference) {
    const auto alphas = grid(0.0, 2 * std::numbers::pi, 37);
    const auto betas = grid(0.0, std::numbers::pi / 2, 29);
    const auto par = entropy_scan(alphas, betas);
    const auto ser = ref::entropy_scan(alphas, betas);
    ASSERT_EQ(par.size(), alphas.size() * betas.size());
    ASSERT_EQ(par.size(), ser.size());
    for (std::size_t k = 0; k < par.size(); ++k) {
        EXPECT_EQ(par[k].alpha, ser[k].alpha);
        EXPECT_EQ(par[k].beta, ser[k].beta);
        EXPECT_EQ(par[k].det_rho1, ser[k].det_rho1);
        EXPECT_EQ(par[k].entropy_nats, ser[k].entropy_nats);
        EXPECT_EQ(par[k].cls, ser[k].cls);
    }
}

TEST(Sweeps, AuditMatchesReference) {
    random::Rng rng(7);
    std::vector<RealOperator> ops;
    for (int k = 0; k < 120; ++k) {
        const Index n = 1 + k % 4;
        if (k % 2 == 0) {
            ops.push_back(realify_op(random::unitary(n, rng)));
        } else {
            ops.emplace_back(random::real_matrix(2 * n, rng));
        }
    }
    const auto par = audit_all(ops);
    const auto ser = ref::audit_all(ops);
    ASSERT_EQ(par.size(), ser.size());
    for (std::size_t k = 0; k < par.size(); ++k) {
        EXPECT_EQ(par[k].verdict, ser[k].verdict);
        EXPECT_EQ(par[k].linear_residual, ser[k].linear_residual);
        EXPECT_EQ(par[k].antilinear_residual, ser[k].antilinear_residual);
        EXPECT_EQ(par[k].commutator_norm, ser[k].commutator_norm);
        EXPECT_EQ(par[k].threshold, ser[k].threshold);
        EXPECT_EQ(par[k].complex_form.has_value(), ser[k].complex_form.has_value());
    }
    EXPECT_EQ(par[0].verdict, Verdict::Physical);
    EXPECT_EQ(par[1].verdict, Verdict::Extended);
}

TEST(Sweeps, EmptyInputs) {
    EXPECT_TRUE(larmor_experiment(1.0, std::vector<double>{}).empty());
    EXPECT_TRUE(mzi_sweep(std::vector<double>{}).empty());
    EXPECT_TRUE(audit_all(std::vector<RealOperator>{}).empty());
}

} // namespace
} // namespace realqm
