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
// Serial reference sweeps against the OpenMP kernels. Thread count follows
// OMP_NUM_THREADS.
#include <numbers>
#include <vector>

#include <benchmark/benchmark.h>

#include "realqm/dynamics.hpp"
#include "realqm/entanglement.hpp"
#include "realqm/interferometer.hpp"
#include "realqm/random.hpp"
#include "realqm/realmap.hpp"
#include "realqm/ref.hpp"
#include "realqm/superselection.hpp"

namespace {

using namespace realqm;

std::vector<double> linspace(double lo, double hi, long n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k) {
        out[static_cast<std::size_t>(k)] = lo + (hi - lo) * static_cast<double>(k) /
                                                    static_cast<double>(n - 1);
    }
    return out;
}

std::vector<RealOperator> audit_inputs(long count) {
    random::Rng rng(17);
    std::vector<RealOperator> ops;
    ops.reserve(static_cast<std::size_t>(count));
    for (long k = 0; k < count; ++k) {
        const Index n = 2 + k % 5;
        if (k % 2 == 0) {
            ops.push_back(realify_op(random::unitary(n, rng)));
        } else {
            ops.emplace_back(random::real_matrix(2 * n, rng));
        }
    }
    return ops;
}

template <bool Parallel> void BM_Larmor(benchmark::State &state) {
    const auto times = linspace(0.0, 20.0, state.range(0));
    for (auto _ : state) {
        auto out = Parallel ? larmor_experiment(1.0, times) : ref::larmor_experiment(1.0, times);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel> void BM_Mzi(benchmark::State &state) {
    const auto phases = linspace(0.0, 2 * std::numbers::pi, state.range(0));
    for (auto _ : state) {
        auto out = Parallel ? mzi_sweep(phases) : ref::mzi_sweep(phases);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel> void BM_EntropyScan(benchmark::State &state) {
    const auto alphas = linspace(0.0, 2 * std::numbers::pi, state.range(0));
    const auto betas = linspace(0.0, std::numbers::pi / 2, state.range(0));
    for (auto _ : state) {
        auto out = Parallel ? entropy_scan(alphas, betas) : ref::entropy_scan(alphas, betas);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

template <bool Parallel> void BM_AuditAll(benchmark::State &state) {
    const auto ops = audit_inputs(state.range(0));
    for (auto _ : state) {
        auto out = Parallel ? audit_all(ops) : ref::audit_all(ops);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_Larmor<false>)->Name("larmor/serial")->Arg(1000)->Arg(10000);
BENCHMARK(BM_Larmor<true>)->Name("larmor/openmp")->Arg(1000)->Arg(10000)->UseRealTime();
BENCHMARK(BM_Mzi<false>)->Name("mzi/serial")->Arg(1000)->Arg(100000);
BENCHMARK(BM_Mzi<true>)->Name("mzi/openmp")->Arg(1000)->Arg(100000)->UseRealTime();
BENCHMARK(BM_EntropyScan<false>)->Name("entropy_scan/serial")->Arg(64)->Arg(256);
BENCHMARK(BM_EntropyScan<true>)->Name("entropy_scan/openmp")->Arg(64)->Arg(256)->UseRealTime();
BENCHMARK(BM_AuditAll<false>)->Name("audit_all/serial")->Arg(256)->Arg(2048);
BENCHMARK(BM_AuditAll<true>)->Name("audit_all/openmp")->Arg(256)->Arg(2048)->UseRealTime();

} // namespace

BENCHMARK_MAIN();
