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
 * Serial reference versions of the OpenMP sweeps. Same per-point arithmetic,
 * plain loops; the parallel kernels must match them bit for bit.
 */
#pragma once

#include <span>
#include <vector>

#include "realqm/dynamics.hpp"
#include "realqm/entanglement.hpp"
#include "realqm/interferometer.hpp"
#include "realqm/superselection.hpp"

namespace realqm::ref {

std::vector<TrajectoryRecord> larmor_experiment(double omega, std::span<const double> times);

std::vector<MziRecord> mzi_sweep(std::span<const double> phases);

std::vector<EntropyScanRecord> entropy_scan(std::span<const double> alphas,
                                            std::span<const double> betas);

std::vector<AuditReport> audit_all(std::span<const RealOperator> ops,
                                   double rel_tol = tolerance::kAuditRelative);

} // namespace realqm::ref
