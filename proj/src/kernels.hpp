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

// Per-point bodies shared by the OpenMP sweeps and their serial references.
#pragma once

#include <span>

#include "realqm/dynamics.hpp"
#include "realqm/entanglement.hpp"
#include "realqm/interferometer.hpp"

namespace realqm::detail {

void validate_times(std::span<const double> times);
RealOperator larmor_generator(double omega);
TrajectoryRecord larmor_record(const RealOperator &g, const RealState &v0, double t);

ArmProbabilities mzi_probabilities(double phi, Representation rep);
MziRecord mzi_record(double phi);

EntropyScanRecord entropy_scan_record(double alpha, double beta);

} // namespace realqm::detail
