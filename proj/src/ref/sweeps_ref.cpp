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
#include "realqm/ref.hpp"

#include "../kernels.hpp"

namespace realqm::ref {

std::vector<TrajectoryRecord> larmor_experiment(double omega, std::span<const double> times) {
    detail::validate_times(times);
    const RealOperator g = detail::larmor_generator(omega);
    const RealState v0 = larmor_initial_state();
    std::vector<TrajectoryRecord> records;
    records.reserve(times.size());
    for (double t : times) {
        records.push_back(detail::larmor_record(g, v0, t));
    }
    return records;
}

std::vector<MziRecord> mzi_sweep(std::span<const double> phases) {
    std::vector<MziRecord> records;
    records.reserve(phases.size());
    for (double phi : phases) {
        records.push_back(detail::mzi_record(phi));
    }
    return records;
}

std::vector<EntropyScanRecord> entropy_scan(std::span<const double> alphas,
                                            std::span<const double> betas) {
    std::vector<EntropyScanRecord> records;
    records.reserve(alphas.size() * betas.size());
    for (double alpha : alphas) {
        for (double beta : betas) {
            records.push_back(detail::entropy_scan_record(alpha, beta));
        }
    }
    return records;
}

std::vector<AuditReport> audit_all(std::span<const RealOperator> ops, double rel_tol) {
    std::vector<AuditReport> reports;
    reports.reserve(ops.size());
    for (const auto &op : ops) {
        reports.push_back(audit(op, rel_tol));
    }
    return reports;
}

} // namespace realqm::ref
