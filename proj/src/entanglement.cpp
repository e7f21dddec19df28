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
#include "realqm/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kernels.hpp"
#include "realqm/error.hpp"
#include "realqm/linalg.hpp"
#include "realqm/realmap.hpp"

namespace realqm {

namespace {

constexpr double kUndefinedWeight = 1e-15;

void require_qubit(const RealState &r, const char *what) {
    if (r.dim2() != 4) {
        throw DimensionError(std::string(what) + ": expected a 4-component encoding");
    }
}

void require_normalized(const RealState &r, const char *what) {
    require_qubit(r, what);
    if (std::abs(r.norm() - 1.0) > tolerance::kNormalized) {
        throw ValidationError(std::string(what) + ": state is not normalized");
    }
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

} // namespace

namespace detail {

EntropyScanRecord entropy_scan_record(double alpha, double beta) {
    const EntanglementReport rep = entanglement_entropy(realify_state(scan_state(alpha, beta)));
    return EntropyScanRecord{alpha, beta, rep.det_rho1, rep.entropy_nats, rep.cls};
}

} // namespace detail

RealState ConditionalDecomposition::reconstruct() const {
    const Eigen::Vector2d a = weight_a * unit_a;
    const Eigen::Vector2d b = weight_b * unit_b;
    return RealState{a(0), a(1), b(0), b(1)};
}

ConditionalDecomposition conditional_decomposition(const RealState &r) {
    require_normalized(r, "conditional_decomposition");
    ConditionalDecomposition d;
    const Eigen::Vector2d a(r[0], r[1]);
    const Eigen::Vector2d b(r[2], r[3]);
    d.weight_a = a.norm();
    d.weight_b = b.norm();
    d.defined_a = d.weight_a >= kUndefinedWeight;
    d.defined_b = d.weight_b >= kUndefinedWeight;
    if (d.defined_a) {
        d.unit_a = a / d.weight_a;
    } else {
        d.weight_a = 0.0;
    }
    if (d.defined_b) {
        d.unit_b = b / d.weight_b;
    } else {
        d.weight_b = 0.0;
    }
    return d;
}

Eigen::Matrix2d reduced_density_first(const RealState &r) {
    require_normalized(r, "reduced_density_first");
    const double ar = r[0], ai = r[1], br = r[2], bi = r[3];
    Eigen::Matrix2d rho;
    rho(0, 0) = ar * ar + br * br;
    rho(0, 1) = ar * ai + br * bi;
    rho(1, 0) = rho(0, 1);
    rho(1, 1) = ai * ai + bi * bi;
    return rho;
}

std::string_view to_string(EntanglementClass c) {
    switch (c) {
    case EntanglementClass::Product:
        return "Product";
    case EntanglementClass::Partial:
        return "Partial";
    case EntanglementClass::Maximal:
        return "Maximal";
    }
    return "Unknown";
}

double EntanglementReport::entropy_bits() const { return entropy_nats / std::numbers::ln2; }

EntanglementReport entanglement_entropy(const RealState &r, double tol) {
    EntanglementReport rep;
    rep.rho1 = reduced_density_first(r);
    // Rounding can push the determinant just outside [0, 1/4].
    rep.det_rho1 = std::clamp(rep.rho1.determinant(), 0.0, 0.25);
    const double cross = r[0] * r[3] - r[1] * r[2];
    rep.det_closed_form = cross * cross;

    const double disc = std::sqrt(1.0 - 4.0 * rep.det_rho1);
    rep.r1 = 0.5 * (1.0 + disc);
    // 1 - r1 without cancellation when det is small.
    rep.r2 = 2.0 * rep.det_rho1 / (1.0 + disc);
    rep.entropy_nats = 0.0 - xlogx(rep.r1) - xlogx(rep.r2);

    if (std::abs(rep.det_rho1 - 0.25) <= tol) {
        rep.cls = EntanglementClass::Maximal;
    } else if (rep.det_rho1 <= tol) {
        rep.cls = EntanglementClass::Product;
    } else {
        rep.cls = EntanglementClass::Partial;
    }
    return rep;
}

EntanglementClass classify_entanglement(const RealState &r, double tol) {
    return entanglement_entropy(r, tol).cls;
}

bool maximal_witness(const RealState &r, double tol) {
    require_normalized(r, "maximal_witness");
    return std::abs(r[0] - r[3]) <= tol && std::abs(r[1] + r[2]) <= tol;
}

bool product_witness(const RealState &r, double tol) {
    require_normalized(r, "product_witness");
    const bool a_zero = std::hypot(r[0], r[1]) <= tol;
    const bool b_zero = std::hypot(r[2], r[3]) <= tol;
    const bool equal = std::abs(r[0] - r[2]) <= tol && std::abs(r[1] - r[3]) <= tol;
    return a_zero || b_zero || equal;
}

ComplexVector kron(const ComplexVector &psi, const ComplexVector &phi) {
    Eigen::VectorXcd out(psi.dim() * phi.dim());
    for (Index k = 0; k < psi.dim(); ++k) {
        for (Index l = 0; l < phi.dim(); ++l) {
            out(k * phi.dim() + l) = psi[k] * phi[l];
        }
    }
    return ComplexVector(std::move(out));
}

RealState encode_local(const ComplexVector &psi, const ComplexVector &phi) {
    if (psi.dim() != 2 || phi.dim() != 2) {
        throw DimensionError("encode_local: expected two one-qubit states");
    }
    if (!psi.is_normalized() || !phi.is_normalized()) {
        throw ValidationError("encode_local: inputs must be normalized");
    }
    return RealState(
        linalg::kron(realify_state(psi).values(), realify_state(phi).values()));
}

CouplingCheck coupling_commutation_check(double theta, const ComplexMatrix &ua,
                                         const ComplexMatrix &ub) {
    if (ua.dim() != 2 || ub.dim() != 2) {
        throw DimensionError("coupling_commutation_check: expected 2x2 unitaries");
    }
    if (!ua.is_unitary() || !ub.is_unitary()) {
        throw ValidationError("coupling_commutation_check: inputs must be unitary");
    }
    const Eigen::MatrixXd j = j_operator(2).values();
    const Eigen::MatrixXd x = linalg::kron(j, j);
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(x.rows(), x.cols());
    const Eigen::MatrixXd coupling = linalg::expm(theta * x);
    const Eigen::MatrixXd local =
        linalg::kron(realify_op(ua).values(), realify_op(ub).values());

    CouplingCheck out;
    out.commutator_residual = linalg::commutator(coupling, local).norm();
    out.closed_form_deviation =
        (coupling - (std::cosh(theta) * id + std::sinh(theta) * x)).norm();
    out.square_deviation = (x * x - id).norm();
    return out;
}

ComplexVector scan_state(double alpha, double beta) {
    return ComplexVector{Complex(std::cos(beta), 0.0), std::polar(std::sin(beta), alpha)};
}

std::vector<EntropyScanRecord> entropy_scan(std::span<const double> alphas,
                                            std::span<const double> betas) {
    const std::size_t nb = betas.size();
    std::vector<EntropyScanRecord> records(alphas.size() * nb);
    const auto count = static_cast<long>(records.size());
#pragma omp parallel for schedule(static)
    for (long k = 0; k < count; ++k) {
        const auto i = static_cast<std::size_t>(k);
        records[i] = detail::entropy_scan_record(alphas[i / nb], betas[i % nb]);
    }
    return records;
}

} // namespace realqm
