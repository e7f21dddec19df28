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
#include "realqm/indefinite_metric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "realqm/error.hpp"
#include "realqm/linalg.hpp"

namespace realqm {

namespace {

// Standard truncated annihilator: a|n> = sqrt(n) |n-1>.
Eigen::MatrixXd annihilator(int n) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        a(k - 1, k) = std::sqrt(static_cast<double>(k));
    }
    return a;
}

IndefiniteSpace fock_space(int cutoff, int transverse) {
    std::vector<int> signature;
    std::vector<std::string> labels;
    signature.reserve(static_cast<std::size_t>(cutoff * cutoff * transverse));
    for (int n3 = 0; n3 < cutoff; ++n3) {
        for (int n0 = 0; n0 < cutoff; ++n0) {
            for (int nt = 0; nt < transverse; ++nt) {
                signature.push_back(n0 % 2 == 0 ? 1 : -1);
                labels.push_back("|" + std::to_string(n3) + "," + std::to_string(n0) + "," +
                                 std::to_string(nt) + ">");
            }
        }
    }
    return IndefiniteSpace(std::move(signature), std::move(labels));
}

void require_dim(const FockToy &toy, const Eigen::VectorXd &psi, const char *what) {
    if (psi.size() != toy.dim()) {
        throw DimensionError(std::string(what) + ": state has " + std::to_string(psi.size()) +
                             " components, expected " + std::to_string(toy.dim()));
    }
}

void require_guard(const FockToy &toy, const Eigen::VectorXd &psi, const char *what) {
    if (!toy.within_guard(psi)) {
        throw GuardError(std::string(what) + ": state has support above occupation " +
                         std::to_string(toy.guard()));
    }
}

void require_physical(const FockToy &toy, const Eigen::VectorXd &psi, double tol,
                      const char *what) {
    const double residual = (toy.constraint() * psi).norm();
    if (residual > tol * std::max(1.0, psi.norm())) {
        throw ValidationError(std::string(what) + ": state violates (a3 - a0)|psi> = 0 (residual " +
                              std::to_string(residual) + ")");
    }
}

} // namespace

// IndefiniteSpace

IndefiniteSpace::IndefiniteSpace(std::vector<int> signature, std::vector<std::string> labels)
    : signature_(std::move(signature)), labels_(std::move(labels)) {
    if (signature_.empty()) {
        throw ValidationError("IndefiniteSpace: empty signature");
    }
    if (!labels_.empty() && labels_.size() != signature_.size()) {
        throw ValidationError("IndefiniteSpace: label count does not match dimension");
    }
    diagonal_.resize(dim());
    for (std::size_t k = 0; k < signature_.size(); ++k) {
        if (signature_[k] != 1 && signature_[k] != -1) {
            throw ValidationError("IndefiniteSpace: signature entries must be +1 or -1");
        }
        diagonal_(static_cast<Index>(k)) = signature_[k];
    }
}

Eigen::MatrixXd IndefiniteSpace::metric() const { return diagonal_.asDiagonal(); }

double eta_inner(const Eigen::VectorXd &v, const Eigen::VectorXd &w,
                 const IndefiniteSpace &space) {
    if (v.size() != space.dim() || w.size() != space.dim()) {
        throw DimensionError("eta_inner: dimension mismatch");
    }
    return v.dot(space.metric_diagonal().cwiseProduct(w));
}

Complex eta_inner(const ComplexVector &v, const ComplexVector &w, const IndefiniteSpace &space) {
    if (v.dim() != space.dim() || w.dim() != space.dim()) {
        throw DimensionError("eta_inner: dimension mismatch");
    }
    // Eigen's dot conjugates its left operand.
    return v.values().dot(space.metric_diagonal().cast<Complex>().cwiseProduct(w.values()));
}

IndefiniteSpace indefinite_qubit() { return IndefiniteSpace({1, -1}, {"|0>", "|1>"}); }

IndefiniteSpace indefinite_qubit_pair() {
    return IndefiniteSpace({1, -1, -1, 1}, {"|00>", "|01>", "|10>", "|11>"});
}

Eigen::Vector2d boost_normalize(double x) { return {std::cosh(x), std::sinh(x)}; }

Eigen::Vector2d orthogonal_partner(const Eigen::Vector2d &v) { return {v(1), v(0)}; }

Eigen::Matrix4d pair_constraint_operator() {
    Eigen::MatrixXd raise(2, 2);
    raise << 0.0, 0.0, 1.0, 0.0;
    const Eigen::MatrixXd lower = raise.transpose();
    return linalg::kron(raise, lower) + linalg::kron(lower, raise);
}

double pair_constraint_residual(const Eigen::VectorXd &v) {
    if (v.size() != 4) {
        throw DimensionError("pair_constraint_residual: expected a 4-component state");
    }
    return (pair_constraint_operator() * v).norm();
}

PairPhysicalSubspace pair_physical_subspace(double tol) {
    const Eigen::JacobiSVD<Eigen::Matrix4d> svd(pair_constraint_operator(), Eigen::ComputeFullV);
    const Eigen::Vector4d &sv = svd.singularValues();
    const Eigen::Index rank = (sv.array() > tol).count();

    PairPhysicalSubspace out;
    // Singular values are sorted descending, so the kernel is the tail of V.
    out.basis = svd.matrixV().rightCols(4 - rank);
    const Eigen::MatrixXd restricted =
        out.basis.transpose() * indefinite_qubit_pair().metric() * out.basis;
    out.restricted_metric_eigenvalues =
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(restricted, Eigen::EigenvaluesOnly)
            .eigenvalues();
    return out;
}

// FockToy

FockToy::FockToy(int cutoff, int transverse_cutoff)
    : cutoff_(cutoff), transverse_cutoff_(transverse_cutoff),
      space_(fock_space(std::max(cutoff, 1), std::max(transverse_cutoff, 1))) {
    if (cutoff < 4) {
        throw ValidationError("FockToy: cutoff must be at least 4, got " + std::to_string(cutoff));
    }
    if (transverse_cutoff < 1) {
        throw ValidationError("FockToy: transverse cutoff must be at least 1");
    }
    const Eigen::MatrixXd a = annihilator(cutoff);
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(cutoff, cutoff);
    const Eigen::MatrixXd id_t = Eigen::MatrixXd::Identity(transverse_cutoff, transverse_cutoff);

    a3_ = linalg::kron(linalg::kron(a, id), id_t);
    a0_ = linalg::kron(linalg::kron(id, a), id_t);
    a3_dag_ = metric_adjoint(a3_);
    a0_dag_ = metric_adjoint(a0_);
}

Eigen::MatrixXd FockToy::metric_adjoint(const Eigen::MatrixXd &x) const {
    const Eigen::VectorXd &g = space_.metric_diagonal();
    return g.asDiagonal() * x.transpose() * g.asDiagonal();
}

Index FockToy::index(int n3, int n0, int nt) const {
    if (n3 < 0 || n3 >= cutoff_ || n0 < 0 || n0 >= cutoff_ || nt < 0 ||
        nt >= transverse_cutoff_) {
        throw DimensionError("FockToy::index: occupation out of range");
    }
    return (static_cast<Index>(n3) * cutoff_ + n0) * transverse_cutoff_ + nt;
}

Eigen::VectorXd FockToy::basis_state(int n3, int n0, int nt) const {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(dim());
    v(index(n3, n0, nt)) = 1.0;
    return v;
}

Eigen::MatrixXd FockToy::guarded_projector() const {
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(dim());
    for (int n3 = 0; n3 <= guard(); ++n3) {
        for (int n0 = 0; n0 <= guard(); ++n0) {
            for (int nt = 0; nt < transverse_cutoff_; ++nt) {
                diag(index(n3, n0, nt)) = 1.0;
            }
        }
    }
    return diag.asDiagonal();
}

bool FockToy::within_guard(const Eigen::VectorXd &psi) const {
    if (psi.size() != dim()) {
        return false;
    }
    for (int n3 = 0; n3 < cutoff_; ++n3) {
        for (int n0 = 0; n0 < cutoff_; ++n0) {
            if (n3 <= guard() && n0 <= guard()) {
                continue;
            }
            for (int nt = 0; nt < transverse_cutoff_; ++nt) {
                if (psi(index(n3, n0, nt)) != 0.0) {
                    return false;
                }
            }
        }
    }
    return true;
}

FockToy build_fock_toy(int cutoff, int transverse_cutoff) {
    return FockToy(cutoff, transverse_cutoff);
}

double gb_constraint_residual(const FockToy &toy, const Eigen::VectorXd &psi) {
    require_dim(toy, psi, "gb_constraint_residual");
    require_guard(toy, psi, "gb_constraint_residual");
    return (toy.constraint() * psi).norm();
}

Eigen::VectorXd ghost_emit(const FockToy &toy, const Eigen::VectorXd &psi, double lambda,
                           double tol) {
    require_dim(toy, psi, "ghost_emit");
    require_guard(toy, psi, "ghost_emit");
    require_physical(toy, psi, tol, "ghost_emit");
    return psi + lambda * (toy.emission() * psi);
}

Eigen::VectorXd ghost_pair(const FockToy &toy) { return toy.emission() * toy.vacuum(); }

double overlap_invariance_check(const FockToy &toy, const Eigen::VectorXd &psi,
                                const Eigen::VectorXd &psi1, double lambda, int emissions) {
    require_dim(toy, psi1, "overlap_invariance_check");
    require_guard(toy, psi1, "overlap_invariance_check");
    require_physical(toy, psi1, tolerance::kFrobenius, "overlap_invariance_check");
    if (emissions < 0) {
        throw ValidationError("overlap_invariance_check: emissions must be non-negative");
    }
    Eigen::VectorXd emitted = psi;
    for (int k = 0; k < emissions; ++k) {
        emitted = ghost_emit(toy, emitted, lambda);
    }
    if (emissions == 0) {
        require_dim(toy, psi, "overlap_invariance_check");
    }
    return std::abs(eta_inner(emitted, psi1, toy.space()) - eta_inner(psi, psi1, toy.space()));
}

} // namespace realqm
