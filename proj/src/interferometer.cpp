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
#include "realqm/interferometer.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "kernels.hpp"
#include "realqm/error.hpp"
#include "realqm/realmap.hpp"

namespace realqm {

namespace {

constexpr Complex kI(0.0, 1.0);

OpticalElement make_element(ElementKind kind, double phase, ComplexMatrix m) {
    RealOperator r = realify_op(m);
    return OpticalElement{kind, phase, std::move(m), std::move(r)};
}

std::array<OpticalElement, 3> mach_zehnder_elements(bool normalized) {
    OpticalElement bs = normalized ? beamsplitter() : beamsplitter_unnormalized();
    return {bs, mirror(), bs};
}

bool nearly_integer(double x) { return std::abs(x - std::round(x)) < 1e-12; }

} // namespace

namespace detail {

ArmProbabilities mzi_probabilities(double phi, Representation rep) {
    const std::array<OpticalElement, 4> elements = {beamsplitter(), mirror(), phase_shifter(phi),
                                                    beamsplitter()};
    if (rep == Representation::Complex) {
        const ComplexVector out = compose_complex(elements) * ComplexVector::basis(2, 0);
        return {std::norm(out[0]), std::norm(out[1])};
    }
    const RealState in{1.0, 0.0, 0.0, 0.0};
    const RealState out = compose_real(elements) * in;
    return {out[0] * out[0] + out[1] * out[1], out[2] * out[2] + out[3] * out[3]};
}

MziRecord mzi_record(double phi) {
    return MziRecord{phi, mzi_probabilities(phi, Representation::Complex),
                     mzi_probabilities(phi, Representation::Real)};
}

} // namespace detail

OpticalElement beamsplitter() {
    const double s = 1.0 / std::numbers::sqrt2;
    return make_element(ElementKind::BeamSplitter, 0.0,
                        ComplexMatrix{{s, s * kI}, {s * kI, s}});
}

OpticalElement beamsplitter_unnormalized() {
    return make_element(ElementKind::BeamSplitter, 0.0, ComplexMatrix{{1.0, kI}, {kI, 1.0}});
}

OpticalElement mirror() {
    return make_element(ElementKind::Mirror, 0.0, ComplexMatrix{{0.0, kI}, {kI, 0.0}});
}

OpticalElement phase_shifter(double phi) {
    return make_element(ElementKind::PhaseShifter, phi,
                        ComplexMatrix{{1.0, 0.0}, {0.0, std::polar(1.0, phi)}});
}

ComplexMatrix compose_complex(std::span<const OpticalElement> elements) {
    if (elements.empty()) {
        throw DimensionError("compose_complex: no elements");
    }
    ComplexMatrix out = elements.front().complex_form;
    for (std::size_t k = 1; k < elements.size(); ++k) {
        out = elements[k].complex_form * out;
    }
    return out;
}

RealOperator compose_real(std::span<const OpticalElement> elements) {
    if (elements.empty()) {
        throw DimensionError("compose_real: no elements");
    }
    RealOperator out = elements.front().real_form;
    for (std::size_t k = 1; k < elements.size(); ++k) {
        out = elements[k].real_form * out;
    }
    return out;
}

ComplexMatrix mach_zehnder_complex() { return compose_complex(mach_zehnder_elements(true)); }

RealOperator mach_zehnder_real() { return compose_real(mach_zehnder_elements(true)); }

ComplexMatrix mach_zehnder_unnormalized_complex() {
    return compose_complex(mach_zehnder_elements(false));
}

RealOperator mach_zehnder_unnormalized_real() {
    return compose_real(mach_zehnder_elements(false));
}

ArmProbabilities mach_zehnder_with_phase(double phi, Representation rep) {
    return detail::mzi_probabilities(phi, rep);
}

std::vector<MziRecord> mzi_sweep(std::span<const double> phases) {
    std::vector<MziRecord> records(phases.size());
    const auto count = static_cast<long>(phases.size());
#pragma omp parallel for schedule(static)
    for (long k = 0; k < count; ++k) {
        const auto i = static_cast<std::size_t>(k);
        records[i] = detail::mzi_record(phases[i]);
    }
    return records;
}

std::vector<double> phase_grid(int n) {
    if (n < 2) {
        throw ValidationError("phase_grid: need at least two points");
    }
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        out[static_cast<std::size_t>(k)] = 2.0 * std::numbers::pi * k / (n - 1);
    }
    return out;
}

std::optional<Complex> identity_multiple(const ComplexMatrix &m, double tol) {
    const Complex c = m.values().trace() / static_cast<double>(m.dim());
    if (distance(m, c * ComplexMatrix::identity(m.dim())) <= tol) {
        return c;
    }
    return std::nullopt;
}

std::optional<Complex> identity_multiple(const RealOperator &o, double tol) {
    const ComplexMatrix m = complexify_op(o);
    const Complex c = m.values().trace() / static_cast<double>(m.dim());
    if (distance(o, realify_op(c * ComplexMatrix::identity(m.dim()))) <= tol) {
        return c;
    }
    return std::nullopt;
}

std::string format_identity_multiple(Complex c) {
    if (std::abs(c.imag()) < 1e-12 && nearly_integer(c.real())) {
        const long k = std::lround(c.real());
        if (k == 1) {
            return "I";
        }
        if (k == -1) {
            return "-I";
        }
        return std::to_string(k) + "I";
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%.17g%+.17gi)I", c.real(), c.imag());
    return buf;
}

} // namespace realqm
