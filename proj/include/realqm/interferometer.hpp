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
 * Mach-Zehnder interferometer in the complex and in the real representation.
 *
 * Elements act on the two arms |0>, |1>. Beamsplitters are normalized,
 * (1/sqrt2) [[1, i], [i, 1]], so that BS M BS = -I and BS^2 = M, where
 * M = [[0, i], [i, 0]] is the mirror pair. The unnormalized beamsplitter
 * [[1, i], [i, 1]] is available separately; with it the composite is -2 I.
 */
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "realqm/types.hpp"

namespace realqm {

enum class ElementKind { BeamSplitter, Mirror, PhaseShifter };

enum class Representation { Complex, Real };

struct OpticalElement {
    ElementKind kind;
    /// Radians; zero unless kind == PhaseShifter.
    double phase = 0.0;
    ComplexMatrix complex_form;
    /// Always realify_op(complex_form).
    RealOperator real_form;
};

OpticalElement beamsplitter();
/// [[1, i], [i, 1]] without the 1/sqrt2; not unitary.
OpticalElement beamsplitter_unnormalized();
OpticalElement mirror();
/// diag(1, e^{i phi}) on the second arm.
OpticalElement phase_shifter(double phi);

/// Product of the elements in the order light meets them: elements[0] acts
/// first, so the result is elements[n-1] * ... * elements[0].
ComplexMatrix compose_complex(std::span<const OpticalElement> elements);
RealOperator compose_real(std::span<const OpticalElement> elements);

/// BS M BS with normalized beamsplitters; equals -I.
ComplexMatrix mach_zehnder_complex();
RealOperator mach_zehnder_real();
/// The same product with unnormalized beamsplitters; equals -2 I.
ComplexMatrix mach_zehnder_unnormalized_complex();
RealOperator mach_zehnder_unnormalized_real();

struct ArmProbabilities {
    double p0 = 0.0;
    double p1 = 0.0;
};

/// Output probabilities for a photon entering arm 0 of BS, M, P(phi), BS.
/// The Real path uses only real matrices and the real encoding of |0>.
ArmProbabilities mach_zehnder_with_phase(double phi,
                                         Representation rep = Representation::Real);

struct MziRecord {
    double phi = 0.0;
    ArmProbabilities complex_path;
    ArmProbabilities real_path;
};

/// Evaluates mach_zehnder_with_phase in both representations at each phase,
/// in parallel when OpenMP is enabled. Output order matches input order.
std::vector<MziRecord> mzi_sweep(std::span<const double> phases);

/// @p n equally spaced phases covering [0, 2 pi] inclusive. Requires n >= 2.
std::vector<double> phase_grid(int n);

/// Returns c when ||m - c I||_F <= tol.
std::optional<Complex> identity_multiple(const ComplexMatrix &m,
                                         double tol = tolerance::kFrobenius);
/// Returns c when ||o - realify_op(c I)||_F <= tol.
std::optional<Complex> identity_multiple(const RealOperator &o,
                                         double tol = tolerance::kFrobenius);

/// Human-readable form of c I: "-I", "-2I", "(0.5+1i)I", ...
std::string format_identity_multiple(Complex c);

} // namespace realqm
