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
#pragma once

#include "realqm/types.hpp"

namespace realqm {

/// Reference propagator exp(-i H t / hbar) v0 in complex arithmetic.
///
/// Diagonalizes H with a Hermitian eigensolver and applies the phases
/// e^{-i lambda t / hbar} in the eigenbasis. Shares no code with the real
/// representation or its matrix exponential, so it can serve as an
/// independent check on both. Throws ValidationError for non-Hermitian H or
/// hbar <= 0, DimensionError for mismatched sizes.
ComplexVector oracle_complex_propagate(const ComplexMatrix &h, const ComplexVector &v0, double t,
                                       double hbar = 1.0);

} // namespace realqm
