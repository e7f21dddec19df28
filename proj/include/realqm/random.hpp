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

// Seeded generators for randomized checks. Entries are standard normal.
#pragma once

#include <random>

#include "realqm/types.hpp"

namespace realqm::random {

using Rng = std::mt19937_64;

ComplexMatrix complex_matrix(Index n, Rng &rng);
/// (A + A^dagger) / 2 for a Gaussian A.
ComplexMatrix hermitian(Index n, Rng &rng);
/// Haar-distributed: Q from the QR of a Gaussian matrix with R's diagonal
/// phases divided out.
ComplexMatrix unitary(Index n, Rng &rng);
ComplexVector state(Index n, Rng &rng);
Eigen::MatrixXd real_matrix(Index n, Rng &rng);

} // namespace realqm::random
