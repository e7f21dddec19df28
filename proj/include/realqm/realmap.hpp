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
 * Realification: the isomorphism between complex linear algebra on C^n and
 * the real 2x2-block representation on R^{2n}.
 *
 * A complex amplitude c = x + iy becomes the pair (x, y), stored interleaved:
 *
 *     (c0, c1, ...) -> (Re c0, Im c0, Re c1, Im c1, ...)
 *
 * A complex matrix entry M_pq becomes the 2x2 block Re(M_pq) I + Im(M_pq) J,
 * where
 *
 *     J = [[0, -1],
 *          [1,  0]]
 *
 * is the real matrix that multiplies a pair (x, y) by i. In tensor language
 * the interleaved layout is C^n (x) R^2 with the amplitude index major; the
 * equivalent "pair factor first" layout R^2 (x) C^n differs only by a
 * permutation of basis vectors and is not used here.
 */
#pragma once

#include "realqm/types.hpp"

namespace realqm {

/// Interleaved real encoding of @p v. Preserves the Euclidean norm exactly.
RealState realify_state(const ComplexVector &v);

/// Inverse of realify_state.
ComplexVector complexify_state(const RealState &r);

/// Block-wise realification: block(p, q) = Re(M_pq) I2 + Im(M_pq) J.
RealOperator realify_op(const ComplexMatrix &m);

/// Reads a complex matrix back out of the 2x2 blocks of @p o.
///
/// Each block [[a, b], [c, d]] maps to ((a + d) / 2) + i ((c - b) / 2), which
/// is exact on realified operators and discards the anti-linear part of
/// anything else.
ComplexMatrix complexify_op(const RealOperator &o);

/// The complex structure on R^{2n}: block-diagonal J, equal to
/// realify_op(i I_n). Satisfies J^2 = -I and J^T = -J.
RealOperator j_operator(Index n);

/// Complex conjugation on R^{2n}: block-diagonal diag(1, -1). Anti-linear.
RealOperator conjugation_operator(Index n);

/// Multiplies the encoded state by the complex scalar @p z, i.e. applies
/// Re(z) I + Im(z) J.
RealState scalar_action(Complex z, const RealState &r);

} // namespace realqm
