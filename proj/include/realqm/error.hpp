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

#include <stdexcept>
#include <string>

namespace realqm {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together (odd real length, mismatched sizes).
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// A numerical precondition failed (non-Hermitian, non-unitary,
/// non-normalized, non-physical input).
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// A truncated Fock state reaches occupations where the ladder identities
/// no longer hold.
class GuardError : public Error {
  public:
    using Error::Error;
};

} // namespace realqm
