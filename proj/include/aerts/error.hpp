// Copyright 2026 The aerts-machines Authors
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

namespace aerts {

/// Base class for every error raised by the library.
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Spin amplitudes that are not normalized.
class InvalidState : public Error {
 public:
  using Error::Error;
};

/// Zero or non-unit direction vectors.
class InvalidDirection : public Error {
 public:
  using Error::Error;
};

/// Out-of-range numeric parameters (epsilon, trial counts, lengths, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Expectation values outside [-1, 1].
class InvalidExpectation : public Error {
 public:
  using Error::Error;
};

/// Experiments issued from the wrong side of a coincidence setup.
class InvalidExperiment : public Error {
 public:
  using Error::Error;
};

/// A band that was already carried off intact and cannot be pulled again.
class ConsumedEntity : public Error {
 public:
  using Error::Error;
};

}  // namespace aerts
