// Copyright 2026 The edgequbit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace edgequbit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands defined on different chain lengths, or a site index out of range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Invalid model specification (family, length, couplings).
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the supported numerical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Request exceeds a configured size cap (dense dimension, memory budget).
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Configuration failed validation; the message names the offending key.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class NotHermitianError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace edgequbit
