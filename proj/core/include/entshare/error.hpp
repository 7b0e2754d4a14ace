// Copyright 2026 The entshare Authors
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

namespace entshare {

/** Base class for every error raised by the library. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Operand sizes disagree (qubit counts, matrix dimensions). */
class DimensionError : public Error {
 public:
  using Error::Error;
};

/** Request exceeds the dense-simulation qubit limit. */
class CapacityError : public Error {
 public:
  using Error::Error;
};

/** Malformed text or JSON input. */
class ParseError : public Error {
 public:
  using Error::Error;
};

/** Unknown built-in name or subsystem label. */
class LookupError : public Error {
 public:
  using Error::Error;
};

/** A stabilizer code failed validation. */
class ValidationError : public Error {
 public:
  using Error::Error;
};

/** Argument outside its documented domain. */
class InputError : public Error {
 public:
  using Error::Error;
};

/** Recovery requested for a subset that is not authorized. */
class AuthorizationError : public Error {
 public:
  using Error::Error;
};

/** Matrix failed a numerical sanity check (e.g. not PSD). */
class NumericalError : public Error {
 public:
  using Error::Error;
};

/** Fewer classical shares than the threshold. */
class InsufficientSharesError : public Error {
 public:
  using Error::Error;
};

/** Classical shares do not lie on a single polynomial. */
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace entshare
