/* Copyright 2026 The Meadow Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef MEADOW_ERRORS_HPP_
#define MEADOW_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace meadow {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (non-prime modulus, mismatched
// coefficient fields, non-idempotent argument, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A carrier would exceed the configured size bound.
class BoundError : public Error {
 public:
  using Error::Error;
};

// Textual input (descriptor, RingSpec file) is malformed.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Raised when a structure that must be a meadow is not one.
class NotAMeadowError : public Error {
 public:
  NotAMeadowError(const std::string& what, std::uint32_t witness)
      : Error(what), witness_(witness) {}
  std::uint32_t witness() const noexcept { return witness_; }

 private:
  std::uint32_t witness_;
};

// An identity that holds in every valid input failed. Indicates corrupted
// tables or a library bug, never a legitimate outcome.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace meadow

#endif  // MEADOW_ERRORS_HPP_
