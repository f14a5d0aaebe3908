// Copyright 2026 The xichar Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xichar {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Errors caused by bad user input (malformed files, specifiers, caps).
/// The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Errors that indicate a broken computation. The CLI maps these to exit
/// code 1 because they mean a verification did not go through.
class InternalError : public Error {
 public:
  using Error::Error;
};

#define XICHAR_DEFINE_ERROR(Name, Base) \
  class Name : public Base {            \
   public:                              \
    using Base::Base;                   \
  };

XICHAR_DEFINE_ERROR(InvalidPermutation, InputError)
XICHAR_DEFINE_ERROR(ClosureCapExceeded, InputError)
XICHAR_DEFINE_ERROR(UnsupportedFamily, InputError)
XICHAR_DEFINE_ERROR(NotCoprime, InputError)
XICHAR_DEFINE_ERROR(OrderMismatch, InputError)
XICHAR_DEFINE_ERROR(NotLinear, InputError)

XICHAR_DEFINE_ERROR(SylowSearchFailed, InternalError)
XICHAR_DEFINE_ERROR(NotRationalInteger, InternalError)
XICHAR_DEFINE_ERROR(SplitFailure, InternalError)
XICHAR_DEFINE_ERROR(LiftInconsistency, InternalError)
XICHAR_DEFINE_ERROR(WitnessUnexpectedlyIntegral, InternalError)
XICHAR_DEFINE_ERROR(NoIntegerSolution, InternalError)
XICHAR_DEFINE_ERROR(NonIntegralInducedValue, InternalError)

#undef XICHAR_DEFINE_ERROR

/// Syntax error in a group specifier or group description file.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace xichar
