/*
   Copyright 2026 The veronese-cas Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "veronese/rational.hpp"

namespace veronese {

/// Machine-readable error names surfaced by the library and the CLI.
enum class ErrorKind {
  NotInAlgebra,
  NotADerivation,
  NotLocallyNilpotent,
  NotAnAutomorphism,
  NotGraded,
  NeedsRootExtension,
  DivisionNotExact,
  ParseError,
  SchemaError,
  UnknownVariable,
  RingMismatch,
  ArityMismatch,
  InvalidArgument,
};

std::string_view error_name(ErrorKind kind);

/// Base of every domain error. what() carries the context only; the
/// name comes from kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& context)
      : std::runtime_error(context), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

  /// "Name: context", the single-line form printed by the CLI.
  std::string describe() const;

 private:
  ErrorKind kind_;
};

/// No rational n-th root exists for `value`. The label names the quantity
/// in messages ("u=2, n=3").
class NeedsRootExtension : public Error {
 public:
  NeedsRootExtension(Rational value, long n, std::string label = "c");

  const Rational& value() const noexcept { return value_; }
  long index() const noexcept { return n_; }

 private:
  Rational value_;
  long n_;
};

class NotLocallyNilpotent : public Error {
 public:
  explicit NotLocallyNilpotent(const std::string& context, long cap = 0)
      : Error(ErrorKind::NotLocallyNilpotent, context), cap_(cap) {}

  /// Iteration cap that was exhausted, or 0 when the failure is structural.
  long cap() const noexcept { return cap_; }

 private:
  long cap_;
};

}  // namespace veronese
