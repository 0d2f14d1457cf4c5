// Copyright 2026 The eonplan Authors
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

#ifndef EONPLAN_ERROR_HPP_
#define EONPLAN_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace eonplan {

// Base of every error raised by the library. The CLI maps ConfigError-like
// failures to exit code 2 and InvariantViolation to exit code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. The message names the line or XML element.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input carrying values outside the domain (negative rates,
// non-uniform sampling, duplicate rows).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

// Not enough data for the requested shape.
class SizeError : public Error {
 public:
  using Error::Error;
};

class NormalizationError : public Error {
 public:
  using Error::Error;
};

// Predictions file does not cover the requested (source, epoch, step) cells.
class CoverageError : public Error {
 public:
  using Error::Error;
};

// Requested epoch reaches past the end of the underlying trace.
class HorizonError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// A spectrum or metric invariant was found broken by an audit pass.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace eonplan

#endif  // EONPLAN_ERROR_HPP_
