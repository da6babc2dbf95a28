// Copyright 2026 The homlab Authors
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

#ifndef HOMLAB_ERROR_HPP
#define HOMLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace homlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// A solver call ran out of time or nodes before reaching a definitive answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// The requested interval is the gap (K1, K2) up to homomorphic equivalence.
class GapError : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

/// A candidate stream was exhausted without producing a verified construction.
class NotFound : public Error {
 public:
  using Error::Error;
};

/// A construction failed one of its mandatory checks.
class ConstructionRejected : public Error {
 public:
  ConstructionRejected(std::string check, const std::string& detail)
      : Error("construction rejected by check '" + check + "': " + detail),
        check_(std::move(check)) {}

  const std::string& check() const noexcept { return check_; }

 private:
  std::string check_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace homlab

#endif  // HOMLAB_ERROR_HPP
