// Copyright 2026 The rieszlab Authors
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

#ifndef RIESZLAB_ERROR_HPP_
#define RIESZLAB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace rieszlab {

// Every failure raised by the library derives from Error. The subclasses
// separate caller mistakes by category so front ends can map them onto
// distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A payload that does not describe a valid element (unsorted breakpoints,
// wrong length, zero index, ...).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Operands live in different spaces, or an operator is applied outside its
// domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The request is meaningful in general but not available for this model,
// e.g. the order unit of the finitely supported sequences.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation was violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A named entity (check id, example operator, ...) does not exist.
class LookupError : public Error {
 public:
  using Error::Error;
};

}  // namespace rieszlab

#endif  // RIESZLAB_ERROR_HPP_
