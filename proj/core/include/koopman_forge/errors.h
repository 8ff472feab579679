// Copyright 2026 The Koopman Forge Authors. All Rights Reserved.
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

#ifndef KOOPMAN_FORGE_ERRORS_H_
#define KOOPMAN_FORGE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace koopman_forge {

// Base class for every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input data violates a type invariant (not doubly stochastic, pieces do not
// tile [0,1), malformed rational, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A point was passed outside the domain [0,1).
class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A configured resource limit (dyadic level, piece count) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace koopman_forge

#endif  // KOOPMAN_FORGE_ERRORS_H_
