/* Copyright 2026 The qfe Authors.

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

#ifndef QFE_ERROR_HPP_
#define QFE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace qfe {

// Base class for mathematical failures raised by the library. Precondition
// violations (bad indices, malformed descriptors) use std::invalid_argument.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two operands live over different coefficient rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

// exact_div found a nonzero remainder.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

}  // namespace qfe

#endif  // QFE_ERROR_HPP_
