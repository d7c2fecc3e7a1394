// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace adasort {

/// Malformed arguments or input data (bad sizes, out-of-range parameters,
/// unparsable sequence files).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A formula evaluated outside the range where it is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A seeded construction could not produce the requested instance.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace adasort
