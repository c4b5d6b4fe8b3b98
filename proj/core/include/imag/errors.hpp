// Copyright 2026 The imaginarity Authors
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

#ifndef IMAG_ERRORS_HPP
#define IMAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace imag {

/// Base class for every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical kernel.
class NotHermitianError : public Error { public: using Error::Error; };
class NoConvergenceError : public Error { public: using Error::Error; };
class NotPSDError : public Error { public: using Error::Error; };
class DimensionMismatchError : public Error { public: using Error::Error; };

// State handling.
class NotIsometryError : public Error { public: using Error::Error; };
class RankMismatchError : public Error { public: using Error::Error; };

/// A state or channel violated a structural invariant. `invariant()` names
/// the first violated invariant (e.g. "hermitian", "trace_one").
class ValidationError : public Error {
 public:
  ValidationError(const std::string& invariant, const std::string& msg)
      : Error(invariant + ": " + msg), invariant_(invariant) {}
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

// Monotone function registry.
class UnknownNameError : public Error { public: using Error::Error; };
class ParamOutOfRangeError : public Error { public: using Error::Error; };

// Pure-state geometry.
class NegativeRadicandError : public Error { public: using Error::Error; };

// Channels and convertibility.
class NotQubitError : public Error { public: using Error::Error; };
class DegenerateDenominatorError : public Error { public: using Error::Error; };
class UnsupportedPairError : public Error { public: using Error::Error; };

// No-go witness search.
class WrongFormError : public Error { public: using Error::Error; };
class NoWitnessFoundError : public Error { public: using Error::Error; };

}  // namespace imag

#endif
