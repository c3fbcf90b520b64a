// Copyright 2026 The qslkit Authors
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

#include <stdexcept>
#include <string>

namespace qslkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: non-finite entries, dimension mismatch, non-Hermitian
/// input where Hermitian is required, unsupported options.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Inputs that are individually valid but contradict each other.
class InconsistentInput : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of a bound does not hold (e.g. negative
/// Hamiltonian spectrum for the unitary bound).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The time-dependent decay rate was evaluated on one of its poles.
class PoleError : public Error {
 public:
  explicit PoleError(double location)
      : Error("decay rate pole at t = " + std::to_string(location)),
        location_(location) {}

  double location() const noexcept { return location_; }

 private:
  double location_;
};

/// A numerical routine could not reach its requested accuracy. The
/// offending interval [lower, upper] is carried along for diagnostics.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double lower, double upper)
      : Error(what + " (interval [" + std::to_string(lower) + ", " +
              std::to_string(upper) + "])"),
        lower_(lower),
        upper_(upper) {}

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }

 private:
  double lower_;
  double upper_;
};

}  // namespace qslkit
