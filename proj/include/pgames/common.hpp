// Copyright 2026 The pgames Authors.
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

#ifndef PGAMES_COMMON_HPP_
#define PGAMES_COMMON_HPP_

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace pgames {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Band used when collecting tied maximizers and checking that a probability
// vector sums to one.
inline constexpr double kTieTolerance = 1e-12;

// Regret / exploitability certificates.
inline constexpr double kCertificateTolerance = 1e-9;

// Base of every error a caller can reasonably recover from: bad dimensions,
// out-of-range parameters, degenerate inputs to a closed form.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A closed-form expression hit a zero denominator.
class DegenerateInputError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A parameter is outside its documented range. `field()` names it so the CLI
// and the HTTP service can point at the offending input.
class ParameterError : public DomainError {
 public:
  ParameterError(std::string field, const std::string& message)
      : DomainError(message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

inline void require_probability(const std::string& field, double value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ParameterError(field, field + " must be a probability in [0, 1]");
  }
}

}  // namespace pgames

#endif  // PGAMES_COMMON_HPP_
