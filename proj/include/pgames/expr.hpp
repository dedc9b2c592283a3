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

#ifndef PGAMES_EXPR_HPP_
#define PGAMES_EXPR_HPP_

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>

#include "pgames/common.hpp"

namespace pgames {

// Parameter name -> value.
using Assignment = std::map<std::string, double, std::less<>>;

class EvaluationError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Immutable arithmetic expression over named parameters. Copies share the
// underlying tree, so passing by value is cheap and thread-safe.
class Expr {
 public:
  enum class Kind { kNumber, kParam, kNeg, kAdd, kSub, kMul, kDiv, kAbs, kFloor, kCeil };

  static Expr number(double value);
  static Expr param(std::string name);
  static Expr unary(Kind kind, Expr operand);
  static Expr binary(Kind kind, Expr lhs, Expr rhs);

  Kind kind() const;
  // Only meaningful for kNumber / kParam respectively.
  double value() const;
  const std::string& name() const;
  // Operand of unary nodes is lhs().
  const Expr& lhs() const;
  const Expr& rhs() const;

  bool is_unary() const;
  bool is_binary() const;

  // Throws EvaluationError on division by zero or an unbound parameter.
  double evaluate(const Assignment& assignment) const;

  void collect_params(std::set<std::string>& out) const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Expr operator+(Expr lhs, Expr rhs);
Expr operator-(Expr lhs, Expr rhs);
Expr operator*(Expr lhs, Expr rhs);
Expr operator/(Expr lhs, Expr rhs);
Expr operator-(Expr operand);
Expr abs(Expr operand);
Expr floor(Expr operand);
Expr ceil(Expr operand);

// Canonical text with the minimum parentheses needed to reparse into the same
// tree shape. Numbers use the shortest representation that round-trips.
std::string render(const Expr& expr);

std::string format_number(double value);

}  // namespace pgames

#endif  // PGAMES_EXPR_HPP_
