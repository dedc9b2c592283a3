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

#include "pgames/expr.hpp"

#include <charconv>
#include <cmath>
#include <optional>

namespace pgames {

struct Expr::Node {
  Kind kind;
  double value = 0.0;
  std::string name;
  std::optional<Expr> lhs;
  std::optional<Expr> rhs;
};

namespace {

bool unary_kind(Expr::Kind kind) {
  switch (kind) {
    case Expr::Kind::kNeg:
    case Expr::Kind::kAbs:
    case Expr::Kind::kFloor:
    case Expr::Kind::kCeil:
      return true;
    default:
      return false;
  }
}

bool binary_kind(Expr::Kind kind) {
  switch (kind) {
    case Expr::Kind::kAdd:
    case Expr::Kind::kSub:
    case Expr::Kind::kMul:
    case Expr::Kind::kDiv:
      return true;
    default:
      return false;
  }
}

}  // namespace

Expr Expr::number(double value) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kNumber;
  node->value = value;
  return Expr(std::move(node));
}

Expr Expr::param(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kParam;
  node->name = std::move(name);
  return Expr(std::move(node));
}

Expr Expr::unary(Kind kind, Expr operand) {
  if (!unary_kind(kind)) throw std::invalid_argument("not a unary expression kind");
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->lhs = std::move(operand);
  return Expr(std::move(node));
}

Expr Expr::binary(Kind kind, Expr lhs, Expr rhs) {
  if (!binary_kind(kind)) throw std::invalid_argument("not a binary expression kind");
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return Expr(std::move(node));
}

Expr::Kind Expr::kind() const { return node_->kind; }
double Expr::value() const { return node_->value; }
const std::string& Expr::name() const { return node_->name; }
const Expr& Expr::lhs() const { return *node_->lhs; }
const Expr& Expr::rhs() const { return *node_->rhs; }
bool Expr::is_unary() const { return unary_kind(node_->kind); }
bool Expr::is_binary() const { return binary_kind(node_->kind); }

double Expr::evaluate(const Assignment& assignment) const {
  switch (node_->kind) {
    case Kind::kNumber:
      return node_->value;
    case Kind::kParam: {
      auto it = assignment.find(node_->name);
      if (it == assignment.end()) {
        throw EvaluationError("parameter '" + node_->name + "' has no value");
      }
      return it->second;
    }
    case Kind::kNeg:
      return -lhs().evaluate(assignment);
    case Kind::kAbs:
      return std::fabs(lhs().evaluate(assignment));
    case Kind::kFloor:
      return std::floor(lhs().evaluate(assignment));
    case Kind::kCeil:
      return std::ceil(lhs().evaluate(assignment));
    case Kind::kAdd:
      return lhs().evaluate(assignment) + rhs().evaluate(assignment);
    case Kind::kSub:
      return lhs().evaluate(assignment) - rhs().evaluate(assignment);
    case Kind::kMul:
      return lhs().evaluate(assignment) * rhs().evaluate(assignment);
    case Kind::kDiv: {
      const double num = lhs().evaluate(assignment);
      const double den = rhs().evaluate(assignment);
      if (den == 0.0) throw EvaluationError("division by zero in '" + render(*this) + "'");
      return num / den;
    }
  }
  throw std::logic_error("unknown expression kind");
}

void Expr::collect_params(std::set<std::string>& out) const {
  if (node_->kind == Kind::kParam) out.insert(node_->name);
  if (node_->lhs) node_->lhs->collect_params(out);
  if (node_->rhs) node_->rhs->collect_params(out);
}

Expr operator+(Expr lhs, Expr rhs) { return Expr::binary(Expr::Kind::kAdd, std::move(lhs), std::move(rhs)); }
Expr operator-(Expr lhs, Expr rhs) { return Expr::binary(Expr::Kind::kSub, std::move(lhs), std::move(rhs)); }
Expr operator*(Expr lhs, Expr rhs) { return Expr::binary(Expr::Kind::kMul, std::move(lhs), std::move(rhs)); }
Expr operator/(Expr lhs, Expr rhs) { return Expr::binary(Expr::Kind::kDiv, std::move(lhs), std::move(rhs)); }
Expr operator-(Expr operand) { return Expr::unary(Expr::Kind::kNeg, std::move(operand)); }
Expr abs(Expr operand) { return Expr::unary(Expr::Kind::kAbs, std::move(operand)); }
Expr floor(Expr operand) { return Expr::unary(Expr::Kind::kFloor, std::move(operand)); }
Expr ceil(Expr operand) { return Expr::unary(Expr::Kind::kCeil, std::move(operand)); }

std::string format_number(double value) {
  if (!std::isfinite(value)) throw DomainError("cannot render a non-finite number");
  if (value == 0.0) return "0";  // folds -0
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

namespace {

// Binding strength; an operand is parenthesized when its own precedence is
// below what its position requires.
int precedence(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::kAdd:
    case Expr::Kind::kSub:
      return 1;
    case Expr::Kind::kMul:
    case Expr::Kind::kDiv:
      return 2;
    case Expr::Kind::kNeg:
      return 3;
    case Expr::Kind::kNumber:
      return e.value() < 0.0 ? 3 : 4;
    default:
      return 4;
  }
}

void render_into(const Expr& e, int required, std::string& out) {
  const bool parens = precedence(e) < required;
  if (parens) out += '(';
  switch (e.kind()) {
    case Expr::Kind::kNumber:
      out += format_number(e.value());
      break;
    case Expr::Kind::kParam:
      out += e.name();
      break;
    case Expr::Kind::kNeg:
      out += '-';
      render_into(e.lhs(), 3, out);
      break;
    case Expr::Kind::kAbs:
    case Expr::Kind::kFloor:
    case Expr::Kind::kCeil:
      out += e.kind() == Expr::Kind::kAbs ? "abs(" : e.kind() == Expr::Kind::kFloor ? "floor(" : "ceil(";
      render_into(e.lhs(), 0, out);
      out += ')';
      break;
    case Expr::Kind::kAdd:
    case Expr::Kind::kSub:
    case Expr::Kind::kMul:
    case Expr::Kind::kDiv: {
      const int own = precedence(e);
      render_into(e.lhs(), own, out);
      switch (e.kind()) {
        case Expr::Kind::kAdd: out += " + "; break;
        case Expr::Kind::kSub: out += " - "; break;
        case Expr::Kind::kMul: out += " * "; break;
        default: out += " / "; break;
      }
      // Left-associative: a right operand of equal precedence keeps its
      // parentheses so the tree (and floating-point result) is preserved.
      render_into(e.rhs(), own + 1, out);
      break;
    }
  }
  if (parens) out += ')';
}

}  // namespace

std::string render(const Expr& expr) {
  std::string out;
  render_into(expr, 0, out);
  return out;
}

}  // namespace pgames
