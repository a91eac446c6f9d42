// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "liouflow/certreal.hpp"

namespace liouflow {

// Canonical form of an exact expression: a finite sum  sum_k c_k exp(-k)
// with rational c_k and integer k >= 0 (k = 0 is the rational part).  The
// set is closed under + and *, which makes quantities such as q*alpha - p
// exact before any floating-point evaluation.
class ExpSum {
 public:
  ExpSum() = default;
  static ExpSum rational(const mpq_class& c);
  static ExpSum exp_neg(const mpz_class& k, const mpq_class& c = 1);

  const std::map<mpz_class, mpq_class>& terms() const { return terms_; }
  mpq_class rational_part() const;
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;

  // The same value with the rational part reduced into [0, 1).
  ExpSum mod_one() const;

  ExpSum operator-() const;
  friend ExpSum operator+(const ExpSum& a, const ExpSum& b);
  friend ExpSum operator-(const ExpSum& a, const ExpSum& b);
  friend ExpSum operator*(const ExpSum& a, const ExpSum& b);
  friend ExpSum operator*(const ExpSum& a, const mpq_class& c);
  friend bool operator==(const ExpSum& a, const ExpSum& b) { return a.terms_ == b.terms_; }

  CertifiedReal eval(Prec prec) const;

 private:
  void add_term(const mpz_class& k, const mpq_class& c);
  std::map<mpz_class, mpq_class> terms_;
};

// Immutable expression tree over rationals, exp(-k), sums and products.
// Text grammar:
//   EXPR := RAT | "exp(-" INT ")" | EXPR "+" EXPR | EXPR "*" EXPR | "(" EXPR ")"
//   RAT  := INT | INT "/" INT        (INT may carry a leading '-')
class ExactExpr {
 public:
  struct Node;

  ExactExpr();  // zero
  static ExactExpr rational(const mpq_class& v);
  static ExactExpr integer(const mpz_class& v) { return rational(mpq_class(v)); }
  static ExactExpr exp_neg(const mpz_class& k);
  static ExactExpr parse(std::string_view text);
  static ExactExpr from_exp_sum(const ExpSum& s);

  friend ExactExpr operator+(const ExactExpr& a, const ExactExpr& b);
  friend ExactExpr operator*(const ExactExpr& a, const ExactExpr& b);

  std::string to_string() const;
  ExpSum canonical() const;
  int depth() const;
  bool syntactically_equal(const ExactExpr& other) const { return to_string() == other.to_string(); }

  // Node-by-node evaluation of the tree (no algebraic simplification).
  CertifiedReal eval_tree(Prec prec) const;

  const std::shared_ptr<const Node>& node() const { return node_; }

 private:
  explicit ExactExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Enclosure of e with err <= 2^(-prec+4) * max(1, |value|) whenever the
// tree's own cancellation allows it within a bounded amount of extra
// working precision.
CertifiedReal eval_expr(const ExactExpr& e, Prec prec);

// exp(-k) for integer k >= 0.
CertifiedReal exp_neg_int(const mpz_class& k, Prec prec);

}  // namespace liouflow
