// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "liouflow/certreal.hpp"
#include "liouflow/exact_expr.hpp"

namespace liouflow {

// Bit-size cap on constructed denominators and exponent arguments.
inline constexpr long kDefaultBitCap = 1'000'000;

// A real number whose continued fraction we can expand: an exact
// expression, or sqrt(n) for a positive non-square integer n.
class RealTarget {
 public:
  struct Sqrt {
    mpz_class n;
  };

  RealTarget() = default;
  RealTarget(ExactExpr e) : v_(std::move(e)) {}  // NOLINT(google-explicit-constructor)
  static RealTarget rational(const mpq_class& q) { return RealTarget(ExactExpr::rational(q)); }
  static RealTarget sqrt_of(const mpz_class& n);

  bool is_expr() const { return std::holds_alternative<ExactExpr>(v_); }
  const ExactExpr& expr() const { return std::get<ExactExpr>(v_); }
  // Exact rational value when the target is rational.
  std::optional<mpq_class> as_rational() const;

  CertifiedReal eval(Prec prec) const;
  // q * x - p, exact before evaluation whenever the target is an expression.
  CertifiedReal linear_form(const mpz_class& q, const mpz_class& p, Prec prec) const;
  std::string to_string() const;

 private:
  std::variant<ExactExpr, Sqrt> v_ = ExactExpr();
};

struct Convergent {
  mpz_class p;
  mpz_class q;
  friend bool operator==(const Convergent&, const Convergent&) = default;
};

struct ConvergentLadder {
  std::vector<Convergent> entries;
  std::vector<mpz_class> partial_quotients;
  RealTarget target;
  // True when the expansion reached the exact value (rational target).
  bool terminated = false;
};

// First `depth` convergents of x.  Stops early only if x is rational and its
// expansion is shorter.
ConvergentLadder cf_expand(const RealTarget& x, std::size_t depth, Prec prec);
// As cf_expand, doubling precision from policy.base up to policy.cap.
ConvergentLadder cf_expand_auto(const RealTarget& x, std::size_t depth, PrecisionPolicy policy = {});

enum class BoundStatus { Pass, Fail, Terminating, NoSuccessor };
std::string to_string(BoundStatus s);

struct ConvergentCheck {
  std::size_t index = 0;
  BoundStatus status = BoundStatus::NoSuccessor;
  // (-1)^k (q_k x - p_k) - 1/(q_k + q_{k+1})  and  1/q_{k+1} - (-1)^k (q_k x - p_k)
  std::optional<CertifiedReal> lower_margin, upper_margin;
  std::string reason;
};

struct ConvergentReport {
  std::vector<ConvergentCheck> checks;
  // No Fail and no Terminating entry.
  bool all_pass = true;
  // Index of the first non-passing entry with a successor, if any.
  std::optional<std::size_t> first_failure;
};

ConvergentReport check_convergent_bounds(const ConvergentLadder& ladder, Prec prec);

// min over integers p of |k x - p|.
CertifiedReal dist_to_int(const mpz_class& k, const RealTarget& x, Prec prec);

enum class Regime { YoccozY, WeakMixing };
std::string to_string(Regime r);

// omega = (alpha, alpha_prime, 1) together with the convergents used by the
// constructions.  stage_alpha[n-1] holds (p_n, q_n) for stage n, likewise
// stage_alpha_prime.  The Yoccoz regime also records stage S+1 for alpha.
class FrequencyVector {
 public:
  static FrequencyVector make(Regime regime, std::size_t stages, ExactExpr alpha, ExactExpr alpha_prime,
                              std::vector<Convergent> stage_alpha, std::vector<Convergent> stage_alpha_prime,
                              PrecisionPolicy policy = {});

  Regime regime() const { return regime_; }
  std::size_t stages() const { return stages_; }
  const ExactExpr& alpha() const { return alpha_; }
  const ExactExpr& alpha_prime() const { return alpha_prime_; }
  const ConvergentLadder& ladder() const { return ladder_; }
  const ConvergentLadder& ladder_prime() const { return ladder_prime_; }

  // Stage n >= 1.  Throws StageUnavailable when not recorded.
  const Convergent& approx(std::size_t n) const;
  const Convergent& approx_prime(std::size_t n) const;
  std::size_t recorded() const { return stage_alpha_.size(); }
  std::size_t recorded_prime() const { return stage_alpha_prime_.size(); }

  // Independent re-check of the regime inequalities for every stage.
  void verify(PrecisionPolicy policy = {}) const;

  std::string serialize() const;
  static FrequencyVector deserialize(const std::string& text);

 private:
  FrequencyVector() = default;

  Regime regime_ = Regime::YoccozY;
  std::size_t stages_ = 0;
  ExactExpr alpha_, alpha_prime_;
  ConvergentLadder ladder_, ladder_prime_;
  std::vector<Convergent> stage_alpha_, stage_alpha_prime_;
};

FrequencyVector build_yoccoz_pair(std::size_t stages, const mpz_class& q1, PrecisionPolicy policy = {},
                                  long bit_cap = kDefaultBitCap);
FrequencyVector build_weakmixing_pair(std::size_t stages, const mpz_class& q1, PrecisionPolicy policy = {},
                                      long bit_cap = kDefaultBitCap);

// Smallest integer >= x, certified (refines precision as needed).
mpz_class certified_ceil(const std::function<CertifiedReal(Prec)>& x, Prec prec0, Prec prec_max);

}  // namespace liouflow
