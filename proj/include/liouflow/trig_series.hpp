// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

#include "liouflow/certreal.hpp"
#include "liouflow/exact_expr.hpp"

namespace liouflow {

using Vec3 = std::array<CertifiedReal, 3>;
using IVec3 = std::array<mpz_class, 3>;

// amp * cos(2 pi k.theta)
struct TrigTerm {
  ExactExpr amp;
  IVec3 k;
};

// How the omitted stages of a truncated series are bounded.  m0 is a lower
// bound on every omitted stage denominator.
//   Yoccoz: amplitudes e^{-m} at distinct integers m >= m0, |k|_1 <= 2m.
//   Phi:    amplitudes m e^{-m'} with m' >= m^4, |k|_1 <= 2m.
//   HTilde: amplitudes m^2 e^{-m'} with |k|_1 <= 2m^3, plus e^{-m'} with
//           |k|_1 <= 2m', at distinct m' >= m^4.
enum class TailModel { None, Yoccoz, Phi, HTilde };

struct TailSpec {
  TailModel model = TailModel::None;
  mpz_class m0 = 0;
};

class TrigSeries {
 public:
  ExactExpr const_part;
  std::vector<TrigTerm> terms;
  TailSpec tail;

  // Certified sup of the omitted part on the strip |Im theta| <= rho (rho = 0
  // is the real torus).  ResourceLimit when the tail model diverges at rho.
  CertifiedReal tail_bound(const mpq_class& rho, Prec prec) const;

  // Truncated value plus the real-torus tail bound folded into the radius.
  CertifiedReal eval(const Vec3& theta, Prec prec) const;
  CertifiedReal eval_truncated(const Vec3& theta, Prec prec) const;
  // d/dtheta_j of the truncation.
  CertifiedReal eval_partial(const Vec3& theta, int j, Prec prec) const;

  // Sum of |amp| over the explicit terms.
  CertifiedReal amplitude_sum(Prec prec) const;

  // One line per term: "const <EXPR>" then "<EXPR> ; k1 k2 k3", then "tail <model> <m0>".
  std::string dump() const;
  static TrigSeries parse_dump(const std::string& text);
};

// sum |amp| cosh(2 pi rho |k|_1) + |const| + tail_bound(rho); rho > 0.
CertifiedReal analytic_norm_bound(const TrigSeries& s, const mpq_class& rho, Prec prec);
// The cruder sum |amp| e^{2 pi rho |k|_1} + |const| + tail_bound(rho), for cross-checking.
CertifiedReal exponential_norm_bound(const TrigSeries& s, const mpq_class& rho, Prec prec);
// Real-torus sup bound: sum |amp| + |const| + tail_bound(0).
CertifiedReal sup_bound(const TrigSeries& s, Prec prec);

// k . theta
CertifiedReal dot(const IVec3& k, const Vec3& theta, Prec prec);
mpz_class l1_norm(const IVec3& k);

// Ball [0, e^{upper(log_value)}]; stays representable for astronomically
// small bounds such as e^{-10^35}.
CertifiedReal bound_from_log(const CertifiedReal& log_value, Prec prec);

std::string to_string(TailModel m);

}  // namespace liouflow
