// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liouflow/surface.hpp"

namespace liouflow {

// amp * sinc(delta) * cos 2pi(q theta1 + delta / 2).  delta = 0 gives a plain
// cosine; a nonzero delta arises when a torus potential is averaged over one
// return to the section {theta3 = 0}.
struct CeilingTerm {
  ExactExpr amp;
  mpz_class q;
  ExpSum delta;
};

struct SpecialFlowSpec {
  ExactExpr alpha, alpha_prime;
  ExactExpr const_part;
  std::vector<CeilingTerm> terms;

  // Ceiling given directly as a theta1-only series.
  static SpecialFlowSpec from_ceiling(const ExactExpr& alpha, const ExactExpr& alpha_prime, const TrigSeries& ceiling);
  // Return-time ceiling of the reparametrized angle flow over the section
  // {theta3 = 0}: the integral of phi over one turn of theta3.
  static SpecialFlowSpec section_of(const WeakMixing& spec);

  CertifiedReal ceiling(const CertifiedReal& theta1, Prec prec) const;
  CertifiedReal ceiling_derivative(const CertifiedReal& theta1, Prec prec) const;
  // Certified lower and upper bounds of the ceiling over the circle.
  std::pair<CertifiedReal, CertifiedReal> ceiling_range(Prec prec) const;
};

struct SpecialFlowPoint {
  CertifiedReal theta1, theta2, s;
};

// sum_{k=0}^{m-1} cos 2pi(q(theta1 + k alpha) + phase), closed form.
CertifiedReal birkhoff_trig_sum(const mpz_class& q, const ExactExpr& alpha, const CertifiedReal& theta1,
                                const mpz_class& m, Prec prec, const ExpSum& phase = {});
// d/dtheta1 of the same sum.
CertifiedReal birkhoff_trig_sum_derivative(const mpz_class& q, const ExactExpr& alpha, const CertifiedReal& theta1,
                                           const mpz_class& m, Prec prec, const ExpSum& phase = {});

// phi_m(theta1) and its theta1-derivative for the full ceiling.
CertifiedReal birkhoff_sum(const SpecialFlowSpec& spec, const CertifiedReal& theta1, const mpz_class& m, Prec prec);
CertifiedReal birkhoff_sum_derivative(const SpecialFlowSpec& spec, const CertifiedReal& theta1, const mpz_class& m,
                                      Prec prec);

// theta1-range where frac(q theta1) lies in [1/n, 1/2 - 1/n] (form 1) or
// [1/2 + 1/n, 1 - 1/n] (form 2), in the j-th period.  InvalidInput when the
// range is empty (n <= 4).
std::pair<mpq_class, mpq_class> stretch_interval(const mpz_class& q, unsigned n, int form, const mpz_class& j = 0);

struct DerivativeBounds {
  CertifiedReal lower, upper;  // min and max of |d phi_m / d theta1| over the samples
  CertifiedReal C;             // smallest C with C^-1 q^2/n <= lower and upper <= C q^2
  std::size_t samples = 0;
};

// NotApplicable for a constant ceiling.
DerivativeBounds birkhoff_derivative_bounds(const SpecialFlowSpec& spec, const mpz_class& qn, unsigned n,
                                            const mpz_class& m, const std::pair<mpq_class, mpq_class>& I,
                                            std::size_t samples, Prec prec);

// Special flow time t >= 0.  s may exceed the ceiling; the identification is
// applied as many times as needed.  m_out receives the number of base steps.
SpecialFlowPoint special_flow_map(const SpecialFlowSpec& spec, const SpecialFlowPoint& p, const CertifiedReal& t,
                                  Prec prec, mpz_class* m_out = nullptr);

// Torus point of the reparametrized angle flow <-> section coordinates.
SpecialFlowPoint to_section(const WeakMixing& spec, const Vec3& theta, Prec prec);
Vec3 from_section(const WeakMixing& spec, const SpecialFlowPoint& p, Prec prec);

struct DensityCell {
  long i = 0, j = 0, k = 0;
  double min_dist = 0;
  double err = 0;
};

struct DensityReport {
  bool passed = false;
  std::size_t cells_per_axis = 0;
  std::size_t image_points = 0;
  std::size_t strips = 0;                  // distinct base-step counts among the image points
  std::optional<DensityCell> first_failure;
  std::vector<DensityCell> cells;          // every cell, in (i, j, k) order
  std::vector<std::array<double, 3>> points;  // image midpoints (theta1, theta2, s / ceiling)
};

// Image of I x {theta2} x {s} at time t sampled at `samples` points of I;
// M is gridded in (theta1, theta2, s / ceiling) with cells of side <= eps.
// A cell passes when its centre lies within eps - side/2 of an image point
// (sup norm, torus-aware), so every point of the cell is within eps.
DensityReport density_report(const SpecialFlowSpec& spec, const std::pair<mpq_class, mpq_class>& I,
                             const CertifiedReal& theta2, const CertifiedReal& s, const CertifiedReal& t,
                             const mpq_class& eps, std::size_t samples, Prec prec);
// Throws DensityFailed naming the first empty cell.
DensityReport density_check(const SpecialFlowSpec& spec, const std::pair<mpq_class, mpq_class>& I,
                            const CertifiedReal& theta2, const CertifiedReal& s, const CertifiedReal& t,
                            const mpq_class& eps, std::size_t samples, Prec prec);

// Sub-rectangle of R with sides 1/qn^3 whose angle image at time t lies in
// pi_theta(B).  TargetUnreachable when no candidate certifies.
struct ThetaTarget {
  RectangleR rect;
  mpq_class u0, v0;      // offsets of the sub-rectangle corner inside R
  Vec3 image;            // enclosure of the angle image
  std::size_t tried = 0; // candidate corners examined
};

ThetaTarget find_theta_target_rectangle(const WeakMixing& spec, const mpz_class& qn, const RectangleR& R,
                                        const BoxB& B, const CertifiedReal& t, Prec prec, unsigned pieces = 64);

}  // namespace liouflow
