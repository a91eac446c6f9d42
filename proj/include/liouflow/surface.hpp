// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <vector>

#include "liouflow/flow.hpp"

namespace liouflow {

// Segment of length l in theta_direction through base, lifted to the base's
// energy surface.
struct IntervalJ {
  int direction = 1;
  PhasePoint base;
  mpq_class l;
};

// I(theta01, l1) x I(theta02, l2) with theta3, r1, r2 fixed.
struct RectangleR {
  PhasePoint base;
  mpq_class l1, l2;
};

// theta_j in [theta0j, theta0j + 1/n) (mod 1), r_j in [r0j, r0j + 1/n), j = 1, 2.
struct BoxB {
  PhasePoint base;
  mpz_class n;
};

PhasePoint interval_point(const HamiltonianSpec& spec, const IntervalJ& J, const CertifiedReal& offset, Prec prec);
// m equally spaced points, offsets 0, l/(m-1), ..., l.
std::vector<PhasePoint> sample_interval(const HamiltonianSpec& spec, const IntervalJ& J, std::size_t m, Prec prec);

// Point (or cell enclosure when u1, u2 are balls) at offsets (u1, u2) from the base corner.
PhasePoint rectangle_point(const HamiltonianSpec& spec, const RectangleR& R, const CertifiedReal& u1,
                           const CertifiedReal& u2, Prec prec);

// Certified membership; Indeterminate when a coordinate enclosure meets the
// boundary.  Points on a different energy level are never members.
bool contains(const BoxB& B, const PhasePoint& p);
// Angle part only (theta1, theta2, theta3).
bool contains_theta(const BoxB& B, const Vec3& theta);
// Action part only (r1, r2).
bool contains_r(const BoxB& B, const CertifiedReal& r1, const CertifiedReal& r2);

struct Witness {
  PhasePoint point;
  CertifiedReal offset;  // position along the interval, 0 <= offset <= l
};

// Point of J where k.theta = target (mod 1).  PhaseUnreachable when the
// phase does not reach the target inside the interval.
Witness witness_phase(const HamiltonianSpec& spec, const IntervalJ& J, const IVec3& k, const mpq_class& target,
                      Prec prec);

// Offset u in [0, 1) of theta - theta0 reduced mod 1, with boundary tolerance
// handled by the caller.
CertifiedReal torus_offset(const CertifiedReal& theta, const CertifiedReal& theta0);

}  // namespace liouflow
