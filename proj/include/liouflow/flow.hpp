// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <vector>

#include "liouflow/hamiltonian.hpp"

namespace liouflow {

struct PhasePoint {
  Vec3 theta;  // reduced mod 1
  Vec3 r;
  CertifiedReal energy;
};

// r_j(t) = c + main + lower, up to +/- tail.
struct ActionDecomposition {
  CertifiedReal c, main, lower, tail;
  CertifiedReal total() const { return (c + main + lower).widened(tail); }
};

struct FlowResult {
  PhasePoint point;
  std::array<ActionDecomposition, 2> actions;  // r1, r2
  CertifiedReal s;                             // reparametrized time (equals t for unreparametrized flows)
  bool outside_lemma = false;                  // |C| > q^{1/2} for ModelReparam
};

// r3 reconstructed from the energy level c (truncated series).
CertifiedReal resolve_r3(const HamiltonianSpec& spec, const Vec3& theta, const CertifiedReal& r1,
                         const CertifiedReal& r2, const CertifiedReal& c, Prec prec);

// On-surface point with given angles, r1, r2 and energy c.
PhasePoint make_point(const HamiltonianSpec& spec, const Vec3& theta, const CertifiedReal& r1,
                      const CertifiedReal& r2, const CertifiedReal& c, Prec prec);

// Potential term of H = <r, omega> + sum amp cos 2pi(k.theta), with k.omega exact.
struct FlowTerm {
  CertifiedReal amp;
  IVec3 k;
  ExpSum k_omega;
};

std::vector<FlowTerm> flow_terms(const TrigSeries& s, const Omega& omega, Prec prec);

// Increment of (r1, r2) produced by one term after time tau from angles theta0:
//   2 pi tau amp k_j sinc(tau delta) sin 2pi(k.theta0 + tau delta / 2).
// Exact for every delta including delta = 0.
std::array<CertifiedReal, 2> term_increment(const FlowTerm& term, const Vec3& theta0, const CertifiedReal& tau,
                                            Prec prec);

// theta0 + tau omega mod 1.
Vec3 advance_angles(const Omega& omega, const Vec3& theta0, const CertifiedReal& tau, Prec prec);

FlowResult rotator_flow(const Rotator& spec, const PhasePoint& s0, const CertifiedReal& t, Prec prec);
FlowResult model_flow(const Model& spec, const PhasePoint& s0, const CertifiedReal& t, Prec prec);
FlowResult diffusion_flow(const Diffusion& spec, const PhasePoint& s0, const CertifiedReal& t, Prec prec);

// Stage split of the r_j equation of a Diffusion flow: main is the stage-n
// term, lower the stages below it, tail bounds the increments of the stages
// above it plus the omitted series.  direction is 1 or 2.
ActionDecomposition diffusion_action(const Diffusion& spec, const PhasePoint& s0, const CertifiedReal& t,
                                     std::size_t n, int direction, Prec prec);

// t(s) = int_0^s phi(theta0 + u omega) du, with exact per-term primitives.
class TimeChange {
 public:
  TimeChange(const Omega& omega, const TrigSeries& phi, const Vec3& theta0, Prec prec);

  CertifiedReal forward(const CertifiedReal& s) const;
  CertifiedReal slope(const CertifiedReal& s) const;
  // Certified s with forward(s) enclosing t.
  CertifiedReal invert(const CertifiedReal& t) const;

 private:
  struct Term {
    CertifiedReal amp, x, delta;
  };
  Prec prec_;
  CertifiedReal c0_;
  std::vector<Term> terms_;
};

FlowResult reparam_flow(const ModelReparam& spec, const PhasePoint& s0, const CertifiedReal& t, Prec prec);
FlowResult reparam_flow(const WeakMixing& spec, const PhasePoint& s0, const CertifiedReal& t, Prec prec);

FlowResult flow(const HamiltonianSpec& spec, const PhasePoint& s0, const CertifiedReal& t, Prec prec);

// Largest radius among the coordinates of p.
double max_err(const PhasePoint& p);

// CSV: t,theta1,theta2,theta3,r1,r2,r3,err_max
std::string trajectory_csv(const HamiltonianSpec& spec, const PhasePoint& s0, const std::vector<CertifiedReal>& times,
                           Prec prec, int digits);

}  // namespace liouflow
