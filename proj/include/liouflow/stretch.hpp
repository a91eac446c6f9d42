// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

#include "liouflow/special_flow.hpp"
#include "liouflow/surface.hpp"

namespace liouflow {

// Times are written as EXPR, exp(K) or EXPR*exp(K) with integer K (possibly
// positive, unlike ExactExpr which only has exp(-k)).
CertifiedReal parse_time(const std::string& text, Prec prec);

struct StretchSpec {
  int direction = 1;
  mpq_class l;            // interval length
  mpq_class L;            // amplitude target
  CertifiedReal t;
  std::size_t stage = 1;  // which driving term (sorted by |k_j|) supplies the witness phase
};

struct StretchCertificate {
  StretchSpec spec;
  PhasePoint witness_plus, witness_minus;
  CertifiedReal offset_plus, offset_minus;
  CertifiedReal value_plus, value_minus, margin;
  ActionDecomposition split_plus, split_minus;
  bool independence_checked = false;  // transverse samples agreed and no driving term couples the other angle
  std::size_t interior_samples = 0;
  std::size_t crossings_upper = 0;    // certified crossings of +L along the interval (witnesses included)
  std::size_t crossings_lower = 0;    // of -L
  Prec prec = 0;

  std::string to_json() const;
};

struct TimeWindow {
  CertifiedReal lo, hi;
};

// [a^{-1}, 1/(4|q alpha - p|)] for direction 1 and the (b, q', p') analogue.
std::array<TimeWindow, 2> stretch_window_model(const Model& spec, Prec prec);

// The potential term whose phase is steered to -+1/4.
struct DrivingTerm {
  CertifiedReal amp;
  IVec3 k;
};
DrivingTerm driving_term(const HamiltonianSpec& spec, int direction, std::size_t stage, Prec prec);

StretchCertificate verify_stretch(const HamiltonianSpec& spec, const StretchSpec& ss, const PhasePoint& s0,
                                  Prec prec);
// Doubles the precision on Indeterminate / PrecisionExhausted.
StretchCertificate verify_stretch_auto(const HamiltonianSpec& spec, const StretchSpec& ss, const PhasePoint& s0,
                                       PrecisionPolicy policy = {});

// n points geometrically spaced strictly inside (lo, hi).
std::vector<CertifiedReal> geometric_samples(const CertifiedReal& lo, const CertifiedReal& hi, std::size_t n,
                                             Prec prec);
// per_decade points per factor of ten, endpoints included.
std::vector<CertifiedReal> geometric_grid(const CertifiedReal& lo, const CertifiedReal& hi, unsigned per_decade,
                                          Prec prec);

struct PropStretchReport {
  std::vector<StretchCertificate> certificates;
  CertifiedReal window_lo, window_hi;  // e^{q_n}, q_{n+1}/4
  CertifiedReal delta_C_bound;         // 4 sum_{k<n} q_k e^{-q_k} q_{k+1}
  CertifiedReal delta_C_max;           // largest realized |C_n(t) - C_n(0)| at the witnesses
  CertifiedReal delta_D_bound;         // 2 pi q_{n+1} sum_{k>n} q_k e^{-q_k}
  CertifiedReal delta_D_max;           // largest realized tail bound at the witnesses
  bool ledger_ok = false;
};

// Yoccoz pair, truncation N, stage n; every t must lie in the window.
PropStretchReport verify_prop_stretch(const FrequencyVector& fv, std::size_t N, std::size_t n,
                                      const std::vector<CertifiedReal>& t_samples, const PhasePoint& s0, Prec prec);

// The single-stage weak-mixing inequality chain at the witness s+.
struct ReparamChain {
  StretchCertificate cert;
  CertifiedReal g2;   // increment of the kappa term
  CertifiedReal dg1;  // every other increment of r1
  bool g2_ok = false, dg1_ok = false, value_ok = false;
};
// Direction 1 with l = 1/(kappa q), L = 2q.
ReparamChain verify_reparam_chain(const ModelReparam& spec, const PhasePoint& s0, const CertifiedReal& t, Prec prec);

struct WeakmixWitness {
  RectangleR R, R_prime, R_bar;
  mpq_class u_prime, v_prime;  // corner of R' inside R
  mpq_class u_bar, v_bar;      // corner of R-bar inside R
  Vec3 theta_image;            // enclosure of the angle image of R'
  PhasePoint image;            // enclosure of the image of R-bar
  std::size_t theta_candidates = 0;
};

// Chain R-bar in R' in R with Phi^t(R-bar) inside B.
WeakmixWitness verify_weakmix_witness(const WeakMixing& spec, const FrequencyVector& fv, std::size_t stage,
                                      const RectangleR& R, const BoxB& B, const CertifiedReal& t, Prec prec);

struct ProfileRow {
  CertifiedReal t;
  CertifiedReal diam_lower;
  int direction = 0;   // 0 when no witness pair succeeded
  std::size_t stage = 0;
};

// Lower bounds on diam pi_r Phi^t(A) from witness pairs on the interval of
// A through its base (side 1/n for a box, l1/l2 for a rectangle).
std::vector<ProfileRow> diffusion_profile(const Diffusion& spec, const BoxB& A, const std::vector<CertifiedReal>& ts,
                                          Prec prec);
std::vector<ProfileRow> diffusion_profile(const Diffusion& spec, const RectangleR& A,
                                          const std::vector<CertifiedReal>& ts, Prec prec);

// Stretching window [e^{E}, end] of one stage, kept in log form because E is
// q_n or q'_n (astronomical beyond stage 1).  bounded = false when the next
// denominator is not recorded.
struct DiffusionWindow {
  std::string label;  // "q1", "q'1", ...
  mpz_class start_exponent;
  CertifiedReal log_end;
  bool bounded = true;
};

// [e^{q_n}, q_{n+1}/4] and [e^{q'_n}, q'_{n+1}/4] in increasing order.
std::vector<DiffusionWindow> diffusion_windows(const FrequencyVector& fv, Prec prec);
// Consecutive windows overlap, so their union is a half-line from e^{q_1}
// (or an interval when the last one is bounded).
bool windows_cover(const std::vector<DiffusionWindow>& w, Prec prec);

}  // namespace liouflow
