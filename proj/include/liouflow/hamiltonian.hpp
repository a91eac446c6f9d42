// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>

#include "liouflow/arith.hpp"
#include "liouflow/trig_series.hpp"

namespace liouflow {

// omega = (alpha, alpha_prime, 1)
struct Omega {
  ExactExpr alpha;
  ExactExpr alpha_prime;

  static Omega of(const FrequencyVector& fv) { return {fv.alpha(), fv.alpha_prime()}; }
  Vec3 eval(Prec prec) const;
  // k . omega in exact canonical form.
  ExpSum dot(const IVec3& k) const;
};

// H0 = <r, omega>
struct Rotator {
  Omega omega;
};

// H = <r, omega> + h(theta)
struct Diffusion {
  Omega omega;
  TrigSeries h;
};

// H~ = (<r, omega> + h~(theta)) / phi(theta)
struct WeakMixing {
  Omega omega;
  TrigSeries phi;
  TrigSeries htilde;
};

// H = <r, omega> - a cos 2pi(q th1 - p th3) - b cos 2pi(q' th2 - p' th3)
struct Model {
  Omega omega;
  ExactExpr a;
  mpz_class p, q;
  ExactExpr b;
  mpz_class pp, qp;
};

// Single-stage reparametrized system on the energy level C of
//   (<r, omega> - kappa e^{-q'} cos 2pi kappa psi - e^{-q'} cos 2pi psi') / phi,
// psi = q th1 - p th3, psi' = q' th2 - p' th3.
struct ModelReparam {
  Omega omega;
  TrigSeries phi;
  ExactExpr C;
  mpz_class q, p, qp, pp, kappa;

  // The h~ part of the numerator (no constant).
  TrigSeries htilde() const;
};

using HamiltonianSpec = std::variant<Rotator, Diffusion, WeakMixing, Model, ModelReparam>;

std::string variant_name(const HamiltonianSpec& spec);

TrigSeries build_h(const FrequencyVector& fv, std::size_t N);
TrigSeries build_phi(const FrequencyVector& fv, std::size_t N);
TrigSeries build_htilde(const FrequencyVector& fv, std::size_t N);

// Model parameters for stage n of a weak-mixing frequency vector, energy C.
ModelReparam model_reparam_stage(const FrequencyVector& fv, std::size_t n, const ExactExpr& C);

// H(theta, r).  For ModelReparam this is the s-time conserved quantity
// <r, omega> + h~(theta) - C phi(theta) + C, whose level C is the energy
// surface of the underlying H~.
CertifiedReal eval_hamiltonian(const HamiltonianSpec& spec, const Vec3& theta, const Vec3& r, Prec prec);

// Certifies the variant's invariants; throws InvalidInput naming the first
// violated one.
void validate(const HamiltonianSpec& spec, PrecisionPolicy policy = {});

// Certified 3/4 <= phi <= 2 on the real torus (norm-bound argument).
bool phi_in_lemma_range(const TrigSeries& phi, Prec prec);

std::string serialize(const HamiltonianSpec& spec);
HamiltonianSpec parse_hamiltonian(const std::string& text);

}  // namespace liouflow
