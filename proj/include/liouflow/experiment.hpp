// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liouflow/stretch.hpp"

namespace liouflow {

std::string tool_version();

// A point given by exact coordinates; r3 is resolved from the energy.
struct PointDesc {
  std::array<ExactExpr, 3> theta;
  ExactExpr r1, r2, energy;

  PhasePoint realize(const HamiltonianSpec& spec, Prec prec) const;
};

struct BoxDesc {
  PointDesc base;
  mpz_class n = 1;
};

struct RectDesc {
  PointDesc base;
  std::optional<mpq_class> l1, l2;  // unset: 1/q_n of the chosen stage
};

// Parsed and validated run description.  Text form (sections and keys):
//
//   [run]        suite, jobs
//   [precision]  base, cap
//   [output]     dir, digits, svg
//   [system]     regime (model | yoccoz | weakmix), q1, stages, N, stage,
//                frequency (serialized frequency vector to load instead of
//                building), level (weak-mixing energy C); for model: alpha,
//                alpha_prime, a, p, q, b, pp, qp
//   [point]      theta (three expressions), r1, r2, energy
//   [box]        theta, r1, r2, energy, n
//   [rect]       theta, r1, r2, energy, l1, l2
//   [stretch]    direction, l, L
//   [times]      values (comma separated, exp(K) allowed), geometric (count
//                inside the stage window), per_decade with lo / hi
//   [profile]    set (box | rect)
//   [witness]    t, chain
//   [birkhoff]   interval_n, form, samples, factors, t
//   [density]    interval_n, form, samples, eps, theta2, s, t
//
// Reals are exact expressions; times use the parse_time syntax.
struct ExperimentConfig {
  std::string suite;
  std::size_t jobs = 1;
  PrecisionPolicy precision{256, 4096};
  std::filesystem::path output_dir = "liouflow-out";
  int digits = 30;
  bool svg = true;

  std::string regime;
  mpz_class q1 = 3;
  std::size_t stages = 1, N = 1, stage = 1;
  std::optional<std::filesystem::path> frequency;
  ExactExpr level;

  // model system
  ExactExpr alpha, alpha_prime, a, b;
  mpz_class p, q, pp, qp;

  PointDesc point;
  std::optional<BoxDesc> box;
  std::optional<RectDesc> rect;

  int direction = 1;
  std::optional<mpq_class> l, L;

  std::vector<std::string> times;
  std::size_t geometric = 0;
  unsigned per_decade = 0;
  std::string grid_lo, grid_hi;

  std::string profile_set = "box";
  std::string witness_t;
  bool chain = true;

  unsigned interval_n = 8;
  int form = 1;
  std::size_t samples = 64;
  std::vector<mpq_class> factors;
  std::string special_t;
  ExactExpr eps, theta2, s;

  std::string source_text;  // raw bytes, hashed into the manifest
};

// ConfigError on anything unparseable or inconsistent with the suite; nothing
// is computed here beyond syntax checks.  A non-empty `suite` fills in a
// missing [run] suite and must agree with a present one.
ExperimentConfig parse_config(const std::string& text, const std::string& suite = {});
ExperimentConfig load_config(const std::filesystem::path& path, const std::string& suite = {});

struct TaskStatus {
  std::string name;
  std::string status;      // pass | fail | error
  std::string error_kind;  // empty on pass
  std::string message;
  Prec prec_bits = 0;
  double seconds = 0;
};

struct Table {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct RunManifest {
  std::string suite;
  std::string config_hash;  // SHA-256 of the config bytes
  std::string tool_version;
  std::filesystem::path output_dir;
  std::vector<TaskStatus> tasks;
  std::vector<std::string> certificates;  // paths relative to output_dir
  std::vector<Table> tables;
  std::vector<std::pair<std::string, std::string>> summary;
  Prec max_prec = 0;
  double wall_seconds = 0;
  int exit_code = 0;

  std::string to_json() const;
  static RunManifest from_json(const std::string& text);
};

// CSV headers of the fixed schemas.
const std::vector<std::string>& stretch_header();
const std::vector<std::string>& density_header();
const std::vector<std::string>& profile_header();

// 0 for success, 1 certification failure, 2 configuration error, 3 resource
// or precision exhaustion.
int exit_code_for(ErrorKind kind);

std::string sha256_hex(const std::string& bytes);

// Runs the configured suite, writes certificates, CSV, SVG and
// manifest.json under the output directory.  Configuration errors are thrown
// as Error before anything is written.
RunManifest run_experiment(const ExperimentConfig& config);
RunManifest run_experiment(const std::filesystem::path& config_path);

// CSV for every table (headers only when there are no rows; an empty
// manifest yields the three standard schemas) and log-t SVG plots for the
// stretch and profile tables.  Returns the files written.
std::vector<std::filesystem::path> emit_report(const RunManifest& manifest, const std::filesystem::path& dir);

// Serialized-frequency builder behind `freq build`.
FrequencyVector build_frequency(const std::string& regime, const mpz_class& q1, std::size_t stages,
                                PrecisionPolicy policy);

// base/cap with the LIOUFLOW_PREC_CAP override applied.
PrecisionPolicy effective_policy(PrecisionPolicy p);

}  // namespace liouflow
