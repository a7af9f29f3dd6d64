#pragma once

// Configuration ingestion.  Fixture files use a strict TOML subset:
//
//   - sections  [chart] [frame] [connection] [deformation] [run] [tolerances]
//   - values    quoted strings (no escapes), integers, floats, booleans,
//               arrays (possibly nested, may span lines)
//   - comments  # to end of line
//
// Keys are bare identifiers except connection coefficients, which are quoted
// "G^s_mn" with 1-based frame indices.  Unknown sections or keys are
// rejected; every error carries the 1-based line/column it was found at.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "connkit/connection.hpp"
#include "connkit/structures.hpp"

namespace connkit {

struct CoefficientEntry {
  int s = 0, m = 0, nu = 0;  // 0-based indices
  std::string expr;
};

struct SpecConfig {
  std::string source;  // path (or pseudo-path) the config was read from

  // [chart]
  int dim = 0;
  std::vector<std::string> coords;
  std::vector<double> lo, hi;

  // [frame] — row per frame vector: b_i = sum_j matrix[i][j] d_j
  bool has_frame = false;
  std::vector<std::vector<std::string>> frame_exprs;

  // [connection]
  bool relative = false;
  std::vector<CoefficientEntry> coeffs;

  // [deformation] — row-major operator matrix: lambda(v)^i = sum_j m[i][j] v^j
  bool has_deformation = false;
  std::vector<std::vector<std::string>> deformation_exprs;

  // [run]
  int samples = 100;
  std::uint64_t seed = 0;
  std::vector<std::string> suites;  // empty = all
  bool expected_asymmetric = false;

  // [tolerances]
  std::map<std::string, double> tolerance_overrides;
};

// Parses and fully validates; `source` names the origin in error messages.
SpecConfig parse_config(std::string_view text, std::string source);
SpecConfig load_config(const std::string& path);

// The ready-to-run form of a config.
struct CompiledConfig {
  SpecConfig spec;
  Chart chart;
  Connection G;            // relative => zero coefficients over the config frame
  FramePair active_frame;  // config frame, or the default crooked frame
  bool frame_from_config = false;
  Deformation deformation;  // config matrix, or the default diagonal operator
  bool deformation_from_config = false;
};

CompiledConfig compile_config(const SpecConfig& cfg);

// The frame used by frame-dependent suites when the config does not supply
// one: E_ij(x) = delta_ij + (0.4/n) sin(x_j + i + 2 j) with 1-based i, j.
// Strictly diagonally dominant, hence invertible on every box.
FramePair default_frame(int dim);

// The deformation used when the config does not supply one:
// lambda = diag(2 + sin(x_i)).
OperatorField default_deformation(int dim);

}  // namespace connkit
