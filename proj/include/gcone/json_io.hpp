/**
 * @file json_io.hpp
 * @brief Machine-readable cone artifacts: a fixed JSON schema carrying the
 *        model's variable table plus the canonical cone data, a schema
 *        parser, and a re-canonicalizing round trip that is a fixed point
 *        on everything this library emits.
 */
#pragma once

#include <string>

#include "gcone/cone.hpp"
#include "gcone/model.hpp"

namespace gcone {

/// Serializes a model and its Gröbner cone as
/// {"family","rank","frozen_mode","variables":[{"id","kind","diag"}],
///  "lineality":[[int]],"rays":[[int]],"inequalities":[[int]]}.
/// Vectors are primitive integers in variable-table order; "diag" holds the
/// chord [a, b, colour] for polygon variables and the weight coordinates
/// for weight-model variables. Keys stay in schema order, two-space
/// indentation, trailing newline: output is byte-deterministic.
std::string cone_to_json(const ClusterModel& m, const Cone& c);

struct ParsedConeArtifact {
  ModelSpec spec;
  size_t dim = 0;  ///< number of variables = vector length
  IMat lineality;
  IMat rays;
  IMat inequalities;
};

/// Parses an artifact produced by cone_to_json. Throws std::runtime_error
/// on malformed input or schema violations.
ParsedConeArtifact parse_cone_json(const std::string& text);

/// Parses, rebuilds the model, re-canonicalizes the cone from the parsed
/// generators and re-serializes. Emitted artifacts satisfy
/// round_trip_cone_json(s) == s byte-for-byte.
std::string round_trip_cone_json(const std::string& text);

}  // namespace gcone
