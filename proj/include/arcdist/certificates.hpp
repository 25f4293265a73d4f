#pragma once

// Certificates in serialized form: building the ones without a library type,
// re-verifying any of them from JSON alone, and the bundled example records.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arcdist/io.hpp"

namespace arcdist {

/// path_between(v, w) with the surgery step behind every arc after w.
json path_certificate(const ArcWord& v, const ArcWord& w);

/// Everything wrong with a serialized certificate of kind distance-certificate,
/// path-certificate, level-position, level-report or example. Empty means it
/// re-verifies. Malformed records throw Error like the readers in io.hpp.
std::vector<std::string> check_certificate(const json& cert);

struct ExampleRecord {
  std::string name;
  TriangulationPtr base;
  ShadowPairInput input;
  int expected = 0;  ///< exact distance stated for the knot
  std::string knot;
  std::optional<std::pair<int, int>> torus_class;
  std::string provenance;
};

ExampleRecord example_from_json(const json& j);

struct ExampleOutcome {
  std::string name;
  bool pass = false;
  std::string verdict;  ///< "exact(d)" or "bounds(l,u)"
  std::vector<std::string> problems;
  json report;  ///< the level report, itself a certificate
};

/// Classifies the record's shadow lists and checks the stated value, the
/// level certificate (n equal to the distance, genus g*n), the loop class of
/// torus-knot records, and that the report re-verifies after serialization.
ExampleOutcome run_example(const ExampleRecord& r);

/// The *.json files of a directory, sorted by name.
std::vector<std::string> example_files(const std::string& dir);

std::string verdict_string(int lower, int upper);

}  // namespace arcdist
