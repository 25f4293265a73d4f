#pragma once

// JSON forms of every record the command-line tool reads or writes. The
// layouts are documented in docs/formats.md and schemas/.

#include <cstdint>
#include <string>

#include <json.hpp>

#include "arcdist/leveling.hpp"

namespace arcdist {

using nlohmann::json;

/// Reads and parses a file: Error(io) if it cannot be read, Error(malformed)
/// if it is not JSON.
json read_json_file(const std::string& path);

json to_json(const Triangulation& t);
/// Error(schema) for a malformed record, Error(invalid_input) for an invalid
/// gluing, Error(base_mismatch) if a stated id disagrees with the table.
TriangulationPtr triangulation_from_json(const json& j);

json to_json(const ArcWord& a);
/// The word is tightened; it must be embedded. Error(base_mismatch) when
/// base_id differs from base->id().
ArcWord arc_from_json(const json& j, const TriangulationPtr& base);
/// The record's "triangulation" if present, else the standard triangulation
/// whose id equals "base_id" (genus 1..8).
TriangulationPtr resolve_base(const json& j);

json to_json(const ArcSequence& s);
ArcSequence sequence_from_json(const json& j, const TriangulationPtr& base);

json to_json(const DistanceCertificate& c);
DistanceCertificate distance_certificate_from_json(const json& j);

json to_json(const SurgeryTrace& s);

json to_json(const LevelPosition& L);
LevelPosition level_position_from_json(const json& j, const TriangulationPtr& base);

json to_json(const LevelReport& r);

/// {"v": arc, "w": arc} or {"v_side": [...], "w_side": [...]}.
ShadowPairInput shadow_input_from_json(const json& j, const TriangulationPtr& base);

/// ARCDIST_SEED parsed as an unsigned integer, or `fallback` when unset.
std::uint64_t seed_from_env(std::uint64_t fallback);

}  // namespace arcdist
