#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace arcdist {

/// Error raised for invalid inputs across the library. The code groups
/// failures so the command-line front end can map them to exit statuses.
class Error : public std::runtime_error {
 public:
  enum class Code { invalid_input, schema, base_mismatch, precondition, internal, malformed, io };

  Error(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

enum class Vertex : std::uint8_t { P1 = 1, P2 = 2 };

/// Corner `pos` of triangle `tri`. Corner k sits between side k-1 and side k.
struct Corner {
  int tri = 0;
  int pos = 0;
  auto operator<=>(const Corner&) const = default;
};

/// Side `pos` of triangle `tri`, running from corner pos to corner pos+1.
/// An arc leaving a triangle is recorded by the side it exits through.
struct Side {
  int tri = 0;
  int pos = 0;
  auto operator<=>(const Side&) const = default;
};

inline int next3(int i) { return (i + 1) % 3; }
inline int prev3(int i) { return (i + 2) % 3; }

/// Raw gluing data, possibly invalid. Edge labels are 1..E; a positive entry
/// means the side runs along the edge's orientation, a negative one against.
struct TriangulationTable {
  int genus = 0;
  std::vector<std::array<int, 3>> triangles;
  Corner p1_anchor{0, 0};

  bool operator==(const TriangulationTable&) const = default;
};

struct Violation {
  std::string kind;
  std::string detail;
};

std::vector<Violation> validate(const TriangulationTable& table);

/// A validated ideal triangulation of a closed oriented genus-g surface whose
/// only vertices are the two marked points P1 and P2. Immutable.
class Triangulation {
 public:
  /// Throws Error(invalid_input) listing every violation.
  explicit Triangulation(TriangulationTable table);

  const TriangulationTable& table() const noexcept { return table_; }
  int genus() const noexcept { return table_.genus; }
  int num_triangles() const noexcept { return static_cast<int>(table_.triangles.size()); }
  int num_edges() const noexcept { return num_triangles() * 3 / 2; }
  int num_vertices() const noexcept { return 2; }

  int signed_label(Side s) const { return table_.triangles[s.tri][s.pos]; }
  int edge(Side s) const { return std::abs(signed_label(s)); }
  Side twin(Side s) const { return twin_[s.tri][s.pos]; }
  /// The side carrying +edge (positive == true) or -edge.
  Side side_of(int edge, bool positive = true) const;
  Vertex vertex(Corner c) const { return vertex_[c.tri][c.pos]; }

  bool flippable(int edge) const;
  std::vector<int> flippable_edges() const;
  /// Edges whose two endpoints are P1 and P2.
  std::vector<int> p1p2_edges() const;

  /// Stable identifier derived from the gluing table.
  const std::string& id() const noexcept { return id_; }

  bool operator==(const Triangulation& other) const { return table_ == other.table_; }

 private:
  TriangulationTable table_;
  std::vector<std::array<Side, 3>> twin_;
  std::vector<std::array<Vertex, 3>> vertex_;
  std::vector<std::array<Side, 2>> edge_sides_;
  std::string id_;
};

using TriangulationPtr = std::shared_ptr<const Triangulation>;

/// Fan triangulation of the standard 4g-gon with P2 inserted in the first
/// triangle. Layout documented in docs/formats.md.
TriangulationTable standard_table(int genus);
TriangulationPtr build_standard_triangulation(int genus);

/// Where a flip happens. `low_had_plus` records which of the two affected
/// triangles carried the positive side before the flip, which picks the
/// rotation sense so that flipping the same label again is the identity.
struct FlipData {
  int edge = 0;
  int low = 0;   ///< smaller triangle index in the quadrilateral
  int high = 0;  ///< larger triangle index
  int low_pos = 0;
  int high_pos = 0;
  bool low_had_plus = true;
};

FlipData flip_data(const Triangulation& t, int edge);
TriangulationPtr flip(const Triangulation& t, int edge);

/// Canonical code of the triangulation up to relabeling of triangles, edges,
/// edge orientations and cyclic rotation of triangles. P1/P2 labels are kept.
std::vector<int> canonical_code(const Triangulation& t);
bool isomorphic(const Triangulation& a, const Triangulation& b);

}  // namespace arcdist
