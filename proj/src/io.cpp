#include "arcdist/io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace arcdist {

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(Error::Code::schema, where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(where, std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) schema_error(where, "expected an integer");
  return j.get<int>();
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) schema_error(where, "expected a string");
  return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array");
  return j;
}

json pair_json(int a, int b) { return json::array({a, b}); }

std::pair<int, int> int_pair(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) schema_error(where, "expected [int, int]");
  return {as_int(j[0], where + "[0]"), as_int(j[1], where + "[1]")};
}

Corner corner_from(const json& j, const std::string& where) {
  auto [t, c] = int_pair(j, where);
  return {t, c};
}

void check_corner(const Triangulation& t, Corner c, const std::string& where) {
  if (c.tri < 0 || c.tri >= t.num_triangles() || c.pos < 0 || c.pos > 2)
    throw Error(Error::Code::invalid_input, where + ": corner out of range");
}

const char* kind_prefix(StrandKind k) {
  switch (k) {
    case StrandKind::arc:
      return "s";
    case StrandKind::alpha:
      return "alpha";
    case StrandKind::beta:
      return "beta";
    case StrandKind::p_vertical:
      return "p";
    case StrandKind::q_vertical:
      return "q";
  }
  return "?";
}

int parse_int(std::string_view s, const std::string& where) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) schema_error(where, "bad number in strand name");
  return v;
}

Strand strand_from_name(const std::string& name, const std::string& where) {
  const auto us = name.find('_');
  if (us == std::string::npos) schema_error(where, "bad strand name \"" + name + "\"");
  const std::string prefix = name.substr(0, us);
  const std::string rest = name.substr(us + 1);
  for (StrandKind k : {StrandKind::arc, StrandKind::alpha, StrandKind::beta, StrandKind::p_vertical,
                       StrandKind::q_vertical}) {
    if (prefix != kind_prefix(k)) continue;
    const bool vertical = k == StrandKind::p_vertical || k == StrandKind::q_vertical;
    const auto at = rest.find('@');
    if (vertical) {
      if (at != std::string::npos) schema_error(where, "vertical strand names carry no level");
      const int j = parse_int(rest, where);
      return {k, j, j};
    }
    if (at == std::string::npos) schema_error(where, "strand name needs @level");
    return {k, parse_int(std::string_view(rest).substr(0, at), where),
            parse_int(std::string_view(rest).substr(at + 1), where)};
  }
  schema_error(where, "unknown strand kind \"" + prefix + "\"");
}

json stub_json(const Stub& s) {
  json j{{"corner", pair_json(s.corner.tri, s.corner.pos)}};
  j["side"] = s.side ? pair_json(s.side->tri, s.side->pos) : json(nullptr);
  return j;
}

Stub stub_from(const json& j, const std::string& where) {
  Stub s{corner_from(field(j, "corner", where), where + ".corner"), std::nullopt};
  const json& side = field(j, "side", where);
  if (!side.is_null()) {
    auto [t, p] = int_pair(side, where + ".side");
    s.side = Side{t, p};
  }
  return s;
}

json limits_json(const SearchLimits& l) { return {{"max_len", l.max_len}, {"max_depth", l.max_depth}}; }

SearchLimits limits_from(const json& j, const std::string& where) {
  return {as_int(field(j, "max_len", where), where + ".max_len"),
          as_int(field(j, "max_depth", where), where + ".max_depth")};
}

std::vector<ArcWord> arc_list(const json& j, const TriangulationPtr& base, const std::string& where) {
  std::vector<ArcWord> out;
  for (std::size_t k = 0; k < as_array(j, where).size(); ++k) out.push_back(arc_from_json(j[k], base));
  return out;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Error::Code::io, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw Error(Error::Code::malformed, path + ": " + e.what());
  }
}

json to_json(const Triangulation& t) {
  json tris = json::array();
  for (const auto& tri : t.table().triangles) tris.push_back({tri[0], tri[1], tri[2]});
  return {{"genus", t.genus()},
          {"triangles", tris},
          {"p1_corner", pair_json(t.table().p1_anchor.tri, t.table().p1_anchor.pos)},
          {"id", t.id()}};
}

TriangulationPtr triangulation_from_json(const json& j) {
  const std::string where = "triangulation";
  TriangulationTable table;
  table.genus = as_int(field(j, "genus", where), where + ".genus");
  const json& tris = as_array(field(j, "triangles", where), where + ".triangles");
  for (std::size_t k = 0; k < tris.size(); ++k) {
    const std::string w = where + ".triangles[" + std::to_string(k) + "]";
    if (!tris[k].is_array() || tris[k].size() != 3) schema_error(w, "expected three edge labels");
    table.triangles.push_back({as_int(tris[k][0], w), as_int(tris[k][1], w), as_int(tris[k][2], w)});
  }
  table.p1_anchor = corner_from(field(j, "p1_corner", where), where + ".p1_corner");
  auto t = std::make_shared<const Triangulation>(std::move(table));
  if (j.contains("id") && as_string(j["id"], where + ".id") != t->id())
    throw Error(Error::Code::base_mismatch, "triangulation id " + j["id"].get<std::string>() +
                                                " does not match its table (" + t->id() + ")");
  return t;
}

json to_json(const ArcWord& a) {
  json cs = json::array();
  for (const Side& s : a.crossings()) {
    const int label = a.triangulation().signed_label(s);
    cs.push_back({{"edge", std::abs(label)}, {"side", label > 0 ? "+" : "-"}});
  }
  return {{"base_id", a.triangulation().id()},
          {"start_corner", pair_json(a.start_corner().tri, a.start_corner().pos)},
          {"crossings", cs},
          {"end_corner", pair_json(a.end_corner().tri, a.end_corner().pos)}};
}

ArcWord arc_from_json(const json& j, const TriangulationPtr& base) {
  const std::string where = "arc";
  const std::string id = as_string(field(j, "base_id", where), where + ".base_id");
  if (id != base->id()) throw Error(Error::Code::base_mismatch, "arc over " + id + ", expected " + base->id());
  const Triangulation& t = *base;
  RawArc raw;
  raw.start = corner_from(field(j, "start_corner", where), where + ".start_corner");
  raw.end = corner_from(field(j, "end_corner", where), where + ".end_corner");
  check_corner(t, raw.start, where + ".start_corner");
  check_corner(t, raw.end, where + ".end_corner");
  const json& cs = as_array(field(j, "crossings", where), where + ".crossings");
  int tri = raw.start.tri;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    const std::string w = where + ".crossings[" + std::to_string(k) + "]";
    const int edge = as_int(field(cs[k], "edge", w), w + ".edge");
    const std::string sign = as_string(field(cs[k], "side", w), w + ".side");
    if (sign != "+" && sign != "-") schema_error(w + ".side", "expected \"+\" or \"-\"");
    if (edge < 1 || edge > t.num_edges()) throw Error(Error::Code::invalid_input, w + ": no edge " + std::to_string(edge));
    const Side s = t.side_of(edge, sign == "+");
    if (s.tri != tri)
      throw Error(Error::Code::invalid_input, w + ": side " + sign + std::to_string(edge) +
                                                  " is not on the triangle the arc is in");
    raw.exits.push_back(s);
    tri = t.twin(s).tri;
  }
  check_consistent(t, raw);
  ArcWord a = tighten(base, std::move(raw));
  if (!embedded(a)) throw Error(Error::Code::invalid_input, "arc is not embedded");
  return a;
}

TriangulationPtr resolve_base(const json& j) {
  if (j.is_object() && j.contains("triangulation")) return triangulation_from_json(j["triangulation"]);
  const std::string id = as_string(field(j, "base_id", "record"), "record.base_id");
  for (int g = 1; g <= 8; ++g) {
    auto t = build_standard_triangulation(g);
    if (t->id() == id) return t;
  }
  throw Error(Error::Code::base_mismatch, "base " + id + " is not a standard triangulation; embed it or pass --tri");
}

json to_json(const ArcSequence& s) {
  json out = json::array();
  for (const auto& a : s.arcs) out.push_back(to_json(a));
  return out;
}

ArcSequence sequence_from_json(const json& j, const TriangulationPtr& base) { return {base, arc_list(j, base, "path")}; }

json to_json(const DistanceCertificate& c) {
  json j{{"kind", "distance-certificate"},
         {"triangulation", to_json(c.v.triangulation())},
         {"v", to_json(c.v)},
         {"w", to_json(c.w)},
         {"crossings", c.crossings},
         {"path", to_json(c.path)},
         {"path_source", c.path_source}};
  if (c.exact())
    j["verdict"] = {{"type", "exact"}, {"value", c.lower}};
  else
    j["verdict"] = {{"type", "bounds"}, {"lower", c.lower}, {"upper", c.upper}};
  j["witness"] = c.witness ? to_json(*c.witness) : json(nullptr);
  j["search"] = c.search ? limits_json(*c.search) : json(nullptr);
  return j;
}

DistanceCertificate distance_certificate_from_json(const json& j) {
  const std::string where = "certificate";
  if (as_string(field(j, "kind", where), where + ".kind") != "distance-certificate")
    schema_error(where, "not a distance certificate");
  auto base = triangulation_from_json(field(j, "triangulation", where));
  DistanceCertificate c{arc_from_json(field(j, "v", where), base), arc_from_json(field(j, "w", where), base),
                        0, 0, 0, std::nullopt, ArcSequence{base, {}}, "", std::nullopt};
  c.crossings = as_int(field(j, "crossings", where), where + ".crossings");
  const json& verdict = field(j, "verdict", where);
  const std::string type = as_string(field(verdict, "type", where + ".verdict"), where + ".verdict.type");
  if (type == "exact") {
    c.lower = c.upper = as_int(field(verdict, "value", where + ".verdict"), where + ".verdict.value");
  } else if (type == "bounds") {
    c.lower = as_int(field(verdict, "lower", where + ".verdict"), where + ".verdict.lower");
    c.upper = as_int(field(verdict, "upper", where + ".verdict"), where + ".verdict.upper");
  } else {
    schema_error(where + ".verdict.type", "expected \"exact\" or \"bounds\"");
  }
  c.path = sequence_from_json(field(j, "path", where), base);
  c.path_source = as_string(field(j, "path_source", where), where + ".path_source");
  if (j.contains("witness") && !j["witness"].is_null()) c.witness = arc_from_json(j["witness"], base);
  if (j.contains("search") && !j["search"].is_null()) c.search = limits_from(j["search"], where + ".search");
  return c;
}

json to_json(const SurgeryTrace& s) {
  return {{"crossing", s.crossing},
          {"resolution", s.resolution == Resolution::near ? "near" : "far"},
          {"before", s.before},
          {"after", s.after},
          {"result", to_json(s.result)}};
}

json to_json(const LevelPosition& L) {
  json levels = json::array();
  for (const auto& lv : L.levels) {
    json names = json::array();
    for (const auto& s : lv.strands) names.push_back(strand_name(s));
    levels.push_back({{"index", lv.index}, {"strands", names}});
  }
  json tubes = json::array();
  for (const auto& t : L.tubes)
    tubes.push_back({{"index", t.index},
                     {"core", to_json(t.core)},
                     {"alpha", stub_json(t.alpha)},
                     {"beta", stub_json(t.beta)},
                     {"verticals", {"p_" + std::to_string(t.index), "q_" + std::to_string(t.index)}}});
  json cycle = json::array();
  for (const auto& s : L.cycle) cycle.push_back(strand_name(s));
  return {{"kind", "level-position"},
          {"triangulation", to_json(*L.base)},
          {"n", L.n},
          {"level_arcs", json::array({to_json(L.level_arcs[0]), to_json(L.level_arcs[1])})},
          {"levels", levels},
          {"tubes", tubes},
          {"cycle", cycle},
          {"surface_genus", L.surface_genus()}};
}

LevelPosition level_position_from_json(const json& j, const TriangulationPtr& base) {
  const std::string where = "level_position";
  LevelPosition L;
  L.base = base;
  L.n = as_int(field(j, "n", where), where + ".n");
  L.level_arcs = arc_list(field(j, "level_arcs", where), base, where + ".level_arcs");
  if (L.level_arcs.size() != 2) schema_error(where + ".level_arcs", "expected two arcs");
  const json& levels = as_array(field(j, "levels", where), where + ".levels");
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const std::string w = where + ".levels[" + std::to_string(k) + "]";
    Level lv{as_int(field(levels[k], "index", w), w + ".index"), {}};
    const json& names = as_array(field(levels[k], "strands", w), w + ".strands");
    for (const auto& nm : names) lv.strands.push_back(strand_from_name(as_string(nm, w), w));
    L.levels.push_back(std::move(lv));
  }
  const json& tubes = as_array(field(j, "tubes", where), where + ".tubes");
  for (std::size_t k = 0; k < tubes.size(); ++k) {
    const std::string w = where + ".tubes[" + std::to_string(k) + "]";
    L.tubes.push_back({as_int(field(tubes[k], "index", w), w + ".index"), arc_from_json(field(tubes[k], "core", w), base),
                       stub_from(field(tubes[k], "alpha", w), w + ".alpha"),
                       stub_from(field(tubes[k], "beta", w), w + ".beta")});
  }
  const json& cycle = as_array(field(j, "cycle", where), where + ".cycle");
  for (const auto& nm : cycle) L.cycle.push_back(strand_from_name(as_string(nm, where + ".cycle"), where + ".cycle"));
  if (j.contains("surface_genus") && as_int(j["surface_genus"], where + ".surface_genus") != L.surface_genus())
    throw Error(Error::Code::invalid_input, "stated surface_genus disagrees with the level data");
  return L;
}

json to_json(const LevelReport& r) {
  json j{{"kind", "level-report"},
         {"lower", r.lower},
         {"upper", r.upper},
         {"trivial_knot", r.trivial_knot},
         {"v_index", r.distance.v_index},
         {"w_index", r.distance.w_index},
         {"distance", to_json(r.distance.best)},
         {"notes", r.notes}};
  j["level_position"] = r.certificate ? to_json(*r.certificate) : json(nullptr);
  return j;
}

ShadowPairInput shadow_input_from_json(const json& j, const TriangulationPtr& base) {
  const std::string where = "input";
  if (j.is_object() && j.contains("v_side"))
    return {arc_list(field(j, "v_side", where), base, where + ".v_side"),
            arc_list(field(j, "w_side", where), base, where + ".w_side")};
  return {{arc_from_json(field(j, "v", where), base)}, {arc_from_json(field(j, "w", where), base)}};
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* s = std::getenv("ARCDIST_SEED");
  if (!s || !*s) return fallback;
  std::uint64_t v = 0;
  const std::string_view sv(s);
  auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
  if (ec != std::errc() || ptr != sv.data() + sv.size())
    throw Error(Error::Code::invalid_input, "ARCDIST_SEED must be an unsigned integer");
  return v;
}

}  // namespace arcdist
