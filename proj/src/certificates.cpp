#include "arcdist/certificates.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>

namespace arcdist {

namespace {

std::string kind_of(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw Error(Error::Code::schema, "certificate: missing field \"kind\"");
  return j["kind"].get<std::string>();
}

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw Error(Error::Code::schema, where + ": missing field \"" + key + "\"");
  return j[key];
}

int need_int(const json& j, const char* key, const std::string& where) {
  const json& x = need(j, key, where);
  if (!x.is_number_integer()) throw Error(Error::Code::schema, where + "." + key + ": expected an integer");
  return x.get<int>();
}

void add(std::vector<std::string>& out, const std::string& prefix, const std::vector<std::string>& more) {
  for (const auto& m : more) out.push_back(prefix + m);
}

std::vector<std::string> check_path(const json& j) {
  std::vector<std::string> bad;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };
  const std::string where = "path-certificate";
  auto base = triangulation_from_json(need(j, "triangulation", where));
  const ArcWord v = arc_from_json(need(j, "v", where), base);
  const ArcWord w = arc_from_json(need(j, "w", where), base);
  const ArcSequence path = sequence_from_json(need(j, "path", where), base);
  const int i = intersection(v, w);
  check(need_int(j, "crossings", where) == i, "recorded crossing count differs from i(v,w) = " + std::to_string(i));
  check(need_int(j, "bound", where) == i + 1, "recorded bound is not i(v,w) + 1");
  if (path.arcs.empty()) return {"empty path"};
  check(path.arcs.front() == w, "path does not start at w");
  check(path.arcs.back() == v, "path does not end at v");
  check(need_int(j, "length", where) == path.length(), "recorded length differs from the path");
  check(path.length() <= i + 1, "path length " + std::to_string(path.length()) + " exceeds i(v,w) + 1");
  auto problems = validate_sequence(path);
  for (const auto& p : problems) bad.push_back("path arc " + std::to_string(p.index) + ": " + p.what);

  const json& steps = need(j, "steps", where);
  if (!steps.is_array()) throw Error(Error::Code::schema, where + ".steps: expected an array");
  int prev = i;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const std::string at = "step " + std::to_string(k) + ": ";
    const ArcWord result = arc_from_json(need(steps[k], "result", where + ".steps"), base);
    const int before = need_int(steps[k], "before", where + ".steps");
    const int after = need_int(steps[k], "after", where + ".steps");
    check(k + 1 < path.arcs.size() && path.arcs[k + 1] == result, at + "result is not the next path arc");
    check(intersection(path.arcs[k], result) == 0, at + "result crosses the arc it came from");
    check(before == prev && before == intersection(path.arcs[k], v), at + "before count is wrong");
    check(after == intersection(result, v), at + "after count is wrong");
    check(after < before, at + "crossings with v did not drop");
    prev = after;
  }
  check(prev == 0, "steps stop before reaching an arc disjoint from v");
  return bad;
}

std::vector<std::string> check_level_position(const LevelPosition& L) {
  auto bad = validate_level_position(L);
  if (L.surface_genus() != L.base->genus() * L.n) bad.push_back("genus of the tubed surface is not g*n");
  return bad;
}

std::vector<std::string> check_level_report(const json& j) {
  std::vector<std::string> bad;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };
  const std::string where = "level-report";
  const DistanceCertificate c = distance_certificate_from_json(need(j, "distance", where));
  add(bad, "distance: ", verify(c));
  check(need_int(j, "lower", where) == c.lower, "lower differs from the distance certificate");
  check(need_int(j, "upper", where) == c.upper, "upper differs from the distance certificate");
  const json& trivial = need(j, "trivial_knot", where);
  check(trivial.is_boolean() && trivial.get<bool>() == (c.upper == 0), "trivial_knot flag is wrong");
  const json& lp = need(j, "level_position", where);
  if (c.upper == 0) {
    check(lp.is_null(), "level position given for distance 0");
    return bad;
  }
  if (lp.is_null()) {
    bad.push_back("missing level position");
    return bad;
  }
  const LevelPosition L = level_position_from_json(lp, c.v.base());
  auto more = check_level_position(L);
  add(bad, "level position: ", more);
  if (!more.empty()) return bad;
  check(L.n == c.upper, "level count " + std::to_string(L.n) + " differs from the distance bound " +
                            std::to_string(c.upper));
  check(L.level_arcs[0] == c.v, "first level arc is not the V-side shadow");
  check(L.level_arcs[1] == c.w, "last level arc is not the W-side shadow");
  auto seq = leveling_to_arc_sequence(L).arcs;
  std::reverse(seq.begin(), seq.end());
  check(seq == c.path.arcs, "level position does not carry the certified path");
  return bad;
}

}  // namespace

std::string verdict_string(int lower, int upper) {
  if (lower == upper) return "exact(" + std::to_string(lower) + ")";
  return "bounds(" + std::to_string(lower) + "," + std::to_string(upper) + ")";
}

json path_certificate(const ArcWord& v, const ArcWord& w) {
  const ArcSequence path = path_between(v, w);
  json steps = json::array();
  ArcWord cur = w;
  while (intersection(v, cur) > 0) {
    SurgeryTrace s = surgery_step(v, cur);
    steps.push_back(to_json(s));
    cur = s.result;
  }
  if (static_cast<std::size_t>(steps.size()) + (cur == v ? 1 : 2) != path.arcs.size())
    throw Error(Error::Code::internal, "surgery steps do not reproduce path_between");
  const int i = intersection(v, w);
  return {{"kind", "path-certificate"}, {"triangulation", to_json(v.triangulation())},
          {"v", to_json(v)},            {"w", to_json(w)},
          {"crossings", i},             {"bound", i + 1},
          {"length", path.length()},    {"steps", steps},
          {"path", to_json(path)}};
}

std::vector<std::string> check_certificate(const json& cert) {
  const std::string kind = kind_of(cert);
  if (kind == "distance-certificate") return verify(distance_certificate_from_json(cert));
  if (kind == "path-certificate") return check_path(cert);
  if (kind == "level-position") {
    auto base = triangulation_from_json(need(cert, "triangulation", kind));
    return check_level_position(level_position_from_json(cert, base));
  }
  if (kind == "level-report") return check_level_report(cert);
  if (kind == "example") {
    auto out = run_example(example_from_json(cert));
    return out.problems;
  }
  throw Error(Error::Code::schema, "certificate: unknown kind \"" + kind + "\"");
}

ExampleRecord example_from_json(const json& j) {
  const std::string where = "example";
  if (kind_of(j) != "example") throw Error(Error::Code::schema, where + ": kind is not \"example\"");
  ExampleRecord r;
  const json& name = need(j, "name", where);
  if (!name.is_string()) throw Error(Error::Code::schema, where + ".name: expected a string");
  r.name = name.get<std::string>();
  r.base = triangulation_from_json(need(j, "triangulation", where));
  if (need_int(j, "genus", where) != r.base->genus())
    throw Error(Error::Code::invalid_input, where + ": genus differs from the triangulation");
  r.input = shadow_input_from_json(j, r.base);
  const json& expected = need(j, "expected", where);
  if (!expected.is_object() || expected.value("type", "") != "exact")
    throw Error(Error::Code::schema, where + ".expected: only exact values are stated");
  r.expected = need_int(expected, "value", where + ".expected");
  const json& knot = need(j, "knot", where);
  r.knot = knot.value("name", "");
  if (knot.contains("torus_class")) {
    const json& tc = knot["torus_class"];
    if (!tc.is_array() || tc.size() != 2 || !tc[0].is_number_integer() || !tc[1].is_number_integer())
      throw Error(Error::Code::schema, where + ".knot.torus_class: expected [int, int]");
    r.torus_class = std::pair{tc[0].get<int>(), tc[1].get<int>()};
  }
  r.provenance = j.value("provenance", "");
  return r;
}

ExampleOutcome run_example(const ExampleRecord& r) {
  ExampleOutcome out{r.name, false, "", {}, nullptr};
  auto fail = [&](const std::string& what) { out.problems.push_back(what); };
  const LevelReport report = level_number_report(r.input);
  const DistanceCertificate& c = report.distance.best;
  out.verdict = verdict_string(c.lower, c.upper);
  if (!(c.exact() && c.lower == r.expected))
    fail("expected exact(" + std::to_string(r.expected) + "), got " + out.verdict);

  if (r.torus_class) {
    if (r.base->genus() != 1) {
      fail("torus class given for genus " + std::to_string(r.base->genus()));
    } else if (c.crossings != 0 || c.v == c.w) {
      fail("torus-knot shadows must be distinct and disjoint");
    } else {
      int x = std::abs(loop_intersection(c.v, c.w, 1)), y = std::abs(loop_intersection(c.v, c.w, 2));
      int p = std::abs(r.torus_class->first), q = std::abs(r.torus_class->second);
      if (std::minmax(x, y) != std::minmax(p, q))
        fail("loop class (" + std::to_string(x) + "," + std::to_string(y) + ") is not the stated torus class");
    }
  }

  if (r.expected >= 1) {
    if (!report.certificate) {
      fail("no level certificate");
    } else {
      const LevelPosition& L = *report.certificate;
      if (L.n != r.expected) fail("certificate has " + std::to_string(L.n) + " levels");
      if (L.surface_genus() != r.base->genus() * L.n) fail("tubed surface genus is not g*n");
    }
  }

  out.report = to_json(report);
  add(out.problems, "serialized report: ", check_certificate(json::parse(out.report.dump())));
  out.pass = out.problems.empty();
  return out;
}

std::vector<std::string> example_files(const std::string& dir) {
  std::vector<std::string> out;
  std::error_code ec;
  for (const auto& e : std::filesystem::directory_iterator(dir, ec))
    if (e.path().extension() == ".json") out.push_back(e.path().string());
  if (ec) throw Error(Error::Code::io, "cannot list " + dir + ": " + ec.message());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace arcdist
