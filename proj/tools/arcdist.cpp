// Command-line front end. Exit codes are listed in docs/formats.md.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "arcdist/certificates.hpp"
#include "render.hpp"

using namespace arcdist;

namespace {

enum Exit {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kMalformed = 3,
  kSchema = 4,
  kBaseMismatch = 5,
  kInvalidInput = 6,
  kPrecondition = 7,
  kInternal = 8,
  kIo = 9,
};

int exit_code(Error::Code c) {
  switch (c) {
    case Error::Code::malformed:
      return kMalformed;
    case Error::Code::schema:
      return kSchema;
    case Error::Code::base_mismatch:
      return kBaseMismatch;
    case Error::Code::invalid_input:
      return kInvalidInput;
    case Error::Code::precondition:
      return kPrecondition;
    case Error::Code::internal:
      return kInternal;
    case Error::Code::io:
      return kIo;
  }
  return kInternal;
}

const char* code_name(Error::Code c) {
  switch (c) {
    case Error::Code::malformed:
      return "malformed JSON";
    case Error::Code::schema:
      return "schema violation";
    case Error::Code::base_mismatch:
      return "base mismatch";
    case Error::Code::invalid_input:
      return "invalid input";
    case Error::Code::precondition:
      return "precondition failed";
    case Error::Code::internal:
      return "internal error";
    case Error::Code::io:
      return "I/O error";
  }
  return "error";
}

struct Options {
  std::string tri;
  std::string out;
  std::optional<int> max_len;
  int max_depth = 4;
};

void emit(const json& j, const Options& o) {
  if (o.out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(o.out);
  f << j.dump(2) << "\n";
  if (!f) throw Error(Error::Code::io, "cannot write " + o.out);
}

TriangulationPtr tri_file(const std::string& path) {
  const json j = read_json_file(path);
  return triangulation_from_json(j.is_object() && j.contains("triangulation") ? j["triangulation"] : j);
}

// Base of an input record: --tri, an embedded triangulation, or the standard
// triangulation named by the first arc's base_id.
TriangulationPtr base_for(const json& j, const Options& o) {
  if (!o.tri.empty()) return tri_file(o.tri);
  if (j.is_object() && j.contains("triangulation")) return triangulation_from_json(j["triangulation"]);
  if (j.is_object() && j.contains("base_id")) return resolve_base(j);
  for (const char* key : {"v", "w"})
    if (j.is_object() && j.contains(key)) return resolve_base(j[key]);
  for (const char* key : {"v_side", "w_side"})
    if (j.is_object() && j.contains(key) && j[key].is_array() && !j[key].empty()) return resolve_base(j[key][0]);
  throw Error(Error::Code::schema, "input: no triangulation, base_id or arcs found");
}

std::optional<SearchLimits> limits(const Options& o) {
  if (!o.max_len) return std::nullopt;
  if (*o.max_len < 0 || o.max_depth < 0) throw Error(Error::Code::invalid_input, "search limits must be non-negative");
  return SearchLimits{*o.max_len, o.max_depth};
}

int cmd_tri(const std::string& check, int standard, const Options& o) {
  if (standard > 0) {
    emit(to_json(*build_standard_triangulation(standard)), o);
    return kOk;
  }
  const json j = read_json_file(check);
  const json& tj = j.is_object() && j.contains("triangulation") ? j["triangulation"] : j;
  // Parse the table by hand so every violation is reported, not only the first.
  if (!tj.is_object() || !tj.contains("genus") || !tj.contains("triangles") || !tj.contains("p1_corner"))
    throw Error(Error::Code::schema, "triangulation: needs genus, triangles and p1_corner");
  TriangulationTable table;
  try {
    table.genus = tj["genus"].get<int>();
    table.triangles = tj["triangles"].get<std::vector<std::array<int, 3>>>();
    auto p1 = tj["p1_corner"].get<std::array<int, 2>>();
    table.p1_anchor = {p1[0], p1[1]};
  } catch (const nlohmann::json::exception& e) {
    throw Error(Error::Code::schema, std::string("triangulation: ") + e.what());
  }
  json report{{"kind", "triangulation-check"}};
  json violations = json::array();
  for (const auto& v : validate(table)) violations.push_back({{"kind", v.kind}, {"detail", v.detail}});
  report["valid"] = violations.empty();
  report["violations"] = violations;
  if (violations.empty()) {
    auto t = triangulation_from_json(tj);
    report["id"] = t->id();
    report["genus"] = t->genus();
    report["vertices"] = t->num_vertices();
    report["edges"] = t->num_edges();
    report["triangles"] = t->num_triangles();
    report["euler_characteristic"] = t->num_vertices() - t->num_edges() + t->num_triangles();
  }
  emit(report, o);
  return violations.empty() ? kOk : kVerificationFailed;
}

int cmd_dist(const std::string& file, const Options& o) {
  const json j = read_json_file(file);
  const auto base = base_for(j, o);
  const auto input = shadow_input_from_json(j, base);
  const auto r = pair_set_distance(input, limits(o));
  json out = to_json(r.best);
  if (input.v_side.size() > 1 || input.w_side.size() > 1) {
    out["v_index"] = r.v_index;
    out["w_index"] = r.w_index;
  }
  emit(out, o);
  return kOk;
}

int cmd_path(const std::string& vfile, const std::string& wfile, const Options& o) {
  const json vj = read_json_file(vfile), wj = read_json_file(wfile);
  const auto base = base_for(vj, o);
  const ArcWord v = arc_from_json(vj, base);
  const ArcWord w = arc_from_json(wj, base);
  emit(path_certificate(v, w), o);
  return kOk;
}

int cmd_level(const std::string& file, const Options& o) {
  const json j = read_json_file(file);
  const auto base = base_for(j, o);
  emit(to_json(level_number_report(shadow_input_from_json(j, base), limits(o))), o);
  return kOk;
}

int cmd_check(const std::string& file, const Options& o) {
  const json j = read_json_file(file);
  const auto problems = check_certificate(j);
  emit({{"kind", j["kind"]}, {"valid", problems.empty()}, {"problems", problems}}, o);
  return problems.empty() ? kOk : kVerificationFailed;
}

int cmd_render(const std::string& file, const std::string& dir) {
  const json j = read_json_file(file);
  for (const auto& f : render::render_certificate(j, dir)) std::cout << f << "\n";
  return kOk;
}

int cmd_examples(const std::string& dir, const std::string& out_dir) {
  int failed = 0;
  const auto files = example_files(dir);
  if (files.empty()) throw Error(Error::Code::io, "no example records in " + dir);
  for (const auto& f : files) {
    const auto rec = example_from_json(read_json_file(f));
    const auto r = run_example(rec);
    std::cout << (r.pass ? "PASS " : "FAIL ") << rec.name << ": " << r.verdict << " (expected exact("
              << rec.expected << "))";
    if (!r.report["level_position"].is_null())
      std::cout << ", " << r.report["level_position"]["n"].get<int>() << "-level certificate";
    std::cout << "\n";
    for (const auto& p : r.problems) std::cout << "  " << p << "\n";
    failed += !r.pass;
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      const auto path = std::filesystem::path(out_dir) / std::filesystem::path(f).filename();
      std::ofstream o(path);
      o << r.report.dump(2) << "\n";
      if (!o) throw Error(Error::Code::io, "cannot write " + path.string());
    }
  }
  std::cout << files.size() - failed << "/" << files.size() << " records pass\n";
  return failed ? kVerificationFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arcdist: arc distance of (g,1)-knot shadows on a twice-marked surface"};
  app.require_subcommand(1);
  Options o;
  auto add_out = [&](CLI::App* sub) { sub->add_option("-o,--out", o.out, "write JSON here instead of stdout"); };
  auto add_tri = [&](CLI::App* sub) {
    sub->add_option("--tri", o.tri, "triangulation JSON used as the base of every arc");
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--max-len", o.max_len, "enable bounded search over arcs with at most N crossings");
    sub->add_option("--max-depth", o.max_depth, "longest path the search considers")->capture_default_str();
  };

  std::string check_file;
  int standard = 0;
  auto* tri = app.add_subcommand("tri", "validate a triangulation or print a standard one");
  auto* tri_mode = tri->add_option_group("mode");
  tri_mode->add_option("--check", check_file, "triangulation JSON to validate")->check(CLI::ExistingFile);
  tri_mode->add_option("--standard", standard, "print the standard triangulation of this genus")
      ->check(CLI::Range(1, 64));
  tri_mode->require_option(1);
  add_out(tri);

  std::string in_file;
  auto* dist = app.add_subcommand("dist", "classify the arc distance of a shadow pair");
  dist->add_option("PAIR", in_file, "pair or shadow-list JSON")->required();
  add_search(dist);
  add_tri(dist);
  add_out(dist);

  std::string v_file, w_file;
  auto* path = app.add_subcommand("path", "surgery path between two arcs with its steps");
  path->add_option("V", v_file, "arc JSON")->required();
  path->add_option("W", w_file, "arc JSON")->required();
  add_tri(path);
  add_out(path);

  auto* level = app.add_subcommand("level", "level number report with a level-position certificate");
  level->add_option("INPUT", in_file, "pair or shadow-list JSON")->required();
  add_search(level);
  add_tri(level);
  add_out(level);

  auto* check = app.add_subcommand("check-cert", "re-verify a certificate from its serialized form");
  check->add_option("CERT", in_file, "certificate JSON")->required();
  add_out(check);

  std::string svg_dir;
  auto* render = app.add_subcommand("render", "draw a certificate as SVG");
  render->add_option("CERT", in_file, "certificate JSON")->required();
  render->add_option("--svg", svg_dir, "output directory")->required();

  std::string data_dir = ARCDIST_DATA_DIR, examples_out;
  auto* examples = app.add_subcommand("examples", "run the bundled example corpus");
  examples->add_option("--data", data_dir, "directory of example records")->capture_default_str();
  examples->add_option("--out", examples_out, "write each record's level report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*tri) return cmd_tri(check_file, standard, o);
    if (*dist) return cmd_dist(in_file, o);
    if (*path) return cmd_path(v_file, w_file, o);
    if (*level) return cmd_level(in_file, o);
    if (*check) return cmd_check(in_file, o);
    if (*render) return cmd_render(in_file, svg_dir);
    if (*examples) return cmd_examples(data_dir, examples_out);
  } catch (const Error& e) {
    std::cerr << "arcdist: " << code_name(e.code()) << ": " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "arcdist: schema violation: " << e.what() << "\n";
    return kSchema;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "arcdist: I/O error: " << e.what() << "\n";
    return kIo;
  }
  return kUsage;
}
