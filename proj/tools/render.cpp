#include "render.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "arcdist/certificates.hpp"

namespace arcdist::render {

namespace {

struct Pt {
  double x, y;
};

Pt lerp(Pt a, Pt b, double f) { return {a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)}; }

constexpr double kCell = 230, kSide = 180, kTop = 60;

enum class Style { full, stubs };

struct Stroke {
  ArcWord arc;
  std::vector<double> fractions;
  std::string color;
  Style style;
};

class Net {
 public:
  explicit Net(const Triangulation& t) : t_(t), cols_(std::min(t.num_triangles(), 4)) {}

  Pt corner(Corner c) const {
    const double x0 = (c.tri % cols_) * kCell + 25, y0 = kTop + (c.tri / cols_) * kCell + 200;
    switch (c.pos) {
      case 0:
        return {x0, y0};
      case 1:
        return {x0 + kSide, y0};
      default:
        return {x0 + kSide / 2, y0 - kSide * 0.866};
    }
  }

  Pt side_point(Side s, double f) const {
    const Pt a = corner({s.tri, s.pos}), b = corner({s.tri, next3(s.pos)});
    return t_.signed_label(s) > 0 ? lerp(a, b, f) : lerp(b, a, f);
  }

  double width() const { return cols_ * kCell + 20; }
  double height() const { return kTop + ((t_.num_triangles() + cols_ - 1) / cols_) * kCell + 20; }

  void frame(std::ostream& out) const {
    for (int tri = 0; tri < t_.num_triangles(); ++tri) {
      Pt c[3];
      for (int k = 0; k < 3; ++k) c[k] = corner({tri, k});
      out << "<polygon points=\"";
      for (auto p : c) out << p.x << "," << p.y << " ";
      out << "\" fill=\"#f7f7f2\" stroke=\"#888\" stroke-width=\"1\"/>\n";
      const Pt mid{(c[0].x + c[1].x + c[2].x) / 3, (c[0].y + c[1].y + c[2].y) / 3};
      out << "<text x=\"" << mid.x << "\" y=\"" << mid.y << "\" font-size=\"11\" fill=\"#bbb\" text-anchor=\"middle\">T"
          << tri << "</text>\n";
      for (int k = 0; k < 3; ++k) {
        const Pt m = lerp(c[k], c[(k + 1) % 3], 0.5);
        const Pt o = lerp(mid, m, 1.18);
        out << "<text x=\"" << o.x << "\" y=\"" << o.y + 4 << "\" font-size=\"11\" fill=\"#555\" text-anchor=\"middle\">"
            << t_.signed_label({tri, k}) << "</text>\n";
      }
    }
  }

  void marks(std::ostream& out) const {
    for (int tri = 0; tri < t_.num_triangles(); ++tri)
      for (int k = 0; k < 3; ++k) {
        const Pt p = corner({tri, k});
        const bool p1 = t_.vertex({tri, k}) == Vertex::P1;
        out << "<circle cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"4\" fill=\"" << (p1 ? "#000" : "#fff")
            << "\" stroke=\"#000\"/>\n";
      }
  }

  void stroke(std::ostream& out, const Stroke& s) const {
    const ArcWord& a = s.arc;
    const int len = a.length();
    for (int k = 0; k <= len; ++k) {
      const Pt from = k == 0 ? corner(a.start_corner()) : side_point(t_.twin(a.crossings()[k - 1]), s.fractions[k - 1]);
      const Pt to = k == len ? corner(a.end_corner()) : side_point(a.crossings()[k], s.fractions[k]);
      const bool solid = s.style == Style::full || k == 0 || k == len;
      out << "<line x1=\"" << from.x << "\" y1=\"" << from.y << "\" x2=\"" << to.x << "\" y2=\"" << to.y
          << "\" stroke=\"" << (solid ? s.color : "#999") << "\" stroke-width=\"" << (solid ? 2.5 : 1.2) << "\""
          << (solid ? "" : " stroke-dasharray=\"5,4\"") << "/>\n";
      if (s.style == Style::stubs && k == len / 2) {
        const Pt m = lerp(from, to, 0.5);
        out << "<circle cx=\"" << m.x << "\" cy=\"" << m.y << "\" r=\"7\" fill=\"none\" stroke=\"" << s.color
            << "\" stroke-width=\"1.5\"/>\n";
      }
    }
  }

 private:
  const Triangulation& t_;
  int cols_;
};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<')
      out += "&lt;";
    else if (c == '>')
      out += "&gt;";
    else if (c == '&')
      out += "&amp;";
    else
      out += c;
  }
  return out;
}

std::string write(const std::string& dir, const std::string& name, const Triangulation& t,
                  const std::vector<std::string>& caption, const std::vector<Stroke>& strokes) {
  const Net net(t);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << net.width() << "\" height=\"" << net.height()
      << "\" font-family=\"sans-serif\">\n<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
  for (std::size_t k = 0; k < caption.size(); ++k)
    out << "<text x=\"12\" y=\"" << 20 + 16 * k << "\" font-size=\"13\">" << escape(caption[k]) << "</text>\n";
  net.frame(out);
  for (const auto& s : strokes) net.stroke(out, s);
  net.marks(out);
  out << "</svg>\n";
  const std::string path = (std::filesystem::path(dir) / name).string();
  std::ofstream f(path);
  f << out.str();
  if (!f) throw Error(Error::Code::io, "cannot write " + path);
  return path;
}

const char* kV = "#c0392b";
const char* kW = "#2c5fa8";
const char* kWitness = "#27ae60";

std::vector<std::string> render_level(const LevelPosition& L, const std::string& dir) {
  const ArcSequence seq = leveling_to_arc_sequence(L);
  std::vector<std::string> files;
  for (int j = 1; j <= L.n; ++j) {
    const ArcWord& lo = seq.arcs[j - 1];
    const ArcWord& hi = seq.arcs[j];
    auto pts = strand_layout({lo, hi});
    std::string names;
    for (const auto& s : L.levels[j - 1].strands) names += (names.empty() ? "" : ", ") + strand_name(s);
    files.push_back(write(dir, "level_" + std::to_string(j) + ".svg", *L.base,
                          {"level " + std::to_string(j) + " of " + std::to_string(L.n) + " (genus " +
                               std::to_string(L.base->genus()) + ")",
                           "strands: " + names, "circles: tube discs around the middle of the tube cores"},
                          {{lo, pts[0], kV, j - 1 == 0 ? Style::full : Style::stubs},
                           {hi, pts[1], kW, j == L.n ? Style::full : Style::stubs}}));
  }
  return files;
}

}  // namespace

std::vector<std::string> render_certificate(const json& cert, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(Error::Code::io, "cannot create " + dir + ": " + ec.message());
  if (!cert.is_object() || !cert.contains("kind") || !cert["kind"].is_string())
    throw Error(Error::Code::schema, "certificate: missing field \"kind\"");
  const std::string kind = cert["kind"].get<std::string>();

  if (kind == "distance-certificate") {
    const DistanceCertificate c = distance_certificate_from_json(cert);
    std::vector<Stroke> strokes{{c.v, strand_layout({c.v})[0], kV, Style::full},
                                {c.w, strand_layout({c.w})[0], kW, Style::full}};
    if (c.witness) strokes.push_back({*c.witness, strand_layout({*c.witness})[0], kWitness, Style::full});
    return {write(dir, "distance.svg", c.v.triangulation(),
                  {"distance " + verdict_string(c.lower, c.upper) + ", i(v,w) = " + std::to_string(c.crossings),
                   "red: v, blue: w" + std::string(c.witness ? ", green: witness" : "")},
                  strokes)};
  }
  if (kind == "path-certificate") {
    auto base = triangulation_from_json(cert.at("triangulation"));
    const ArcSequence path = sequence_from_json(cert.at("path"), base);
    std::vector<std::string> files;
    for (int k = 0; k < path.length(); ++k) {
      auto pts = strand_layout({path.arcs[k], path.arcs[k + 1]});
      files.push_back(write(dir, "step_" + std::to_string(k + 1) + ".svg", *base,
                            {"path step " + std::to_string(k + 1) + " of " + std::to_string(path.length()),
                             "red: arc " + std::to_string(k) + ", blue: arc " + std::to_string(k + 1)},
                            {{path.arcs[k], pts[0], kV, Style::full}, {path.arcs[k + 1], pts[1], kW, Style::full}}));
    }
    return files;
  }
  if (kind == "level-position") {
    auto base = triangulation_from_json(cert.at("triangulation"));
    return render_level(level_position_from_json(cert, base), dir);
  }
  if (kind == "level-report") {
    auto files = render_certificate(cert.at("distance"), dir);
    if (!cert.at("level_position").is_null()) {
      auto more = render_certificate(cert["level_position"], dir);
      files.insert(files.end(), more.begin(), more.end());
    }
    return files;
  }
  throw Error(Error::Code::schema, "render: unsupported kind \"" + kind + "\"");
}

}  // namespace arcdist::render
