#include "pluckerlab/svg.hpp"

#include <sstream>

namespace pluckerlab {

namespace {

constexpr double kLeftX = 50.0;
constexpr double kRightX = 170.0;
constexpr double kStep = 36.0;
constexpr double kMargin = 30.0;

struct Point {
  double x, y;
};

// Height h in [1, s]: 1 is the bottom row. Left column holds v_1..v_s
// bottom-up, right column v_{s+1}..v_{2s} top-down.
Point vertex_pos(int v, int s) {
  const double height_of = (v <= s) ? v : (2 * s + 1 - v);
  const double y = kMargin + (s - height_of) * kStep;
  return {v <= s ? kLeftX : kRightX, y};
}

void emit_edge(std::ostringstream& out, int a, int b, int s, bool mandatory) {
  const Point pa = vertex_pos(a, s);
  const Point pb = vertex_pos(b, s);
  const char* stroke = mandatory ? "#b03030" : "#303030";
  if ((a <= s) == (b <= s)) {
    // Same-column edge: bow toward the middle of the strip.
    const double midy = (pa.y + pb.y) / 2.0;
    const double bow = (a <= s) ? pa.x + 40.0 : pa.x - 40.0;
    out << "  <path d=\"M " << pa.x << ' ' << pa.y << " Q " << bow << ' ' << midy << ' ' << pb.x
        << ' ' << pb.y << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"2\"/>\n";
  } else {
    out << "  <line x1=\"" << pa.x << "\" y1=\"" << pa.y << "\" x2=\"" << pb.x << "\" y2=\""
        << pb.y << "\" stroke=\"" << stroke << "\" stroke-width=\"2\"/>\n";
  }
}

void emit_vertex(std::ostringstream& out, int v, int s, const std::optional<ColoredPrematching>& pm) {
  const Point p = vertex_pos(v, s);
  VertexColor c = VertexColor::white;
  bool plain = !pm;
  if (pm) c = pm->color[v - 1];
  if (!plain && c == VertexColor::edge_endpoint) {
    out << "  <rect x=\"" << p.x - 5 << "\" y=\"" << p.y - 5
        << "\" width=\"10\" height=\"10\" fill=\"#ffffff\" stroke=\"#000000\" "
           "stroke-width=\"1.5\"/>\n";
  } else {
    const char* fill = plain ? "#000000" : (c == VertexColor::black ? "#000000" : "#ffffff");
    out << "  <circle cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"" << (plain ? 3.5 : 5.5)
        << "\" fill=\"" << fill << "\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
  }
  const double lx = (v <= s) ? p.x - 28 : p.x + 12;
  out << "  <text x=\"" << lx << "\" y=\"" << p.y + 4
      << "\" font-family=\"sans-serif\" font-size=\"12\">v" << v << "</text>\n";
}

std::string svg_frame(int s, const std::string& body) {
  const double height = 2 * kMargin + (s - 1) * kStep;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"220\" height=\"" << height
      << "\" viewBox=\"0 0 220 " << height << "\">\n"
      << body << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render_diagram_svg(const KauffmanDiagram& k,
                               const std::optional<ColoredPrematching>& pm) {
  if (pm && pm->s != k.s())
    throw std::invalid_argument("render_diagram_svg: prematching size mismatch");
  const int s = k.s();
  std::ostringstream body;
  for (const auto& [a, b] : k.edges()) {
    bool mandatory = false;
    if (pm)
      for (const auto& [ma, mb] : pm->mandatory_edges)
        if (ma == a && mb == b) mandatory = true;
    emit_edge(body, a, b, s, mandatory);
  }
  for (int v = 1; v <= 2 * s; ++v) emit_vertex(body, v, s, pm);
  return svg_frame(s, body.str());
}

std::string render_prematching_svg(const ColoredPrematching& pm) {
  std::ostringstream body;
  for (const auto& [a, b] : pm.mandatory_edges) emit_edge(body, a, b, pm.s, true);
  for (int v = 1; v <= 2 * pm.s; ++v) emit_vertex(body, v, pm.s, pm);
  return svg_frame(pm.s, body.str());
}

}  // namespace pluckerlab
