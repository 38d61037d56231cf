#include "svg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace sdraw::cli {

namespace {

constexpr double kSize = 800;
constexpr double kMargin = 40;

struct Frame {
  double x0 = std::numeric_limits<double>::max(), y0 = x0;
  double x1 = std::numeric_limits<double>::lowest(), y1 = x1;

  void add(double x, double y) {
    x0 = std::min(x0, x);
    y0 = std::min(y0, y);
    x1 = std::max(x1, x);
    y1 = std::max(y1, y);
  }
  [[nodiscard]] double scale() const {
    const double span = std::max({x1 - x0, y1 - y0, 1e-12});
    return (kSize - 2 * kMargin) / span;
  }
  [[nodiscard]] double sx(double x) const { return kMargin + (x - x0) * scale(); }
  // SVG's y axis points down.
  [[nodiscard]] double sy(double y) const { return kSize - kMargin - (y - y0) * scale(); }
};

void header(std::ostringstream& s) {
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
    << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void vertex(std::ostringstream& s, double x, double y, const std::string& name) {
  s << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\" fill=\"black\"/>\n"
    << "<text x=\"" << x + 6 << "\" y=\"" << y - 6 << "\" font-size=\"12\">" << name
    << "</text>\n";
}

}  // namespace

std::string drawing_svg(const GeometricDrawing& d) {
  const Graph& g = d.graph();
  Frame f;
  for (const Point& p : d.points()) f.add(to_double(p.x), to_double(p.y));
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    for (const Point& p : d.bends(e)) f.add(to_double(p.x), to_double(p.y));
  std::ostringstream s;
  header(s);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    s << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
    for (const Point& p : d.polyline(e)) s << f.sx(to_double(p.x)) << ',' << f.sy(to_double(p.y)) << ' ';
    s << "\"/>\n";
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    vertex(s, f.sx(to_double(d.point(v).x)), f.sy(to_double(d.point(v).y)), g.name(v));
  s << "</svg>\n";
  return s.str();
}

std::string halfcircle_svg(const HalfCircleDrawing& d) {
  const std::size_t n = d.size();
  const double step = n > 1 ? (kSize - 2 * kMargin) / static_cast<double>(n - 1) : 0;
  const double axis = kSize / 2;
  std::ostringstream s;
  header(s);
  s << "<line x1=\"0\" y1=\"" << axis << "\" x2=\"" << kSize << "\" y2=\"" << axis
    << "\" stroke=\"lightgray\"/>\n";
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const double xa = kMargin + step * static_cast<double>(a);
      const double xb = kMargin + step * static_cast<double>(b);
      const double r = (xb - xa) / 2;
      const bool upper = d.side(a, b) == Side::kUpper;
      s << "<path fill=\"none\" stroke=\"" << (upper ? "steelblue" : "indianred")
        << "\" d=\"M " << xa << ' ' << axis << " A " << r << ' ' << r << " 0 0 "
        << (upper ? 1 : 0) << ' ' << xb << ' ' << axis << "\"/>\n";
    }
  for (std::size_t a = 0; a < n; ++a) vertex(s, kMargin + step * static_cast<double>(a), axis, d.order[a]);
  s << "</svg>\n";
  return s.str();
}

}  // namespace sdraw::cli
