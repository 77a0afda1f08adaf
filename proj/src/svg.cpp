#include "nctoric/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "nctoric/error.hpp"
#include "nctoric/json_io.hpp"

namespace nctoric {

namespace {

constexpr double kHalfExtent = 180.0;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x == 0.0 ? 0.0 : x);
  return buf;
}

struct Canvas {
  double scale = 1.0;

  explicit Canvas(const std::vector<Vector>& points) {
    double extent = 0.0;
    for (const auto& p : points)
      for (const auto& x : p) extent = std::max(extent, std::fabs(x.to_double()));
    if (extent > 0.0) scale = kHalfExtent / extent;
  }

  std::string point(const Vector& p) const {
    return num(p[0].to_double() * scale) + "," + num(-p[1].to_double() * scale);
  }
};

std::string header(const Json& exact) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"-200 -200 400 400\">\n"
         "<!-- exact: " + exact.dump() + " -->\n"
         "<line x1=\"-200\" y1=\"0\" x2=\"200\" y2=\"0\" stroke=\"#ccc\"/>\n"
         "<line x1=\"0\" y1=\"-200\" x2=\"0\" y2=\"200\" stroke=\"#ccc\"/>\n";
}

void require_2d(std::size_t dim) {
  if (dim != 2) fail("WrongDimension", "SVG output is available for 2-dimensional objects only");
}

}  // namespace

std::string polytope_svg(const SimplePolytope& p) {
  require_2d(p.dim());
  std::vector<Vector> vs = p.vertices();
  Vector center{Scalar(0), Scalar(0)};
  for (const auto& v : vs)
    for (std::size_t k = 0; k < 2; ++k) center[k] = center[k] + v[k] / Scalar(static_cast<long>(vs.size()));
  auto rel = [&](const Vector& v) { return Vector{v[0] - center[0], v[1] - center[1]}; };
  std::sort(vs.begin(), vs.end(), [&](const Vector& a, const Vector& b) {
    Vector ra = rel(a), rb = rel(b);
    if (angle_less(ra, rb) != angle_less(rb, ra)) return angle_less(ra, rb);
    return a < b;
  });
  Canvas canvas(vs);
  std::string out = header(polytope_to_json(p));
  out += "<polygon points=\"";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? " " : "") + canvas.point(vs[i]);
  out += "\" fill=\"#9ecae1\" stroke=\"#08519c\" stroke-width=\"2\"/>\n";
  for (const auto& v : vs) out += "<circle cx=\"" + num(v[0].to_double() * canvas.scale) + "\" cy=\"" +
                                  num(-v[1].to_double() * canvas.scale) + "\" r=\"3\" fill=\"#08519c\"/>\n";
  return out + "</svg>\n";
}

std::string fan_svg(const Fan& f) {
  require_2d(f.dim);
  auto unit = [](const Vector& r) {
    double x = r[0].to_double(), y = r[1].to_double(), n = std::hypot(x, y);
    return n == 0.0 ? std::pair{0.0, 0.0} : std::pair{x / n * kHalfExtent, -y / n * kHalfExtent};
  };
  std::string out = header(fan_to_json(f));
  for (const auto& c : f.cones) {
    if (c.rays.size() != 2) continue;
    auto [x1, y1] = unit(c.rays[0]);
    auto [x2, y2] = unit(c.rays[1]);
    out += "<polygon points=\"0,0 " + num(x1) + "," + num(y1) + " " + num(x2) + "," + num(y2) +
           "\" fill=\"#c7e9c0\" fill-opacity=\"0.6\" stroke=\"none\"/>\n";
  }
  for (const auto& c : f.cones) {
    if (c.rays.size() != 1) continue;
    auto [x, y] = unit(c.rays[0]);
    out += "<line x1=\"0\" y1=\"0\" x2=\"" + num(x) + "\" y2=\"" + num(y) + "\" stroke=\"#006d2c\" stroke-width=\"2\"/>\n";
  }
  out += "<circle cx=\"0\" cy=\"0\" r=\"3\" fill=\"#006d2c\"/>\n";
  return out + "</svg>\n";
}

}  // namespace nctoric
