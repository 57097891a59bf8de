#include "linf/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace linf {

namespace {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

Vec3 normalized(Vec3 v) {
  const double len = std::sqrt(dot(v, v));
  for (auto& x : v) x /= len;
  return v;
}

Vec3 to_vec(const PointN& p) { return {p[0].get_d(), p[1].get_d(), p[2].get_d()}; }

std::string fmt(double x) {
  if (std::fabs(x) < 5e-7) x = 0.0;  // no "-0.000000"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_section_svg(const Plane& plane, const SectionPolygon& polygon) {
  const Vec3 n = normalized({plane.a().get_d(), plane.b().get_d(), plane.c().get_d()});
  // First coordinate axis with a nonzero in-plane shadow, then the
  // right-handed completion so counter-clockwise about n stays
  // counter-clockwise on screen.
  Vec3 e1{};
  for (int axis = 0; axis < 3; ++axis) {
    Vec3 t{0.0, 0.0, 0.0};
    t[axis] = 1.0;
    const double k = dot(t, n);
    for (int i = 0; i < 3; ++i) t[i] -= k * n[i];
    if (dot(t, t) > 1e-9) {
      e1 = normalized(t);
      break;
    }
  }
  const Vec3 e2 = cross(n, e1);

  std::vector<std::array<double, 2>> pts;
  double extent = 0.0;
  for (const auto& v : polygon.vertices) {
    const Vec3 p = to_vec(v);
    pts.push_back({dot(p, e1), dot(p, e2)});
    extent = std::max({extent, std::fabs(pts.back()[0]), std::fabs(pts.back()[1])});
  }
  const double size = 480.0;
  const double half = size / 2.0;
  const double scale = (half - 90.0) / extent;
  auto sx = [&](double x) { return half + scale * x; };
  auto sy = [&](double y) { return half - scale * y; };

  const auto lengths = section_edge_lengths(polygon);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(size) << "\" height=\""
     << fmt(size) << "\" viewBox=\"0 0 " << fmt(size) << ' ' << fmt(size) << "\">\n";
  os << "  <title>" << xml_escape("section of plane " + to_string(plane) + " at radius " +
                                  to_string(polygon.radius))
     << "</title>\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "  <polygon points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i)
    os << (i ? " " : "") << fmt(sx(pts[i][0])) << ',' << fmt(sy(pts[i][1]));
  os << "\" fill=\"lightgray\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  os << "  <circle cx=\"" << fmt(sx(0)) << "\" cy=\"" << fmt(sy(0))
     << "\" r=\"3\" fill=\"black\"/>\n";
  os << "  <text x=\"" << fmt(sx(0)) << "\" y=\"" << fmt(sy(0) + 16)
     << "\" font-size=\"13\" text-anchor=\"middle\">O</text>\n";

  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double x = pts[i][0], y = pts[i][1];
    const double r = std::hypot(x, y);
    os << "  <circle cx=\"" << fmt(sx(x)) << "\" cy=\"" << fmt(sy(y))
       << "\" r=\"3.5\" fill=\"black\"/>\n";
    os << "  <text x=\"" << fmt(sx(x) + 22.0 * x / r) << "\" y=\"" << fmt(sy(y) - 22.0 * y / r)
       << "\" font-size=\"12\" text-anchor=\"middle\">" << to_string(polygon.vertices[i])
       << "</text>\n";
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    const auto& q = pts[(i + 1) % pts.size()];
    const double mx = (p[0] + q[0]) / 2.0, my = (p[1] + q[1]) / 2.0;
    const double r = std::hypot(mx, my);
    os << "  <text x=\"" << fmt(sx(mx) - 14.0 * mx / r) << "\" y=\"" << fmt(sy(my) + 14.0 * my / r)
       << "\" font-size=\"12\" fill=\"darkred\" text-anchor=\"middle\">" << to_string(lengths[i])
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace linf
