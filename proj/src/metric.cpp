#include "linf/metric.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace linf {

Scalar parse_scalar(std::string_view text) {
  const std::string token(text);
  const auto slash = token.find('/');
  auto is_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                     [](unsigned char c) { return std::isdigit(c) != 0; });
  };
  if (slash == std::string::npos) {
    if (!is_integer(token)) throw DomainError("not a rational number: '" + token + "'");
  } else {
    std::string_view den = std::string_view(token).substr(slash + 1);
    if (!is_integer(std::string_view(token).substr(0, slash)) || !is_integer(den) ||
        den.front() == '-' || den.front() == '+')
      throw DomainError("not a rational number: '" + token + "'");
  }
  // GMP rejects a leading '+'.
  const std::string cleaned = token.front() == '+' ? token.substr(1) : token;
  Scalar value;
  if (value.set_str(cleaned, 10) != 0) throw DomainError("not a rational number: '" + token + "'");
  if (value.get_den() == 0) throw DomainError("zero denominator: '" + token + "'");
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

Scalar abs(const Scalar& value) { return ::abs(value); }

PointN::PointN(std::vector<Scalar> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2)
    throw DimensionError("points need dimension >= 2, got " + std::to_string(coords_.size()));
}

PointN::PointN(std::initializer_list<Scalar> coords) : PointN(std::vector<Scalar>(coords)) {}

PointN PointN::origin(std::size_t dimension) {
  return PointN(std::vector<Scalar>(dimension, Scalar(0)));
}

bool operator<(const PointN& lhs, const PointN& rhs) {
  return std::lexicographical_compare(lhs.coords_.begin(), lhs.coords_.end(),
                                      rhs.coords_.begin(), rhs.coords_.end());
}

void require_same_dimension(const PointN& p, const PointN& q) {
  if (p.dimension() != q.dimension())
    throw DimensionError("dimension mismatch: " + std::to_string(p.dimension()) + " vs " +
                         std::to_string(q.dimension()));
}

PointN operator+(const PointN& lhs, const PointN& rhs) {
  require_same_dimension(lhs, rhs);
  std::vector<Scalar> out(lhs.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = lhs[i] + rhs[i];
  return PointN(std::move(out));
}

PointN operator-(const PointN& lhs, const PointN& rhs) {
  require_same_dimension(lhs, rhs);
  std::vector<Scalar> out(lhs.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = lhs[i] - rhs[i];
  return PointN(std::move(out));
}

PointN operator*(const Scalar& factor, const PointN& point) {
  std::vector<Scalar> out(point.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = factor * point[i];
  return PointN(std::move(out));
}

std::string to_string(const PointN& point) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < point.dimension(); ++i) {
    if (i != 0) os << ',';
    os << to_string(point[i]);
  }
  os << ')';
  return os.str();
}

Scalar chebyshev_distance(const PointN& p, const PointN& q) {
  require_same_dimension(p, q);
  Scalar best = 0;
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    Scalar diff = abs(p[i] - q[i]);
    if (diff > best) best = std::move(diff);
  }
  return best;
}

Polyline::Polyline(std::vector<PointN> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw DomainError("a polyline needs at least two vertices");
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    require_same_dimension(vertices_[i - 1], vertices_[i]);
    if (vertices_[i - 1] == vertices_[i])
      throw DomainError("repeated consecutive vertex " + to_string(vertices_[i]) +
                        " at index " + std::to_string(i));
  }
}

Scalar polyline_length(const Polyline& path) {
  Scalar total = 0;
  const auto v = path.vertices();
  for (std::size_t i = 1; i < v.size(); ++i) total += chebyshev_distance(v[i - 1], v[i]);
  return total;
}

Polyline segment(const PointN& p, const PointN& q) {
  require_same_dimension(p, q);
  if (p == q) throw DomainError("segment endpoints coincide at " + to_string(p));
  return Polyline({p, q});
}

}  // namespace linf
