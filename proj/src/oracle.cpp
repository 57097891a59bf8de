#include "linf/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace linf::oracle {

namespace {

Scalar random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-60, 60);
  std::uniform_int_distribution<int> den(1, 9);
  Scalar x(num(rng), den(rng));
  x.canonicalize();
  return x;
}

bool on_cube_edge(const PointN& p, const Scalar& r) {
  int hits = 0;
  for (const auto& x : p.coords())
    if (abs(x) == r) ++hits;
  return hits >= 2;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

}  // namespace

void ProbeConfig::validate() const {
  if (grid_density < 2) throw DomainError("grid_density must be at least 2");
  const bool has_pos = std::any_of(perturbations.begin(), perturbations.end(),
                                   [](const Scalar& x) { return x > 0; });
  const bool has_neg = std::any_of(perturbations.begin(), perturbations.end(),
                                   [](const Scalar& x) { return x < 0; });
  if (!has_pos || !has_neg)
    throw DomainError("perturbation set needs both positive and negative values");
}

nlohmann::json to_json(const ProbeConfig& cfg) {
  nlohmann::json shifts = nlohmann::json::array();
  for (const auto& x : cfg.perturbations) shifts.push_back(to_string(x));
  return {{"grid_density", cfg.grid_density}, {"perturbations", shifts}, {"seed", cfg.seed}};
}

ProbeConfig probe_config_from_json(const nlohmann::json& j) {
  ProbeConfig cfg;
  try {
    cfg.grid_density = j.at("grid_density").get<int>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.perturbations.clear();
    for (const auto& x : j.at("perturbations"))
      cfg.perturbations.push_back(x.is_string() ? parse_scalar(x.get<std::string>())
                                                : parse_scalar(x.dump()));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad probe config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

Scalar refine_length(const Polyline& path, int parts) {
  if (parts < 1) throw DomainError("parts must be positive");
  const auto v = path.vertices();
  Scalar total = 0;
  for (std::size_t s = 1; s < v.size(); ++s) {
    const PointN step = Scalar(1, parts) * (v[s] - v[s - 1]);
    PointN prev = v[s - 1];
    for (int k = 1; k <= parts; ++k) {
      PointN next = prev + step;
      total += chebyshev_distance(prev, next);
      prev = std::move(next);
    }
  }
  return total;
}

std::vector<PointN> brute_section(const Plane& plane, const Scalar& radius, const ProbeConfig& cfg) {
  cfg.validate();
  if (!plane.passes_through_origin()) throw DomainError("plane must pass through the origin");
  if (radius <= 0) throw DomainError("radius must be positive");
  // Lattice coordinate i maps to r * (2i - D) / D. Scaling the residual by
  // D / r leaves an integer test (canonical coefficients are integers).
  const int density = cfg.grid_density;
  const auto& n = plane.normal();
  std::vector<PointN> cloud;
  for (std::size_t axis = 0; axis < 3; ++axis) {
    const std::size_t u = axis == 0 ? 1 : 0;
    const std::size_t v = axis == 2 ? 1 : 2;
    const mpz_class nk = n[axis].get_num(), nu = n[u].get_num(), nv = n[v].get_num();
    const mpz_class budget = ::abs(nu) + ::abs(nv);
    for (int side : {1, -1}) {
      for (int i = 0; i <= density; ++i) {
        for (int j = 0; j <= density; ++j) {
          const mpz_class residual = nk * side * density + nu * (2 * i - density) +
                                     nv * (2 * j - density);
          if (::abs(residual) > budget) continue;
          std::vector<Scalar> c(3);
          c[axis] = side * radius;
          c[u] = radius * Scalar(2 * i - density, density);
          c[v] = radius * Scalar(2 * j - density, density);
          for (auto& x : c) x.canonicalize();
          cloud.emplace_back(std::move(c));
        }
      }
    }
  }
  return cloud;
}

std::vector<PointN> cloud_extremes(const std::vector<PointN>& cloud, const Scalar& radius,
                                   const Scalar& link) {
  std::vector<PointN> edge;
  for (const auto& p : cloud)
    if (on_cube_edge(p, radius) && std::find(edge.begin(), edge.end(), p) == edge.end())
      edge.push_back(p);

  std::vector<std::size_t> parent(edge.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < edge.size(); ++i)
    for (std::size_t j = i + 1; j < edge.size(); ++j)
      if (chebyshev_distance(edge[i], edge[j]) <= link)
        parent[find_root(parent, i)] = find_root(parent, j);

  std::vector<PointN> reps;
  auto add = [&](const PointN& p) {
    for (const auto& r : reps)
      if (chebyshev_distance(r, p) <= link) return;
    reps.push_back(p);
  };
  for (std::size_t root = 0; root < edge.size(); ++root) {
    if (find_root(parent, root) != root) continue;
    const PointN* lo = nullptr;
    const PointN* hi = nullptr;
    for (std::size_t i = 0; i < edge.size(); ++i) {
      if (find_root(parent, i) != root) continue;
      if (!lo || edge[i] < *lo) lo = &edge[i];
      if (!hi || *hi < edge[i]) hi = &edge[i];
    }
    add(*lo);
    add(*hi);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

bool probe_unique_geodesic(const PointN& p, const PointN& q, const ProbeConfig& cfg) {
  require_same_dimension(p, q);
  if (p == q) throw DomainError("probe needs distinct points");
  const Scalar target = chebyshev_distance(p, q);
  const PointN mid = Scalar(1, 2) * (p + q);
  for (std::size_t j = 0; j < p.dimension(); ++j) {
    for (const auto& eta : cfg.perturbations) {
      std::vector<Scalar> c(mid.coords().begin(), mid.coords().end());
      c[j] += eta;
      const PointN m(std::move(c));
      if (m == p || m == q || m == mid) continue;
      if (chebyshev_distance(p, m) + chebyshev_distance(m, q) == target) return false;
    }
  }
  return true;
}

std::vector<PointN> sample_plane_points(const Plane& plane, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t solve = 2;
  while (plane.normal()[solve] == 0) --solve;
  std::vector<PointN> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    std::vector<Scalar> c(3);
    Scalar rest = plane.d();
    for (std::size_t k = 0; k < 3; ++k) {
      if (k == solve) continue;
      c[k] = random_rational(rng);
      rest -= plane.normal()[k] * c[k];
    }
    c[solve] = rest / plane.normal()[solve];
    out.emplace_back(std::move(c));
  }
  return out;
}

bool sample_isometry_check(const FlatChart& chart, const Plane& plane, int count,
                           std::uint64_t seed) {
  if (!(chart.plane() == plane))
    throw DomainError("chart belongs to plane " + to_string(chart.plane()) + ", not " +
                      to_string(plane));
  const auto pts = sample_plane_points(plane, 2 * count, seed);
  for (int i = 0; i < count; ++i) {
    const PointN& x = pts[2 * i];
    const PointN& y = pts[2 * i + 1];
    if (chebyshev_distance(x, y) != chebyshev_distance(chart.project(x), chart.project(y)))
      return false;
  }
  return true;
}

bool sample_isometry_check(const SignedPermutation& g, const Plane& plane, int count,
                           std::uint64_t seed) {
  const auto pts = sample_plane_points(plane, 2 * count, seed);
  for (int i = 0; i < count; ++i) {
    const PointN& x = pts[2 * i];
    const PointN& y = pts[2 * i + 1];
    if (chebyshev_distance(x, y) != chebyshev_distance(g.apply(x), g.apply(y))) return false;
  }
  return true;
}

}  // namespace linf::oracle
