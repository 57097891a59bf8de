#include "linf/commands.hpp"

#include "linf/isometry.hpp"
#include "linf/json_io.hpp"
#include "linf/oracle.hpp"
#include "linf/plane.hpp"
#include "linf/sectors.hpp"
#include "linf/svg.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace linf::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const char* kExtensionNote =
    "dimension >= 4 uses the all-offsets-equal rule as a derived extension";
const char* kFlatPlaneNote =
    "flat plane: count transported from R^2_inf through the chart isometry (derived)";

struct Ok {
  Json payload;
  Json notes = Json::array();
};

template <typename Fn>
CommandResult run(const char* name, Fn&& body) {
  CommandResult out;
  auto fail = [&](int code, const std::string& what) {
    out.exit_code = code;
    out.message = std::string(name) + ": " + what;
    out.document = {{"status", "error"}, {"command", name}, {"error", what}};
  };
  try {
    Ok ok = body();
    out.document = {{"status", "ok"},
                    {"command", name},
                    {"payload", std::move(ok.payload)},
                    {"notes", std::move(ok.notes)}};
  } catch (const IoError& e) {
    fail(kIoError, e.what());
  } catch (const std::invalid_argument& e) {  // DomainError, DimensionError
    fail(kInputError, e.what());
  } catch (const nlohmann::json::exception& e) {
    fail(kInputError, e.what());
  }
  return out;
}

void require_count(const Tokens& tokens, std::size_t count, const char* what) {
  if (tokens.size() != count)
    throw DomainError(std::string(what) + " expects " + std::to_string(count) + " numbers, got " +
                      std::to_string(tokens.size()));
}

Plane plane_from_tokens(const Tokens& t, std::size_t offset, bool with_d) {
  return Plane(parse_scalar(t[offset]), parse_scalar(t[offset + 1]), parse_scalar(t[offset + 2]),
               with_d ? parse_scalar(t[offset + 3]) : Scalar(0));
}

PointN point_from_tokens(const Tokens& t) {
  std::vector<Scalar> coords;
  for (const auto& s : t) coords.push_back(parse_scalar(s));
  return PointN(std::move(coords));
}

Json edge_lengths_json(const SectionPolygon& section) {
  Json out = Json::array();
  for (const auto& len : section_edge_lengths(section)) out.push_back(json::to_json(len));
  return out;
}

}  // namespace

CommandResult cmd_classify(const Tokens& coeffs, int samples, std::uint64_t seed) {
  return run("classify", [&] {
    require_count(coeffs, 4, "classify");
    const Plane plane = plane_from_tokens(coeffs, 0, true);
    const Plane centered = translate_to_origin(plane).plane;
    const auto section = cross_section(centered, Scalar(1));
    Ok ok;
    ok.payload = {{"plane", json::to_json(plane)},
                  {"triangle_test", triangle_test(plane)},
                  {"canonical_class", json::to_json(canonical_class(plane))},
                  {"nu", nu_in_plane(plane)},
                  {"shape", to_string(section.shape)}};
    if (!triangle_test(plane)) {
      const FlatChart chart = flat_isometry_to_R2(centered);
      ok.payload["chart"] = {{"dropped_axis", dominant_axis(centered) + 1}};
      if (samples > 0) {
        ok.payload["chart_check"] = {
            {"pairs", samples},
            {"seed", seed},
            {"distance_preserved", oracle::sample_isometry_check(chart, centered, samples, seed)}};
      }
    }
    return ok;
  });
}

CommandResult cmd_section(const Tokens& coeffs, const std::string& radius,
                          const std::optional<std::string>& svg_path) {
  return run("section", [&] {
    require_count(coeffs, 3, "section");
    const Plane plane = plane_from_tokens(coeffs, 0, false);
    const auto section = cross_section(plane, parse_scalar(radius));
    Ok ok;
    ok.payload = json::to_json(section);
    ok.payload["plane"] = json::to_json(plane);
    ok.payload["edge_lengths"] = edge_lengths_json(section);
    if (svg_path) {
      std::ofstream file(*svg_path, std::ios::binary | std::ios::trunc);
      if (!file) throw IoError("cannot open '" + *svg_path + "' for writing");
      file << render_section_svg(plane, section);
      file.close();
      if (!file) throw IoError("failed writing '" + *svg_path + "'");
      ok.payload["svg"] = *svg_path;
    }
    return ok;
  });
}

CommandResult cmd_orbit(const Tokens& coeffs) {
  return run("orbit", [&] {
    require_count(coeffs, 3, "orbit");
    const Plane plane = plane_from_tokens(coeffs, 0, false);
    const PlaneOrbit result = orbit(plane);
    Json members = Json::array();
    for (const auto& m : result.members) members.push_back(json::to_json(m));
    Json stabilizer = Json::array();
    for (const auto& g : result.stabilizer) stabilizer.push_back(json::to_json(g));
    Ok ok;
    ok.payload = {{"plane", json::to_json(plane)},
                  {"size", result.members.size()},
                  {"members", std::move(members)},
                  {"stabilizer", std::move(stabilizer)}};
    return ok;
  });
}

CommandResult cmd_isometric(const Tokens& coeffs) {
  return run("isometric", [&] {
    require_count(coeffs, 8, "isometric");
    const Plane first = plane_from_tokens(coeffs, 0, true);
    const Plane second = plane_from_tokens(coeffs, 4, true);
    Ok ok;
    ok.payload = {{"isometric", isometric(first, second)},
                  {"class1", json::to_json(canonical_class(first))},
                  {"class2", json::to_json(canonical_class(second))}};
    return ok;
  });
}

CommandResult cmd_geodesic_check(const std::string& path_file) {
  return run("geodesic-check", [&] {
    std::ifstream file(path_file);
    if (!file) throw IoError("cannot read '" + path_file + "'");
    std::stringstream buffer;
    buffer << file.rdbuf();
    Json doc;
    try {
      doc = Json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
      throw DomainError(std::string("invalid JSON: ") + e.what());
    }
    const Polyline path = json::polyline_from_json(doc);
    const GeodesicVerdict verdict = check_geodesic(path);
    Ok ok;
    ok.payload = {{"is_geodesic", verdict.is_geodesic},
                  {"length", json::to_json(polyline_length(path))},
                  {"endpoint_distance", json::to_json(chebyshev_distance(path.front(), path.back()))}};
    if (verdict.witness) ok.payload["witnessing_sector"] = json::to_json(*verdict.witness);
    if (verdict.violation) {
      const std::size_t j = *verdict.violation;
      ok.payload["violation"] = {{"index", j},
                                 {"from", json::to_json(path.vertices()[j])},
                                 {"to", json::to_json(path.vertices()[j + 1])}};
    }
    return ok;
  });
}

CommandResult cmd_tau(const Tokens& p, const Tokens& q, const std::optional<Tokens>& plane,
                      bool probe) {
  return run("tau", [&] {
    const PointN from = point_from_tokens(p);
    const PointN to = point_from_tokens(q);
    require_same_dimension(from, to);
    Ok ok;
    if (plane) {
      require_count(*plane, 4, "--plane");
      const Plane surface = plane_from_tokens(*plane, 0, true);
      ok.payload = {{"plane", json::to_json(surface)},
                    {"count", json::to_json(tau_in_plane(surface, from, to))}};
      if (!triangle_test(surface)) ok.notes.push_back(kFlatPlaneNote);
      if (probe) ok.notes.push_back("--probe ignored: the probe perturbs in the ambient space");
    } else {
      ok.payload = {{"dimension", from.dimension()}, {"count", json::to_json(tau(from, to))}};
      if (is_derived_extension(from.dimension())) ok.notes.push_back(kExtensionNote);
      if (probe && from != to)
        ok.payload["probe_unique"] = oracle::probe_unique_geodesic(from, to, oracle::ProbeConfig{});
    }
    return ok;
  });
}

CommandResult cmd_nu(const std::optional<std::string>& ambient, const std::optional<Tokens>& plane) {
  return run("nu", [&] {
    if (ambient.has_value() == plane.has_value())
      throw DomainError("give exactly one of --ambient <n> or a plane a b c d");
    Ok ok;
    if (ambient) {
      const Scalar n = parse_scalar(*ambient);
      if (n.get_den() != 1 || n < 2 || n > 63) throw DomainError("dimension must be in 2..63");
      const auto dim = static_cast<std::size_t>(n.get_num().get_ui());
      ok.payload = {{"dimension", dim}, {"nu", nu_ambient(dim)}};
      if (is_derived_extension(dim)) ok.notes.push_back(kExtensionNote);
    } else {
      require_count(*plane, 4, "nu");
      const Plane surface = plane_from_tokens(*plane, 0, true);
      ok.payload = {{"plane", json::to_json(surface)}, {"nu", nu_in_plane(surface)}};
      if (!triangle_test(surface)) ok.notes.push_back(kFlatPlaneNote);
    }
    return ok;
  });
}

CommandResult cmd_witness(const Tokens& p, const Tokens& q) {
  return run("witness", [&] {
    const auto [straight, bent] = witness_two_geodesics(point_from_tokens(p), point_from_tokens(q));
    Ok ok;
    ok.payload = {{"geodesics", Json::array({json::to_json(straight), json::to_json(bent)})},
                  {"length", json::to_json(polyline_length(straight))}};
    return ok;
  });
}

}  // namespace linf::cli
