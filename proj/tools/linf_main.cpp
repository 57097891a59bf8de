// linf: classification of planes in (R^3, d_inf) and geodesic checks in
// (R^n, d_inf). JSON goes to stdout, diagnostics to stderr.

#include "linf/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using linf::cli::Tokens;

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  // Points are written "p1 p2 ... -- q1 q2 ...". CLI11 swallows the "--",
  // so the second point is split off before parsing; it ends at the next
  // long option.
  std::vector<std::string> args(argv + 1, argv + argc);
  Tokens second_point;
  bool has_separator = false;
  if (auto sep = std::find(args.begin(), args.end(), "--"); sep != args.end()) {
    auto end = std::find_if(sep + 1, args.end(),
                            [](const std::string& a) { return a.rfind("--", 0) == 0; });
    second_point.assign(sep + 1, end);
    args.erase(sep, end);
    has_separator = true;
  }
  std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector

  CLI::App app{"Geodesics in (R^n, d_inf) and isometry classes of planes in (R^3, d_inf)"};
  app.require_subcommand(1);
  app.fallthrough();
  int json_indent = 2;
  app.add_option("--json-indent", json_indent, "Indentation of JSON output (-1: compact)");

  Tokens coeffs;
  Tokens first_point;
  std::string radius = "1";
  std::optional<std::string> svg_path;
  std::optional<std::string> ambient;
  std::string plane_text;
  std::string path_file;
  int samples = 0;
  std::uint64_t seed = 42;
  bool probe = false;

  auto* classify = app.add_subcommand("classify", "Triangle test, isometry class, nu and section shape");
  classify->add_option("coeffs", coeffs, "a b c d")->required()->expected(4);
  classify->add_option("--samples", samples, "Check a flat plane's chart on this many point pairs");
  classify->add_option("--seed", seed, "Seed for --samples");

  auto* section = app.add_subcommand("section", "Cross-section of the cube [-r, r]^3 by ax+by+cz=0");
  section->add_option("coeffs", coeffs, "a b c")->required()->expected(3);
  section->add_option("--radius", radius, "Cube half-width (rational)");
  section->add_option("--svg", svg_path, "Write an SVG drawing to this file");

  auto* orbit = app.add_subcommand("orbit", "Orbit and stabilizer of ax+by+cz=0 under the cube group");
  orbit->add_option("coeffs", coeffs, "a b c")->required()->expected(3);

  auto* iso = app.add_subcommand("isometric", "Decide whether two planes are isometric");
  iso->add_option("coeffs", coeffs, "a b c d a' b' c' d'")->required()->expected(8);

  auto* tau = app.add_subcommand("tau", "Number of geodesics between p and q (p... -- q...)");
  tau->add_option("p", first_point, "Coordinates of p")->required();
  tau->add_option("--plane", plane_text, "Count inside the plane a,b,c,d");
  tau->add_flag("--probe", probe, "Add the brute-force perturbation verdict");

  auto* nu = app.add_subcommand("nu", "Unique-geodesic points on a sphere");
  nu->add_option("--ambient", ambient, "Dimension n of R^n_inf");
  nu->add_option("coeffs", coeffs, "a b c d");

  auto* witness = app.add_subcommand("witness", "Two distinct geodesics from p to q (p... -- q...)");
  witness->add_option("p", first_point, "Coordinates of p")->required();

  auto* check = app.add_subcommand("geodesic-check", "Sector criterion on a polyline JSON file");
  check->add_option("path_file", path_file, "File holding {\"vertices\": [...]}")->required();

  try {
    app.parse(args);
    if (has_separator && !tau->parsed() && !witness->parsed())
      throw CLI::ExtrasError({"--"});
    if ((tau->parsed() || witness->parsed()) && !has_separator)
      throw CLI::RequiredError("second point after '--'");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : linf::cli::kInputError;
  }

  linf::cli::CommandResult result;
  if (classify->parsed()) {
    result = linf::cli::cmd_classify(coeffs, samples, seed);
  } else if (section->parsed()) {
    result = linf::cli::cmd_section(coeffs, radius, svg_path);
  } else if (orbit->parsed()) {
    result = linf::cli::cmd_orbit(coeffs);
  } else if (iso->parsed()) {
    result = linf::cli::cmd_isometric(coeffs);
  } else if (tau->parsed()) {
    std::optional<Tokens> plane;
    if (!plane_text.empty()) plane = split_commas(plane_text);
    result = linf::cli::cmd_tau(first_point, second_point, plane, probe);
  } else if (nu->parsed()) {
    std::optional<Tokens> plane;
    if (!coeffs.empty()) plane = coeffs;
    result = linf::cli::cmd_nu(ambient, plane);
  } else if (witness->parsed()) {
    result = linf::cli::cmd_witness(first_point, second_point);
  } else {
    result = linf::cli::cmd_geodesic_check(path_file);
  }

  std::cout << result.document.dump(json_indent) << '\n';
  if (!result.message.empty()) std::cerr << result.message << '\n';
  return result.exit_code;
}
