#pragma once

#include <iosfwd>
#include <json.hpp>
#include <span>
#include <string>

#include "stadium/conformal_map.hpp"
#include "stadium/monte_carlo.hpp"
#include "stadium/symm_solver.hpp"

namespace stadium::io {

using Json = nlohmann::ordered_json;

/// {kind, L, nu, phi: [4 rows], residual_norm, quadrature_tol, measure}.
/// "measure" is pi (phi_10 + phi_30); readers ignore it.
Json solution_to_json(const SourceDensitySolution& solution);
SourceDensitySolution solution_from_json(const Json& doc);

void write_solution(const std::string& path, const SourceDensitySolution& solution);
SourceDensitySolution read_solution(const std::string& path);

/// {N, h, seed, hits, p_hat, std_error}.
Json mc_result_to_json(const McResult& result);

/// Decimal '.' with 15 significant digits, no grouping.
std::string format_number(double value);

/// Header z_re,z_im,f_re,f_im,curve_id then one row per sample.
void write_mesh_csv(std::ostream& out, std::span<const MeshSample> samples);

/// Command, parameters, tool version and wall-clock duration of a CLI run.
struct RunManifest {
  std::string command;
  Json parameters = Json::object();
  std::string version = STADIUM_VERSION;
  double duration_seconds = 0.0;

  Json to_json() const;
};

}  // namespace stadium::io
