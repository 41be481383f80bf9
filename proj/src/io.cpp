#include "stadium/io.hpp"

#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>

#include "stadium/errors.hpp"

namespace stadium::io {

Json solution_to_json(const SourceDensitySolution& solution) {
  Json doc;
  doc["kind"] = to_string(solution.geometry.shape());
  doc["L"] = solution.geometry.half_length();
  doc["nu"] = solution.nu;
  doc["phi"] = Json::array();
  for (const auto& row : solution.phi) doc["phi"].push_back(row);
  doc["residual_norm"] = solution.residual_norm;
  doc["quadrature_tol"] = solution.quadrature_tol;
  doc["measure"] = solution.dome_measure();
  return doc;
}

SourceDensitySolution solution_from_json(const Json& doc) {
  try {
    const Shape shape = parse_shape(doc.at("kind").get<std::string>());
    const DomainGeometry geometry(shape, doc.at("L").get<double>());
    const int nu = doc.at("nu").get<int>();
    const auto& rows = doc.at("phi");
    if (!rows.is_array() || rows.size() != 4) throw DomainError("phi must hold four rows");
    SourceDensitySolution sol{geometry, nu, {}, doc.at("residual_norm").get<double>(),
                              doc.at("quadrature_tol").get<double>()};
    for (int k = 0; k < 4; ++k) {
      sol.phi[k] = rows[k].get<std::vector<double>>();
      if (static_cast<int>(sol.phi[k].size()) != nu + 1) {
        throw DomainError("phi row length must be nu + 1");
      }
    }
    return sol;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed solution document: ") + e.what());
  }
}

void write_solution(const std::string& path, const SourceDensitySolution& solution) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << solution_to_json(solution).dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

SourceDensitySolution read_solution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  Json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("'" + path + "' is not valid JSON: " + e.what());
  }
  return solution_from_json(doc);
}

Json mc_result_to_json(const McResult& result) {
  Json doc;
  doc["N"] = result.trials;
  doc["h"] = result.config.h;
  doc["seed"] = result.config.seed;
  doc["hits"] = result.hits_domes;
  doc["p_hat"] = result.p_hat;
  doc["std_error"] = result.std_error;
  return doc;
}

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

void write_mesh_csv(std::ostream& out, std::span<const MeshSample> samples) {
  out << "z_re,z_im,f_re,f_im,curve_id\n";
  for (const auto& s : samples) {
    out << format_number(s.z.real()) << ',' << format_number(s.z.imag()) << ','
        << format_number(s.f.real()) << ',' << format_number(s.f.imag()) << ',' << s.curve_id
        << '\n';
  }
}

Json RunManifest::to_json() const {
  Json doc;
  doc["command"] = command;
  doc["parameters"] = parameters;
  doc["version"] = version;
  doc["duration_seconds"] = duration_seconds;
  return doc;
}

}  // namespace stadium::io
