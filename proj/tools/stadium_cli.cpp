// Command-line front end: solves, measures, sweeps, Monte Carlo runs,
// convergence tables and mesh exports. Data goes to --out or stdout;
// diagnostics and the run manifest (when writing to stdout) go to stderr.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stadium/conformal_map.hpp"
#include "stadium/errors.hpp"
#include "stadium/io.hpp"
#include "stadium/monte_carlo.hpp"
#include "stadium/rect_exact.hpp"
#include "stadium/simd/kernels.hpp"
#include "stadium/symm_solver.hpp"

namespace {

using stadium::io::Json;
using Clock = std::chrono::steady_clock;

struct Output {
  std::string path;

  // Writes data to the file (plus a .manifest.json sidecar) or to stdout
  // (manifest on stderr). The data itself never contains timings, so files
  // are byte-stable across runs.
  void emit(const std::string& data, stadium::io::RunManifest manifest, Clock::time_point t0) const {
    manifest.duration_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (path.empty()) {
      std::cout << data << std::flush;
      std::cerr << manifest.to_json().dump() << '\n';
      return;
    }
    write_file(path, data);
    write_file(path + ".manifest.json", manifest.to_json().dump(2) + "\n");
  }

  static void write_file(const std::string& file, const std::string& data) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + file + "' for writing");
    out << data;
    if (!out) throw std::runtime_error("failed writing '" + file + "'");
  }
};

std::vector<stadium::ArcId> parse_arcs(const std::vector<int>& indices) {
  std::vector<stadium::ArcId> arcs;
  for (int i : indices) arcs.emplace_back(i);
  return arcs;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace stadium;

  CLI::App app{"Conformal map of the stadium and rectangle onto the unit disk"};
  app.set_version_flag("--version", std::string(STADIUM_VERSION));
  app.require_subcommand(1);
  std::function<void()> action;

  // solve
  std::string shape = "stadium";
  double L = 1.0;
  int nu = 256;
  double tol = 1e-10;
  Output out;
  auto* solve_cmd = app.add_subcommand("solve", "Solve the collocation system and write the solution JSON");
  solve_cmd->add_option("--shape", shape, "stadium or rect")->check(CLI::IsMember({"stadium", "rect"}));
  solve_cmd->add_option("--L", L, "Half-length of the straight sides")->capture_default_str();
  solve_cmd->add_option("--nu", nu, "Collocation order (>= 4)")->capture_default_str();
  solve_cmd->add_option("--tol", tol, "Quadrature tolerance")->capture_default_str();
  solve_cmd->add_option("--out", out.path, "Output JSON path (default stdout)");
  solve_cmd->callback([&] {
    action = [&] {
      const auto t0 = Clock::now();
      CollocationConfig cfg;
      cfg.nu = nu;
      cfg.quadrature_tol = tol;
      const auto sol = solve(DomainGeometry(parse_shape(shape), L), cfg);
      io::RunManifest manifest{"solve", {{"shape", shape}, {"L", L}, {"nu", nu}, {"tol", tol}}};
      manifest.parameters["simd"] = simd::to_string(simd::active_isa());
      out.emit(io::solution_to_json(sol).dump(2) + "\n", manifest, t0);
    };
  });

  // measure
  std::string solution_path;
  std::vector<int> arc_indices{1, 3};
  auto* measure_cmd = app.add_subcommand("measure", "Harmonic measure of boundary arcs from a solution file");
  measure_cmd->add_option("--solution", solution_path, "Solution JSON")->required()->check(CLI::ExistingFile);
  measure_cmd->add_option("--arcs", arc_indices, "Arc indices (0 bottom, 1 right, 2 top, 3 left)")
      ->delimiter(',')
      ->check(CLI::Range(0, 3))
      ->capture_default_str();
  measure_cmd->callback([&] {
    action = [&] {
      const auto t0 = Clock::now();
      const DiskMap map(io::read_solution(solution_path));
      const auto arcs = parse_arcs(arc_indices);
      const auto result = map.harmonic_measure(arcs);
      Json doc;
      doc["arcs"] = arc_indices;
      doc["p"] = result.p;
      doc["method"] = to_string(result.method);
      doc["nu"] = result.order;
      doc["uncertainty"] = result.uncertainty;
      out.emit(doc.dump(2) + "\n", {"measure", {{"solution", solution_path}, {"arcs", arc_indices}}}, t0);
    };
  });
  measure_cmd->add_option("--out", out.path, "Output path (default stdout)");

  // convergence
  std::vector<int> nu_list{64, 100, 128, 256, 300, 350, 500, 512, 800, 1000, 1200};
  auto* conv_cmd = app.add_subcommand("convergence", "Dome measure for a list of collocation orders (CSV nu,p)");
  conv_cmd->add_option("--shape", shape, "stadium or rect")->check(CLI::IsMember({"stadium", "rect"}));
  conv_cmd->add_option("--L", L, "Half-length of the straight sides")->capture_default_str();
  conv_cmd->add_option("--nu-list", nu_list, "Comma-separated collocation orders")->delimiter(',');
  conv_cmd->add_option("--tol", tol, "Quadrature tolerance")->capture_default_str();
  conv_cmd->add_option("--out", out.path, "Output CSV path (default stdout)");
  conv_cmd->callback([&] {
    action = [&] {
      const auto t0 = Clock::now();
      const DomainGeometry geom(parse_shape(shape), L);
      std::ostringstream csv;
      csv << "nu,p\n";
      for (int n : nu_list) {
        CollocationConfig cfg;
        cfg.nu = n;
        cfg.quadrature_tol = tol;
        const auto sol = solve(geom, cfg);
        csv << n << ',' << io::format_number(sol.dome_measure()) << '\n';
        std::cerr << "nu=" << n << " done\n";
      }
      out.emit(csv.str(), {"convergence", {{"shape", shape}, {"L", L}, {"nu_list", nu_list}, {"tol", tol}}}, t0);
    };
  });

  // sweep
  double L_min = 0.1;
  double L_max = 2.0;
  int steps = 20;
  int sweep_nu = 200;
  auto* sweep_cmd = app.add_subcommand("sweep", "Stadium vs rectangle end measure over a range of L (CSV)");
  sweep_cmd->add_option("--L-min", L_min)->capture_default_str();
  sweep_cmd->add_option("--L-max", L_max)->capture_default_str();
  sweep_cmd->add_option("--steps", steps, "Number of L values (>= 1)")->capture_default_str()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--nu", sweep_nu, "Collocation order for the stadium")->capture_default_str();
  sweep_cmd->add_option("--out", out.path, "Output CSV path (default stdout)");
  sweep_cmd->callback([&] {
    action = [&] {
      const auto t0 = Clock::now();
      if (!(L_min > 0.0) || L_max < L_min) throw DomainError("need 0 < L-min <= L-max");
      std::ostringstream csv;
      csv << "L,p_stadium,p_rect_exact\n";
      for (int i = 0; i < steps; ++i) {
        const double Li = steps == 1 ? L_min : L_min + (L_max - L_min) * i / (steps - 1);
        CollocationConfig cfg;
        cfg.nu = sweep_nu;
        const auto sol = solve(DomainGeometry::stadium(Li), cfg);
        const double p_rect = rect_end_measure({Li});
        csv << io::format_number(Li) << ',' << io::format_number(sol.dome_measure()) << ','
            << io::format_number(p_rect) << '\n';
      }
      out.emit(csv.str(),
               {"sweep", {{"L_min", L_min}, {"L_max", L_max}, {"steps", steps}, {"nu", sweep_nu}}}, t0);
    };
  });

  // mc
  McConfig mc;
  auto* mc_cmd = app.add_subcommand("mc", "Walk-on-circles Monte Carlo estimate of the dome measure (JSON)");
  mc_cmd->add_option("--shape", shape, "stadium or rect")->check(CLI::IsMember({"stadium", "rect"}));
  mc_cmd->add_option("--L", L)->capture_default_str();
  mc_cmd->add_option("--N", mc.trials, "Number of trials")->capture_default_str();
  mc_cmd->set_help_flag("--help", "Print this help message and exit");
  mc_cmd->add_option("--h", mc.h, "Absorption threshold")->capture_default_str();
  mc_cmd->add_option("--seed", mc.seed)->capture_default_str();
  mc_cmd->add_option("--threads", mc.threads, "Worker threads (results do not depend on it)")->capture_default_str();
  mc_cmd->add_option("--out", out.path, "Output JSON path (default stdout)");
  mc_cmd->callback([&] {
    action = [&] {
      const auto t0 = Clock::now();
      const auto result = run_monte_carlo(DomainGeometry(parse_shape(shape), L), mc);
      out.emit(io::mc_result_to_json(result).dump(2) + "\n",
               {"mc",
                {{"shape", shape}, {"L", L}, {"N", mc.trials}, {"h", mc.h}, {"seed", mc.seed},
                 {"threads", mc.threads}}},
               t0);
    };
  });

  // rect
  auto* rect_cmd = app.add_subcommand("rect", "Exact end measure of a 2L x 2 rectangle");
  rect_cmd->add_option("--L", L)->capture_default_str();
  rect_cmd->add_option("--out", out.path, "Output path (default stdout)");
  rect_cmd->callback([&] {
    action = [&] {
      const auto t0 = Clock::now();
      const double p = rect_end_measure({L});
      out.emit(io::format_number(p) + "\n", {"rect", {{"L", L}}}, t0);
    };
  });

  // mesh
  int circles = 8;
  int rays = 16;
  int samples = 64;
  auto* mesh_cmd = app.add_subcommand("mesh", "Forward images of scaled boundary copies and rays (CSV)");
  mesh_cmd->add_option("--shape", shape, "stadium or rect")->check(CLI::IsMember({"stadium", "rect"}));
  mesh_cmd->add_option("--L", L)->capture_default_str();
  mesh_cmd->add_option("--nu", nu)->capture_default_str();
  mesh_cmd->add_option("--circles", circles)->capture_default_str();
  mesh_cmd->add_option("--rays", rays)->capture_default_str();
  mesh_cmd->add_option("--samples", samples, "Samples per curve")->capture_default_str();
  mesh_cmd->add_option("--out", out.path, "Output CSV path (default stdout)");
  mesh_cmd->callback([&] {
    action = [&] {
      const auto t0 = Clock::now();
      CollocationConfig cfg;
      cfg.nu = nu;
      const DiskMap map(solve(DomainGeometry(parse_shape(shape), L), cfg));
      const auto mesh = map.export_mesh(rays, circles, samples);
      std::ostringstream csv;
      io::write_mesh_csv(csv, mesh);
      out.emit(csv.str(),
               {"mesh",
                {{"shape", shape}, {"L", L}, {"nu", nu}, {"circles", circles}, {"rays", rays},
                 {"samples", samples}}},
               t0);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
