#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ptv/errors.hpp"
#include "ptv/fan.hpp"
#include "ptv/json_io.hpp"
#include "ptv/peterson.hpp"
#include "ptv/polytope.hpp"
#include "ptv/toric.hpp"
#include "ptv/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;

void write_or_print(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot open output file: " + out);
  f << text << "\n";
}

ptv::RatVec parse_point(const std::string& csv) {
  ptv::RatVec p;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) p.push_back(ptv::rat_from_string(tok));
  return p;
}

json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open input file: " + path);
  return json::parse(f);
}

std::string subset_str(const ptv::SubsetJ& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.members.size(); ++i)
    out += (i ? "," : "") + std::to_string(s.members[i]);
  return out + "}";
}

void emit_plot_data(const std::string& dir, std::uint64_t seed) {
  fs::create_directories(dir);
  for (std::size_t n : {3ul, 4ul}) {
    const ptv::PolytopeModel model = ptv::h_representation(n);
    {
      std::ofstream f(dir + "/p" + std::to_string(n - 1) + "_vertices.csv");
      f << "label";
      for (std::size_t i = 1; i <= n - 1; ++i) f << ",x" << i;
      f << "\n";
      for (const ptv::VertexVJ& v : model.vertices) {
        f << subset_str(v.J);
        for (long c : v.coords) f << "," << c;
        f << "\n";
      }
    }
    {
      std::ofstream f(dir + "/p" + std::to_string(n - 1) + "_edges.csv");
      f << "from,to\n";
      for (const ptv::SubsetJ& J : ptv::all_subsets(n)) {
        unsigned long km = J.mask();
        for (;;) {
          const ptv::SubsetJ K = ptv::SubsetJ::from_mask(n, km);
          if (J.members.size() - K.members.size() == 1) {
            const auto vs = ptv::face_vertices(K, J);
            f << subset_str(vs[0].J) << "," << subset_str(vs[1].J) << "\n";
          }
          if (km == 0) break;
          km = (km - 1) & J.mask();
        }
      }
    }
  }
  // sampled composite-map images
  std::mt19937_64 rng(seed);
  for (std::size_t n : {2ul, 3ul, 4ul}) {
    const ptv::PolytopeModel model = ptv::h_representation(n);
    const ptv::MomentWeights mw = ptv::lattice_points(n);
    std::ofstream f(dir + "/phi_samples_n" + std::to_string(n) + ".csv");
    f << "K,J";
    for (std::size_t i = 1; i <= n - 1; ++i) f << ",phi" << i;
    f << "\n";
    for (const ptv::SubsetJ& J : ptv::all_subsets(n)) {
      unsigned long km = J.mask();
      for (;;) {
        const ptv::SubsetJ K = ptv::SubsetJ::from_mask(n, km);
        for (int s = 0; s < 20; ++s) {
          const ptv::PetersonPoint p = ptv::sample_stratum(K, J, rng());
          const ptv::ToricPoint img = ptv::psi(p);
          std::vector<double> xf, yf;
          for (const ptv::Rat& v : img.x) {
            double d = ptv::rat_to_double(v);
            if (std::abs(d) <= 1e-8) d = 0.0;
            xf.push_back(d);
          }
          for (const ptv::Rat& v : img.y) yf.push_back(ptv::rat_to_double(v));
          const std::vector<double> mu =
              ptv::moment_map(ptv::ToricPoint::floating(xf, yf), mw);
          const ptv::RatVec phi =
              ptv::cube_homeo(ptv::snap_to_face(mu, model, 1e-9), model);
          f << subset_str(K) << "," << subset_str(J);
          for (const ptv::Rat& v : phi) f << "," << ptv::rat_to_double(v);
          f << "\n";
        }
        if (km == 0) break;
        km = (km - 1) & J.mask();
      }
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact constructions and verification suites for the Peterson "
               "toric correspondence"};
  app.require_subcommand(1);

  std::size_t n = 3;
  std::uint64_t seed = 20240001;
  std::size_t samples = 25;
  double tol = 1e-9;
  std::string out, point_csv, point_file, emit_plot, targets_csv;
  std::size_t k = 3;
  std::size_t n_min = 2, n_max = 4;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "RNG seed")->envname("PTV_SEED");
    cmd->add_option("--samples", samples, "samples per check")
        ->envname("PTV_SAMPLES");
    cmd->add_option("--tol", tol, "floating tolerance")->envname("PTV_TOL");
    cmd->add_option("--out", out, "write output to file instead of stdout")
        ->envname("PTV_OUT");
  };

  CLI::App* fan_cmd = app.add_subcommand("fan", "print the fan as JSON");
  fan_cmd->add_option("--n", n, "rank")->envname("PTV_N")->check(CLI::Range(2, 12));
  add_common(fan_cmd);

  CLI::App* poly_cmd =
      app.add_subcommand("polytope", "print the polytope model as JSON");
  poly_cmd->add_option("--n", n, "rank")->envname("PTV_N")->check(CLI::Range(2, 12));
  add_common(poly_cmd);

  CLI::App* cube_cmd = app.add_subcommand(
      "cube-map", "evaluate the polytope-to-cube map on a rational point");
  cube_cmd->add_option("--n", n, "rank")->envname("PTV_N");
  cube_cmd->add_option("--point", point_csv, "comma-separated rationals")
      ->required();
  add_common(cube_cmd);

  CLI::App* moment_cmd = app.add_subcommand(
      "moment", "moment map of a toric point, with its carrier face");
  moment_cmd->add_option("--n", n, "rank")->envname("PTV_N");
  moment_cmd->add_option("--point", point_file, "toric point JSON file")
      ->required();
  add_common(moment_cmd);

  CLI::App* psi_cmd = app.add_subcommand(
      "psi", "image of a Peterson point with both stratum labels");
  psi_cmd->add_option("--point", point_file, "Peterson point JSON file")
      ->required();
  add_common(psi_cmd);

  CLI::App* rietsch_cmd = app.add_subcommand(
      "rietsch", "invert the lower-left minor map on nonnegative targets");
  rietsch_cmd->add_option("--k", k, "matrix size")->check(CLI::Range(2, 8));
  rietsch_cmd->add_option("--targets", targets_csv, "comma-separated minors")
      ->required();
  add_common(rietsch_cmd);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run every verification suite");
  verify_cmd->add_option("--n-min", n_min, "smallest rank")->envname("PTV_N_MIN");
  verify_cmd->add_option("--n-max", n_max, "largest rank")->envname("PTV_N_MAX");
  verify_cmd->add_option("--emit-plot", emit_plot, "directory for CSV plot data")
      ->envname("PTV_EMIT_PLOT");
  add_common(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (fan_cmd->parsed()) {
      write_or_print(ptv::fan_to_json(ptv::enumerate_fan(n)).dump(2), out);
      return kExitPass;
    }
    if (poly_cmd->parsed()) {
      write_or_print(ptv::polytope_to_json(ptv::h_representation(n)).dump(2),
                     out);
      return kExitPass;
    }
    if (cube_cmd->parsed()) {
      const ptv::RatVec p = parse_point(point_csv);
      if (p.size() != n - 1)
        throw ptv::size_error("expected " + std::to_string(n - 1) +
                              " coordinates");
      const ptv::PolytopeModel model = ptv::h_representation(n);
      const ptv::RatVec image = ptv::cube_homeo(p, model);
      json j = json::array();
      for (const ptv::Rat& v : image) j.push_back(ptv::rat_to_string(v));
      write_or_print(j.dump(), out);
      return kExitPass;
    }
    if (moment_cmd->parsed()) {
      const ptv::ToricPoint p = ptv::toric_point_from_json(load_json_file(point_file));
      const ptv::MomentWeights mw = ptv::lattice_points(p.rank());
      const std::vector<double> mu = ptv::moment_map(p, mw);
      const ptv::PolytopeModel model = ptv::h_representation(p.rank());
      const ptv::RatVec snapped = ptv::snap_to_face(mu, model, tol);
      const ptv::FaceLabel f = ptv::carrier_face(snapped, model);
      json j;
      j["mu"] = mu;
      j["carrier"] = {{"K", ptv::subset_to_json(f.K)},
                      {"J", ptv::subset_to_json(f.J)}};
      write_or_print(j.dump(2), out);
      return kExitPass;
    }
    if (psi_cmd->parsed()) {
      const ptv::PetersonPoint p =
          ptv::peterson_point_from_json(load_json_file(point_file));
      const ptv::StratumYLabel ys = ptv::stratum_of(p);
      const ptv::ToricPoint img = ptv::psi(p);
      const ptv::StratumLabel ts = ptv::stratum_of(img, tol);
      json j;
      j["psi"] = ptv::toric_point_to_json(img);
      j["y_stratum"] = {{"K", ptv::subset_to_json(ys.K)},
                        {"J", ptv::subset_to_json(ys.J)}};
      j["toric_stratum"] = {{"K", ptv::subset_to_json(ts.K)},
                            {"J", ptv::subset_to_json(ts.J)}};
      write_or_print(j.dump(2), out);
      return kExitPass;
    }
    if (rietsch_cmd->parsed()) {
      std::vector<double> targets;
      std::stringstream ss(targets_csv);
      std::string tok;
      while (std::getline(ss, tok, ',')) targets.push_back(std::stod(tok));
      if (targets.size() != k - 1)
        throw ptv::size_error("expected " + std::to_string(k - 1) + " targets");
      const ptv::ToeplitzParams tp = ptv::minor_map_inverse(targets, k);
      std::vector<double> params;
      for (const ptv::Rat& v : tp.params) params.push_back(ptv::rat_to_double(v));
      const std::vector<double> back = ptv::minor_map_forward(params);
      double res = 0;
      for (std::size_t i = 0; i < targets.size(); ++i)
        res = std::max(res, std::abs(back[i] - targets[i]));
      json j;
      j["params"] = params;
      j["residual"] = res;
      write_or_print(j.dump(2), out);
      return kExitPass;
    }
    if (verify_cmd->parsed()) {
      ptv::VerifyConfig cfg;
      cfg.n_min = n_min;
      cfg.n_max = n_max;
      cfg.seed = seed;
      cfg.samples = samples;
      cfg.tol = tol;
      if (cfg.n_min < 2 || cfg.n_min > cfg.n_max) {
        std::cerr << "invalid n range\n";
        return kExitUsage;
      }
      const ptv::VerificationReport rep = ptv::run_all(cfg);
      for (const ptv::CheckResult& r : rep.results) {
        const char* s = r.status == ptv::CheckStatus::Pass
                            ? "PASS"
                            : (r.status == ptv::CheckStatus::Fail ? "FAIL"
                                                                  : "SKIP");
        std::cerr << s << " " << r.check_id << " n=" << r.n << "\n";
      }
      write_or_print(ptv::report_to_json_lines(rep), out);
      if (!emit_plot.empty()) emit_plot_data(emit_plot, seed);
      return rep.all_passed() ? kExitPass : kExitVerifyFail;
    }
  } catch (const ptv::solve_error& e) {
    std::cerr << "solver did not converge: " << e.what() << "\n";
    return kExitSolver;
  } catch (const ptv::parse_error& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
