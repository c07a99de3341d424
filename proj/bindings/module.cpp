#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptv/fan.hpp"
#include "ptv/json_io.hpp"
#include "ptv/peterson.hpp"
#include "ptv/polytope.hpp"
#include "ptv/toric.hpp"
#include "ptv/verify.hpp"

namespace py = pybind11;
using namespace ptv;

// Rationals cross the boundary as "p/q" strings to stay exact.

namespace {

RatVec vec_from_strings(const std::vector<std::string>& v) {
  RatVec out;
  for (const std::string& s : v) out.push_back(rat_from_string(s));
  return out;
}

std::vector<std::string> vec_to_strings(const RatVec& v) {
  std::vector<std::string> out;
  for (const Rat& r : v) out.push_back(rat_to_string(r));
  return out;
}

PetersonPoint point_from_parts(
    std::size_t n, const std::vector<std::size_t>& j,
    const std::vector<std::vector<std::string>>& blocks) {
  PetersonPoint p;
  p.J = SubsetJ(n, j);
  const auto comps = connected_components(p.J);
  if (blocks.size() != comps.size())
    throw std::invalid_argument("block count does not match components of J");
  for (std::size_t b = 0; b < comps.size(); ++b) {
    ToeplitzParams tp;
    tp.size = comps[b].hi + 2 - comps[b].lo;
    tp.params = vec_from_strings(blocks[b]);
    if (tp.params.size() + 1 != tp.size)
      throw std::invalid_argument("block parameter count mismatch");
    p.blocks.push_back(std::move(tp));
  }
  return p;
}

}  // namespace

PYBIND11_MODULE(_ptv, m) {
  m.doc() = "Exact fan/polytope/toric constructions for the Peterson variety";

  m.def("fan_json", [](std::size_t n) {
    return fan_to_json(enumerate_fan(n)).dump();
  });
  m.def("polytope_json", [](std::size_t n) {
    return polytope_to_json(h_representation(n)).dump();
  });
  m.def("vertex", [](std::size_t n, const std::vector<std::size_t>& j) {
    return vertex_vJ(SubsetJ(n, j)).coords;
  });
  m.def("cube_map",
        [](std::size_t n, const std::vector<std::string>& point) {
          const PolytopeModel model = h_representation(n);
          return vec_to_strings(cube_homeo(vec_from_strings(point), model));
        });
  m.def("moment",
        [](std::size_t n, const std::vector<double>& x,
           const std::vector<double>& y) {
          return moment_map(ToricPoint::floating(x, y), lattice_points(n));
        });
  m.def("psi",
        [](std::size_t n, const std::vector<std::size_t>& j,
           const std::vector<std::vector<std::string>>& blocks) {
          const ToricPoint img = psi(point_from_parts(n, j, blocks));
          return py::make_tuple(vec_to_strings(img.x), vec_to_strings(img.y));
        });
  m.def("delta", [](std::size_t n, const std::vector<std::size_t>& j,
                    const std::vector<std::vector<std::string>>& blocks) {
    return vec_to_strings(delta_vector(flag_rep(point_from_parts(n, j, blocks))));
  });
  m.def("q", [](std::size_t n, const std::vector<std::size_t>& j,
                const std::vector<std::vector<std::string>>& blocks) {
    return vec_to_strings(q_vector(flag_rep(point_from_parts(n, j, blocks))));
  });
  m.def("rietsch_inverse", [](const std::vector<double>& targets, std::size_t k) {
    const ToeplitzParams tp = minor_map_inverse(targets, k);
    std::vector<double> out;
    for (const Rat& v : tp.params) out.push_back(rat_to_double(v));
    return out;
  });
  m.def("rietsch_forward", [](const std::vector<double>& params) {
    return minor_map_forward(params);
  });
  m.def("sample_stratum_psi",
        [](std::size_t n, const std::vector<std::size_t>& kk,
           const std::vector<std::size_t>& jj, std::uint64_t seed) {
          const PetersonPoint p =
              sample_stratum(SubsetJ(n, kk), SubsetJ(n, jj), seed);
          const ToricPoint img = psi(p);
          return py::make_tuple(vec_to_strings(img.x), vec_to_strings(img.y));
        });
  m.def("is_totally_nonnegative",
        [](const std::vector<std::vector<std::string>>& rows) {
          return is_totally_nonnegative(ExactMatrix::from_strings(rows));
        });
  m.def("verify_all", [](std::size_t n_min, std::size_t n_max,
                         std::uint64_t seed, std::size_t samples) {
    VerifyConfig cfg;
    cfg.n_min = n_min;
    cfg.n_max = n_max;
    cfg.seed = seed;
    cfg.samples = samples;
    const VerificationReport rep = run_all(cfg);
    return py::make_tuple(rep.passed, rep.failed, rep.skipped,
                          report_to_json_lines(rep));
  });
}
