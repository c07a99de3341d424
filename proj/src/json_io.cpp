#include "ptv/json_io.hpp"

#include "ptv/errors.hpp"

namespace ptv {

using nlohmann::json;

json matrix_to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 1; j <= m.cols(); ++j)
      row.push_back(rat_to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ExactMatrix matrix_from_json(const json& j) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : j) {
    std::vector<std::string> r;
    for (const auto& e : row) r.push_back(e.get<std::string>());
    rows.push_back(std::move(r));
  }
  return ExactMatrix::from_strings(rows);
}

json subset_to_json(const SubsetJ& s) {
  json out = json::array();
  for (std::size_t i : s.members) out.push_back(i);
  return out;
}

SubsetJ subset_from_json(const json& j, std::size_t n) {
  std::vector<std::size_t> v;
  for (const auto& e : j) v.push_back(e.get<std::size_t>());
  return SubsetJ(n, std::move(v));
}

json block_partition_to_json(const BlockPartition& bp) {
  json blocks = json::array();
  for (const Interval& b : bp.blocks) {
    json block = json::array();
    for (std::size_t p = b.lo; p <= b.hi; ++p) block.push_back(p);
    blocks.push_back(std::move(block));
  }
  return json{{"blocks", blocks}, {"singletons", bp.singletons}};
}

json fan_to_json(const FanSigma& fan) {
  json cones = json::array();
  for (const ConeTau& c : fan.cones) {
    json gens = json::array();
    for (const RayVector& g : c.generators) {
      json coords = json::array();
      for (const Rat& v : g.coords) coords.push_back(rat_to_string(v));
      gens.push_back(std::move(coords));
    }
    cones.push_back(json{{"K", subset_to_json(c.K)},
                         {"J", subset_to_json(c.J)},
                         {"generators", gens}});
  }
  return json{{"n", fan.n}, {"cones", cones}};
}

json polytope_to_json(const PolytopeModel& model) {
  json verts = json::object();
  for (const VertexVJ& v : model.vertices) {
    std::string key;
    for (std::size_t i : v.J.members)
      key += (key.empty() ? "" : ",") + std::to_string(i);
    verts[key.empty() ? "{}" : "{" + key + "}"] = v.coords;
  }
  json ineqs = json::array();
  for (const HalfSpace& h : model.inequalities) {
    json normal = json::array();
    for (const Rat& c : h.normal) normal.push_back(rat_to_string(c));
    ineqs.push_back(json{{"normal", normal}, {"rhs", rat_to_string(h.rhs)}});
  }
  return json{{"n", model.n}, {"vertices", verts}, {"inequalities", ineqs}};
}

json toric_point_to_json(const ToricPoint& p) {
  json x = json::array(), y = json::array();
  if (p.mode == ToricPoint::Mode::Exact) {
    for (const Rat& v : p.x) x.push_back(rat_to_string(v));
    for (const Rat& v : p.y) y.push_back(rat_to_string(v));
    return json{{"x", x}, {"y", y}, {"mode", "exact"}};
  }
  for (double v : p.xf) x.push_back(v);
  for (double v : p.yf) y.push_back(v);
  return json{{"x", x}, {"y", y}, {"mode", "float"}};
}

ToricPoint toric_point_from_json(const json& j) {
  const std::string mode = j.value("mode", "exact");
  if (mode == "exact") {
    RatVec x, y;
    for (const auto& e : j.at("x")) x.push_back(rat_from_string(e.get<std::string>()));
    for (const auto& e : j.at("y")) y.push_back(rat_from_string(e.get<std::string>()));
    return ToricPoint::exact(std::move(x), std::move(y));
  }
  if (mode != "float") throw parse_error("unknown toric point mode: " + mode);
  std::vector<double> x, y;
  for (const auto& e : j.at("x")) x.push_back(e.get<double>());
  for (const auto& e : j.at("y")) y.push_back(e.get<double>());
  return ToricPoint::floating(std::move(x), std::move(y));
}

json peterson_point_to_json(const PetersonPoint& p, std::size_t n) {
  json blocks = json::array();
  for (const ToeplitzParams& tp : p.blocks) {
    json b = json::array();
    for (const Rat& v : tp.params) b.push_back(rat_to_string(v));
    blocks.push_back(std::move(b));
  }
  return json{{"n", n}, {"J", subset_to_json(p.J)}, {"blocks", blocks}};
}

PetersonPoint peterson_point_from_json(const json& j) {
  const std::size_t n = j.at("n").get<std::size_t>();
  PetersonPoint p;
  p.J = subset_from_json(j.at("J"), n);
  const auto comps = connected_components(p.J);
  const auto& blocks = j.at("blocks");
  if (blocks.size() != comps.size())
    throw parse_error("block count does not match components of J");
  for (std::size_t b = 0; b < comps.size(); ++b) {
    ToeplitzParams tp;
    tp.size = comps[b].hi + 2 - comps[b].lo;
    for (const auto& e : blocks[b])
      tp.params.push_back(rat_from_string(e.get<std::string>()));
    if (tp.params.size() + 1 != tp.size)
      throw parse_error("block parameter count does not match Jbar size");
    p.blocks.push_back(std::move(tp));
  }
  return p;
}

}  // namespace ptv
