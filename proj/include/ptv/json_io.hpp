#ifndef PTV_JSON_IO_HPP
#define PTV_JSON_IO_HPP

#include <string>

#include "ptv/fan.hpp"
#include "ptv/matrix.hpp"
#include "ptv/peterson.hpp"
#include "ptv/polytope.hpp"
#include "ptv/toric.hpp"

#include "json.hpp"

namespace ptv {

// Matrices serialize as an array of rows, rationals as strings "p/q".
nlohmann::json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json subset_to_json(const SubsetJ& s);
SubsetJ subset_from_json(const nlohmann::json& j, std::size_t n);

nlohmann::json block_partition_to_json(const BlockPartition& bp);

nlohmann::json fan_to_json(const FanSigma& fan);

nlohmann::json polytope_to_json(const PolytopeModel& model);

// {"x":[...], "y":[...], "mode":"exact"|"float"}
nlohmann::json toric_point_to_json(const ToricPoint& p);
ToricPoint toric_point_from_json(const nlohmann::json& j);

// {"n":n, "J":[...], "blocks":[["p/q",...],...]}
nlohmann::json peterson_point_to_json(const PetersonPoint& p, std::size_t n);
PetersonPoint peterson_point_from_json(const nlohmann::json& j);

}  // namespace ptv

#endif
