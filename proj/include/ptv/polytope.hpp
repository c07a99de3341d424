#ifndef PTV_POLYTOPE_HPP
#define PTV_POLYTOPE_HPP

#include <cstddef>
#include <vector>

#include "ptv/rational.hpp"
#include "ptv/weyl.hpp"

namespace ptv {

struct VertexVJ {
  SubsetJ J;
  std::vector<long> coords;  // length n-1, integral
};

/// Half-space <normal, x> >= rhs.
struct HalfSpace {
  RatVec normal;
  Rat rhs;
};

/// The polytope P_{n-1}: vertices v_J and the 2(n-1) facet inequalities
/// <e_i, x> >= 0 and <-alpha^vee_i, x> >= -2.
struct PolytopeModel {
  std::size_t n;
  std::vector<VertexVJ> vertices;      // indexed by J-mask
  std::vector<HalfSpace> inequalities; // first n-1: e_i >= 0; then coroot ones
};

/// Label of the face F_{K,J} = (intersect F_i^+ over i in K) cap
/// (intersect F_i^- over i not in J); dim = |J| - |K|.
struct FaceLabel {
  SubsetJ K, J;
  bool operator==(const FaceLabel&) const = default;
};

/// Face of the cube [0,1]^{n-1}: x_i = 0 for i in K, x_i = 1 for i not in J.
struct CubeFace {
  SubsetJ K, J;
};

/// Strictly decreasing chain of faces with convex weights; p is the
/// weighted sum of the face barycenters.
struct FlagChain {
  std::vector<FaceLabel> faces;
  RatVec weights;
};

VertexVJ vertex_vJ(const SubsetJ& J);

/// Builds the model and verifies V/H agreement exactly:
/// every v_J is feasible, and for each J the n-1 active constraints
/// determine v_J uniquely. Throws std::logic_error on mismatch.
PolytopeModel h_representation(std::size_t n);

/// {v_{J'} : K <= J' <= J}.
std::vector<VertexVJ> face_vertices(const SubsetJ& K, const SubsetJ& J);

/// Exact evaluation <normal, p> - rhs of inequality idx (0-based).
Rat slack(const PolytopeModel& model, std::size_t idx, const RatVec& p);

bool is_feasible(const PolytopeModel& model, const RatVec& p);

/// The unique face containing p in its relative interior; throws
/// outside_error for infeasible p.
FaceLabel carrier_face(const RatVec& p, const PolytopeModel& model);

/// Barycenter (vertex average) of the face F_{K,J}.
RatVec face_barycenter(const FaceLabel& f);

/// Flag of faces F_0 > F_1 > ... with weights expressing p through the
/// chain of barycenters (radial decomposition from the carrier barycenter).
FlagChain barycentric_flag(const RatVec& p, const PolytopeModel& model);

/// Barycenter of the cube face E_{K,J}: 0 on K, 1 off J, 1/2 otherwise.
RatVec cube_face_barycenter(const FaceLabel& f);

/// The face-poset-equivariant homeomorphism P_{n-1} -> [0,1]^{n-1}.
RatVec cube_homeo(const RatVec& p, const PolytopeModel& model);

/// Snaps a floating point near P_{n-1} onto the exact carrier face
/// (orthogonal projection onto the active affine subspace), then returns
/// an exactly feasible rational point. tol bounds how far a constraint may
/// be from active to count as active.
RatVec snap_to_face(const std::vector<double>& p, const PolytopeModel& model,
                    double tol = 1e-9);

/// Coordinate-pattern membership in the relative interior of E_{K,J}.
/// Exact for rational input.
bool cube_interior_member(const RatVec& x, const SubsetJ& K, const SubsetJ& J);
bool cube_interior_member(const std::vector<double>& x, const SubsetJ& K,
                          const SubsetJ& J, double tol);

}  // namespace ptv

#endif
