#ifndef PTV_PETERSON_HPP
#define PTV_PETERSON_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ptv/linalg.hpp"
#include "ptv/toric.hpp"
#include "ptv/weyl.hpp"

namespace ptv {

/// Parameters (x_1..x_{k-1}) of the k x k lower-unitriangular Toeplitz
/// matrix with x_j on the j-th subdiagonal.
struct ToeplitzParams {
  std::size_t size = 1;
  RatVec params;  // length size-1
};

/// A point x wdot_J B^- of the Peterson variety, encoded by J and one
/// Toeplitz block per connected component of J.
struct PetersonPoint {
  SubsetJ J;
  std::vector<ToeplitzParams> blocks;  // per component, size |Jbar_k|
};

struct StratumYLabel {
  SubsetJ K, J;
  bool operator==(const StratumYLabel&) const = default;
};

ExactMatrix toeplitz_matrix(const ToeplitzParams& tp);

/// The assembled J-Toeplitz matrix times wJ_rep(J).
ExactMatrix flag_rep(const PetersonPoint& p);

/// The assembled J-Toeplitz matrix itself.
ExactMatrix j_toeplitz_matrix(const PetersonPoint& p);

/// g B^- lies in Y iff ad_f(g) vanishes strictly above the superdiagonal.
bool peterson_membership(const ExactMatrix& m);

/// K = exact zero set of delta_vector(flag_rep(p)); K <= J always holds.
StratumYLabel stratum_of(const PetersonPoint& p);

/// Every Toeplitz block totally nonnegative and every Delta_i >= 0.
bool is_tnn_point(const PetersonPoint& p);

/// Psi(g B^-) = [Delta_1..Delta_{n-1}; q_1..q_{n-1}], exact.
ToricPoint psi(const PetersonPoint& p);

/// Lower-left minors of the Toeplitz matrix (Rietsch's coordinates).
RatVec minor_map_forward(const ToeplitzParams& tp);
std::vector<double> minor_map_forward(const std::vector<double>& params);

struct NewtonOptions {
  double residual_tol = 1e-12;
  int max_iterations = 200;
  int max_halvings = 40;
  int continuation_steps = 16;
  int restarts = 8;
};

/// Numeric inverse of the minor map on the nonnegative orthant: damped
/// Newton with straight-line continuation from the minor vector of exp(f).
/// Throws solve_error on non-convergence, domain_input_error on a negative
/// target.
ToeplitzParams minor_map_inverse(const std::vector<double>& targets,
                                 std::size_t k,
                                 const NewtonOptions& opts = {});

/// Seeded sample of Y_{K,J;>0}: log-uniform positive minor targets on
/// J - K, zeros on K, inverted blockwise.
PetersonPoint sample_stratum(const SubsetJ& K, const SubsetJ& J,
                             std::uint64_t seed);

/// Blockwise inverse of Psi on canonical nonnegative toric points.
PetersonPoint psi_inverse_nonneg(const ToricPoint& q, double tol = 1e-9);

}  // namespace ptv

#endif
