#ifndef SUBGAP_CONNECTION_HPP
#define SUBGAP_CONNECTION_HPP

#include "subgap/lie_algebra.hpp"
#include "subgap/types.hpp"

namespace subgap {

enum class ConnectionStrategy {
  levi_civita,
  bott_vertical,
  frame_flat,
  user_supplied,
};

/// Christoffel coefficients of a left-invariant connection in the frame:
/// gamma(i,j,k) is the E_k-coefficient of nabla_{E_i} E_j.
struct ConnectionTable {
  Tensor3 gamma;
  ConnectionStrategy strategy = ConnectionStrategy::levi_civita;
  bool metric_compatible = false;
  double compatibility_residual = 0.0;
};

/// Levi-Civita connection of the taming metric (orthonormal frame on H,
/// squared length 1/epsilon on V), from the Koszul identity.
ConnectionTable levi_civita(const LieAlgebra& alg, const Metric& metric,
                            const Splitting& split);

/// Adapted connection: horizontal part pr_H nabla^g on H plus the mixed
/// bracket term, with the vertical part chosen by strategy. Throws
/// IncompatibleVerticalConnection if the vertical part fails compatibility
/// with g_V beyond tol.
ConnectionTable build_connection(const LieAlgebra& alg, const Metric& metric,
                                 const Splitting& split,
                                 ConnectionStrategy vstrategy,
                                 const Tensor3* user_gamma_v = nullptr,
                                 double tol = kDefaultTol);

/// Torsion components T(i,j,k) = gamma(i,j,k) - gamma(j,i,k) - c(i,j,k).
Tensor3 torsion(const LieAlgebra& alg, const ConnectionTable& conn);

/// Curvature components R(i,j,l,k): the E_k-coefficient of R(E_i,E_j)E_l
/// for left-invariant data.
Tensor4 curvature(const LieAlgebra& alg, const ConnectionTable& conn);

/// Covariant derivative of the torsion: NT(i,j,l,k) is the E_k-coefficient
/// of (nabla_{E_i} T)(E_j, E_l).
Tensor4 nabla_torsion(const LieAlgebra& alg, const ConnectionTable& conn,
                      const Tensor3& t);

/// Worst metric-compatibility residual w_k G(i,j,k) + w_j G(i,k,j).
Diagnostic check_metric_compatibility(const LieAlgebra& alg,
                                      const Metric& metric,
                                      const Splitting& split,
                                      const Tensor3& gamma,
                                      double tol = kDefaultTol);

}  // namespace subgap

#endif
