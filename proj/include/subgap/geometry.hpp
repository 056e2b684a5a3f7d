#ifndef SUBGAP_GEOMETRY_HPP
#define SUBGAP_GEOMETRY_HPP

#include <Eigen/Dense>

#include "subgap/connection.hpp"
#include "subgap/lie_algebra.hpp"
#include "subgap/types.hpp"

namespace subgap {

/// Structure tensors of an adapted connection, all in frame components.
struct GeometryTensors {
  Tensor3 t;         // torsion
  Tensor4 r;         // curvature
  Tensor4 nabla_t;   // covariant derivative of the torsion
  Tensor3 curv;      // curvature of H: vertical part of horizontal brackets
  Tensor3 cocurv;    // cocurvature: horizontal part of vertical brackets
  Eigen::MatrixXd ric;     // ric(a,b): E_a-coefficient of Ric applied at E_b
  Eigen::MatrixXd b_map;   // b_map(s,b): E_s-coefficient of B(E_b)
  Eigen::MatrixXd s_gram;  // n x n Gram matrix of the S-form on H covectors
  Eigen::MatrixXd w_form;  // d x d bilinear matrix <W(e^a), e^b>
};

/// Fills every tensor table for a connection built on the same
/// (algebra, metric, splitting).
GeometryTensors structure_tensors(const LieAlgebra& alg, const Metric& metric,
                                  const Splitting& split,
                                  const ConnectionTable& conn);

/// Metric-preserving complement: flows of vertical fields preserve g_H.
Diagnostic check_assumption_A(const LieAlgebra& alg, const Metric& metric,
                              const Splitting& split, double tol = kDefaultTol);

/// Trace compatibility of curvature against cocurvature.
Diagnostic check_assumption_B(const LieAlgebra& alg, const Splitting& split,
                              double tol = kDefaultTol);

/// Vertical trace of horizontal Lie derivatives of g vanishes
/// (minimal leaves).
Diagnostic check_assumption_C(const LieAlgebra& alg, const Metric& metric,
                              const Splitting& split, double tol = kDefaultTol);

/// Totally geodesic condition (L_X g)(Z, Z') = 0 over vertical pairs.
Diagnostic check_totally_geodesic(const LieAlgebra& alg, const Metric& metric,
                                  const Splitting& split,
                                  double tol = kDefaultTol);

/// Yang-Mills condition: the horizontal trace of nabla T vanishes.
Diagnostic check_yang_mills(const LieAlgebra& alg, const Splitting& split,
                            const GeometryTensors& tensors,
                            double tol = kDefaultTol);

/// Integrability of V: horizontal part of vertical brackets vanishes.
Diagnostic check_v_integrable(const LieAlgebra& alg, const Splitting& split,
                              double tol = kDefaultTol);

}  // namespace subgap

#endif
