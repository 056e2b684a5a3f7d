#ifndef SUBGAP_GAP_CONSTANTS_HPP
#define SUBGAP_GAP_CONSTANTS_HPP

#include <Eigen/Dense>

#include "subgap/geometry.hpp"
#include "subgap/lie_algebra.hpp"
#include "subgap/types.hpp"

namespace subgap {

/// The five scalar curvature-type constants of the spectral gap estimate,
/// extracted as extremal (tightest admissible) values, plus the matrices
/// they were read off from and the extremizing unit covectors.
struct GapConstants {
  double rho1 = 0.0;
  double rho2 = 0.0;
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  double kappa3 = 0.0;
  int n = 0;
  int m = 0;
  bool feasible_kappa3 = true;
  double w_offblock_norm = 0.0;  // worst symmetrized off-vertical W entry

  Eigen::MatrixXd ric_h;    // symmetric horizontal Ricci block
  Eigen::MatrixXd q_form;   // vertical form behind rho2 (weight included)
  Eigen::MatrixXd s_gram;   // horizontal form behind kappa1
  Eigen::MatrixXd b_mixed;  // vertical x horizontal matrix behind kappa2
  Eigen::MatrixXd w_vv;     // symmetrized vertical block behind kappa3

  Eigen::VectorXd rho1_witness;    // horizontal covector (ordered as h)
  Eigen::VectorXd rho2_witness;    // vertical covector (ordered as v)
  Eigen::VectorXd kappa1_witness;    // horizontal covector
  Eigen::VectorXd kappa2_witness_h;  // horizontal factor of the bilinear max
  Eigen::VectorXd kappa2_witness_v;  // vertical factor
  Eigen::VectorXd kappa3_witness;    // vertical covector
};

/// Extracts the tightest constants from the structure tensors.
/// Throws RicciNotSymmetric if the horizontal Ricci block is asymmetric
/// beyond tol, and NotStepTwo if rho2 vanishes within tol while m > 0.
GapConstants extract_constants(const GeometryTensors& tensors,
                               const LieAlgebra& alg, const Metric& metric,
                               const Splitting& split,
                               double tol = kDefaultTol);

/// Quadratic form on vertical covectors measuring the brackets of H; its
/// smallest eigenvalue is rho2 and is positive exactly in the step-2 case.
/// Computed from structure constants alone (no connection needed).
Eigen::MatrixXd vertical_bracket_form(const LieAlgebra& alg,
                                      const Metric& metric,
                                      const Splitting& split);

}  // namespace subgap

#endif
