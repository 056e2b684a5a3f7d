#include "subgap/gap_constants.hpp"

#include <cmath>
#include <string>

namespace subgap {

Eigen::MatrixXd vertical_bracket_form(const LieAlgebra& alg,
                                      const Metric& metric,
                                      const Splitting& split) {
  const int m = split.m();
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(m, m);
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) {
      double acc = 0.0;
      for (int i : split.h)
        for (int j : split.h)
          acc += alg.c(i, j, split.v[k]) * alg.c(i, j, split.v[l]);
      q(k, l) = acc / metric.epsilon;
    }
  return q;
}

GapConstants extract_constants(const GeometryTensors& tensors,
                               const LieAlgebra& alg, const Metric& metric,
                               const Splitting& split, double tol) {
  const int n = split.n();
  const int m = split.m();
  const double eps = metric.epsilon;

  GapConstants k;
  k.n = n;
  k.m = m;

  // rho1: smallest eigenvalue of the horizontal Ricci block.
  k.ric_h = Eigen::MatrixXd(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      k.ric_h(a, b) = tensors.ric(split.h[a], split.h[b]);
  double asym = (k.ric_h - k.ric_h.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol)
    throw RicciNotSymmetric(
        "horizontal Ricci block asymmetric (residual " + std::to_string(asym) +
            "); the trace compatibility assumption likely fails upstream",
        asym);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ric_eig(
      0.5 * (k.ric_h + k.ric_h.transpose()));
  k.rho1 = ric_eig.eigenvalues()(0);
  k.rho1_witness = ric_eig.eigenvectors().col(0);

  if (m == 0) {
    k.q_form = Eigen::MatrixXd(0, 0);
    k.s_gram = Eigen::MatrixXd::Zero(n, n);
    k.b_mixed = Eigen::MatrixXd(0, n);
    k.w_vv = Eigen::MatrixXd(0, 0);
    return k;
  }

  // rho2: smallest eigenvalue of the torsion form on vertical covectors.
  k.q_form = Eigen::MatrixXd::Zero(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      double acc = 0.0;
      for (int i : split.h)
        for (int j : split.h)
          acc += tensors.t(i, j, split.v[a]) * tensors.t(i, j, split.v[b]);
      k.q_form(a, b) = acc / eps;
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> q_eig(k.q_form);
  k.rho2 = q_eig.eigenvalues()(0);
  k.rho2_witness = q_eig.eigenvectors().col(0);
  if (k.rho2 <= tol)
    throw NotStepTwo(
        "rho2 vanishes within tolerance; H + [H,H] does not span the algebra "
        "and the estimate does not apply");

  // kappa1: largest eigenvalue of the S-form Gram matrix.
  k.s_gram = tensors.s_gram;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> s_eig(k.s_gram);
  k.kappa1 = s_eig.eigenvalues()(n - 1);
  k.kappa1_witness = s_eig.eigenvectors().col(n - 1);

  // kappa2: half the top singular value of the mixed B matrix, with the
  // vertical covector measured in g_V^*. Singular values come from the
  // eigenvalues of M^t M.
  k.b_mixed = Eigen::MatrixXd(m, n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b)
      k.b_mixed(a, b) =
          tensors.b_map(split.v[a], split.h[b]) / std::sqrt(eps);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> mtm_eig(
      k.b_mixed.transpose() * k.b_mixed);
  double top = mtm_eig.eigenvalues()(n - 1);
  double sigma = std::sqrt(std::max(0.0, top));
  k.kappa2 = 0.5 * sigma;
  k.kappa2_witness_h = mtm_eig.eigenvectors().col(n - 1);
  Eigen::VectorXd bv = k.b_mixed * k.kappa2_witness_h;
  k.kappa2_witness_v = bv.norm() > tol
                           ? Eigen::VectorXd(bv / bv.norm())
                           : Eigen::VectorXd(Eigen::VectorXd::Unit(m, 0));

  // kappa3: spectral radius of the symmetrized vertical-vertical W block.
  // Finite kappa3 exists only if the symmetrized form vanishes off that
  // block, since the bound's right-hand side only sees vertical covectors.
  Eigen::MatrixXd w_sym =
      0.5 * (tensors.w_form + tensors.w_form.transpose());
  std::vector<bool> vert(alg.dim, false);
  for (int v : split.v) vert[v] = true;
  k.w_offblock_norm = 0.0;
  for (int a = 0; a < alg.dim; ++a)
    for (int b = 0; b < alg.dim; ++b)
      if (!(vert[a] && vert[b]))
        k.w_offblock_norm = std::max(k.w_offblock_norm, std::abs(w_sym(a, b)));
  k.feasible_kappa3 = k.w_offblock_norm <= tol;

  k.w_vv = Eigen::MatrixXd(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) k.w_vv(a, b) = w_sym(split.v[a], split.v[b]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> w_eig(k.w_vv);
  double lo = std::abs(w_eig.eigenvalues()(0));
  double hi = std::abs(w_eig.eigenvalues()(m - 1));
  k.kappa3 = std::max(lo, hi) / eps;
  k.kappa3_witness = std::abs(w_eig.eigenvalues()(0)) >
                             std::abs(w_eig.eigenvalues()(m - 1))
                         ? w_eig.eigenvectors().col(0)
                         : w_eig.eigenvectors().col(m - 1);
  return k;
}

}  // namespace subgap
