#include "subgap/geometry.hpp"

namespace subgap {

GeometryTensors structure_tensors(const LieAlgebra& alg, const Metric& metric,
                                  const Splitting& split,
                                  const ConnectionTable& conn) {
  const int d = alg.dim;
  const int n = split.n();
  const double eps = metric.epsilon;

  GeometryTensors gt;
  gt.t = torsion(alg, conn);
  gt.r = curvature(alg, conn);
  gt.nabla_t = nabla_torsion(alg, conn, gt.t);

  gt.curv = Tensor3(d);
  for (int i : split.h)
    for (int j : split.h)
      for (int k : split.v) gt.curv(i, j, k) = alg.c(i, j, k);

  gt.cocurv = Tensor3(d);
  for (int k : split.v)
    for (int l : split.v)
      for (int i : split.h) gt.cocurv(k, l, i) = alg.c(k, l, i);

  // Ricci trace over the horizontal frame. ric(a,b) is the E_a-coefficient
  // of the sum over i in H of R(E_b, E_i) E_i, matching the sign that makes
  // the round sphere come out positive.
  gt.ric = Eigen::MatrixXd::Zero(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int i : split.h) gt.ric(a, b) += gt.r(b, i, i, a);

  // B(v) = tr_H (nabla_x T)(x, v) - tr_H T(x, T(x, v)).
  gt.b_map = Eigen::MatrixXd::Zero(d, d);
  for (int b = 0; b < d; ++b)
    for (int s = 0; s < d; ++s) {
      double acc = 0.0;
      for (int i : split.h) {
        acc += gt.nabla_t(i, i, b, s);
        for (int q = 0; q < d; ++q) acc -= gt.t(i, b, q) * gt.t(i, q, s);
      }
      gt.b_map(s, b) = acc;
    }

  // Gram matrix of the S-form on horizontal covectors, ordered as split.h.
  gt.s_gram = Eigen::MatrixXd::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double acc = 0.0;
      for (int i : split.h)
        for (int k : split.v)
          acc += (1.0 / eps) * gt.t(i, split.h[a], k) * gt.t(i, split.h[b], k);
      gt.s_gram(a, b) = acc;
    }

  // Bilinear matrix of the W-form on covectors.
  gt.w_form = Eigen::MatrixXd::Zero(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      double acc = 0.0;
      for (int i : split.h)
        for (int k : split.v) acc += gt.t(i, k, a) * gt.t(i, k, b);
      gt.w_form(a, b) = eps * acc;
    }
  for (int a = 0; a < d; ++a)
    for (int b : split.v) gt.w_form(a, b) -= eps * gt.b_map(a, b);

  return gt;
}

Diagnostic check_assumption_A(const LieAlgebra& alg, const Metric& /*metric*/,
                              const Splitting& split, double tol) {
  Diagnostic diag;
  for (int z : split.v)
    for (int x : split.h)
      for (int y : split.h)
        diag.update(alg.c(z, x, y) + alg.c(z, y, x), z, x, y);
  diag.finalize(tol);
  return diag;
}

Diagnostic check_assumption_B(const LieAlgebra& alg, const Splitting& split,
                              double tol) {
  // Polarized form of the trace condition: for vertical Z and horizontal X,
  // the trace of v -> cocurv(Z, curv(X, v)) vanishes.
  Diagnostic diag;
  for (int z : split.v)
    for (int x : split.h) {
      double r = 0.0;
      for (int i : split.h)
        for (int l : split.v) r += alg.c(x, i, l) * alg.c(z, l, i);
      diag.update(r, z, x);
    }
  diag.finalize(tol);
  return diag;
}

Diagnostic check_assumption_C(const LieAlgebra& alg, const Metric& metric,
                              const Splitting& split, double tol) {
  Diagnostic diag;
  for (int x : split.h) {
    double r = 0.0;
    for (int k : split.v) r += metric.weight(split, k) * alg.c(x, k, k);
    diag.update(r, x);
  }
  diag.finalize(tol);
  return diag;
}

Diagnostic check_totally_geodesic(const LieAlgebra& alg, const Metric& metric,
                                  const Splitting& split, double tol) {
  Diagnostic diag;
  for (int x : split.h)
    for (int k : split.v)
      for (int l : split.v) {
        double r = metric.weight(split, l) * alg.c(x, k, l) +
                   metric.weight(split, k) * alg.c(x, l, k);
        diag.update(r, x, k, l);
      }
  diag.finalize(tol);
  return diag;
}

Diagnostic check_yang_mills(const LieAlgebra& alg, const Splitting& split,
                            const GeometryTensors& tensors, double tol) {
  Diagnostic diag;
  const int d = alg.dim;
  for (int b = 0; b < d; ++b)
    for (int k = 0; k < d; ++k) {
      double r = 0.0;
      for (int i : split.h) r += tensors.nabla_t(i, i, b, k);
      diag.update(r, b, k);
    }
  diag.finalize(tol);
  return diag;
}

Diagnostic check_v_integrable(const LieAlgebra& alg, const Splitting& split,
                              double tol) {
  Diagnostic diag;
  for (int k : split.v)
    for (int l : split.v)
      for (int i : split.h) diag.update(alg.c(k, l, i), k, l, i);
  diag.finalize(tol);
  return diag;
}

}  // namespace subgap
