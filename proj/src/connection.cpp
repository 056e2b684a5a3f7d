#include "subgap/connection.hpp"

#include <cmath>
#include <string>

namespace subgap {

namespace {

/// Koszul identity for left-invariant fields and a diagonal frame metric:
/// 2 w_k G(a,b,k) = w_k c(a,b,k) - w_a c(b,k,a) + w_b c(k,a,b).
Tensor3 koszul(const LieAlgebra& alg, const Metric& metric,
               const Splitting& split) {
  const int d = alg.dim;
  Tensor3 g(d);
  for (int a = 0; a < d; ++a) {
    double wa = metric.weight(split, a);
    for (int b = 0; b < d; ++b) {
      double wb = metric.weight(split, b);
      for (int k = 0; k < d; ++k) {
        double wk = metric.weight(split, k);
        g(a, b, k) = (wk * alg.c(a, b, k) - wa * alg.c(b, k, a) +
                      wb * alg.c(k, a, b)) /
                     (2.0 * wk);
      }
    }
  }
  return g;
}

}  // namespace

Diagnostic check_metric_compatibility(const LieAlgebra& alg,
                                      const Metric& metric,
                                      const Splitting& split,
                                      const Tensor3& gamma, double tol) {
  Diagnostic diag;
  const int d = alg.dim;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        double r = metric.weight(split, k) * gamma(i, j, k) +
                   metric.weight(split, j) * gamma(i, k, j);
        diag.update(r, i, j, k);
      }
  diag.finalize(tol);
  return diag;
}

ConnectionTable levi_civita(const LieAlgebra& alg, const Metric& metric,
                            const Splitting& split) {
  ConnectionTable conn;
  conn.strategy = ConnectionStrategy::levi_civita;
  conn.gamma = koszul(alg, metric, split);
  Diagnostic compat =
      check_metric_compatibility(alg, metric, split, conn.gamma);
  conn.metric_compatible = compat.pass;
  conn.compatibility_residual = compat.residual;
  return conn;
}

ConnectionTable build_connection(const LieAlgebra& alg, const Metric& metric,
                                 const Splitting& split,
                                 ConnectionStrategy vstrategy,
                                 const Tensor3* user_gamma_v, double tol) {
  validate_splitting(alg, split);
  if (vstrategy == ConnectionStrategy::levi_civita)
    return levi_civita(alg, metric, split);
  if (vstrategy == ConnectionStrategy::user_supplied && !user_gamma_v)
    throw SchemaViolation("user_supplied vertical connection needs a table");

  const int d = alg.dim;
  Tensor3 lc = koszul(alg, metric, split);
  ConnectionTable conn;
  conn.strategy = vstrategy;
  conn.gamma = Tensor3(d);

  // Horizontal outputs.
  for (int j : split.h) {
    for (int k : split.h) {
      for (int i : split.h) conn.gamma(i, j, k) = lc(i, j, k);
      for (int i : split.v) conn.gamma(i, j, k) = alg.c(i, j, k);
    }
  }

  // Vertical outputs from the chosen vertical connection.
  switch (vstrategy) {
    case ConnectionStrategy::bott_vertical:
      for (int j : split.v)
        for (int k : split.v) {
          for (int i : split.v) conn.gamma(i, j, k) = lc(i, j, k);
          for (int i : split.h) conn.gamma(i, j, k) = alg.c(i, j, k);
        }
      break;
    case ConnectionStrategy::frame_flat:
      break;  // vertical frame is parallel
    case ConnectionStrategy::user_supplied:
      for (int i = 0; i < d; ++i)
        for (int j : split.v)
          for (int k : split.v) conn.gamma(i, j, k) = (*user_gamma_v)(i, j, k);
      break;
    default:
      break;
  }

  // The vertical connection must be compatible with g_V.
  Diagnostic vcompat;
  for (int i = 0; i < d; ++i)
    for (int j : split.v)
      for (int k : split.v) {
        double r = metric.weight(split, k) * conn.gamma(i, j, k) +
                   metric.weight(split, j) * conn.gamma(i, k, j);
        vcompat.update(r, i, j, k);
      }
  vcompat.finalize(tol);
  if (!vcompat.pass)
    throw IncompatibleVerticalConnection(
        "vertical connection incompatible with g_V; worst triple (" +
            alg.labels[vcompat.witness[0]] + ", " +
            alg.labels[vcompat.witness[1]] + ", " +
            alg.labels[vcompat.witness[2]] + ") residual " +
            std::to_string(vcompat.residual),
        vcompat.residual);

  Diagnostic compat =
      check_metric_compatibility(alg, metric, split, conn.gamma, tol);
  conn.metric_compatible = compat.pass;
  conn.compatibility_residual = compat.residual;
  return conn;
}

Tensor3 torsion(const LieAlgebra& alg, const ConnectionTable& conn) {
  const int d = alg.dim;
  Tensor3 t(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        t(i, j, k) = conn.gamma(i, j, k) - conn.gamma(j, i, k) - alg.c(i, j, k);
  return t;
}

Tensor4 curvature(const LieAlgebra& alg, const ConnectionTable& conn) {
  const int d = alg.dim;
  const Tensor3& g = conn.gamma;
  Tensor4 r(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int l = 0; l < d; ++l)
        for (int k = 0; k < d; ++k) {
          double acc = 0.0;
          for (int s = 0; s < d; ++s)
            acc += g(j, l, s) * g(i, s, k) - g(i, l, s) * g(j, s, k) -
                   alg.c(i, j, s) * g(s, l, k);
          r(i, j, l, k) = acc;
        }
  return r;
}

Tensor4 nabla_torsion(const LieAlgebra& alg, const ConnectionTable& conn,
                      const Tensor3& t) {
  const int d = alg.dim;
  const Tensor3& g = conn.gamma;
  Tensor4 nt(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int l = 0; l < d; ++l)
        for (int k = 0; k < d; ++k) {
          double acc = 0.0;
          for (int s = 0; s < d; ++s)
            acc += t(j, l, s) * g(i, s, k) - g(i, j, s) * t(s, l, k) -
                   g(i, l, s) * t(j, s, k);
          nt(i, j, l, k) = acc;
        }
  return nt;
}

}  // namespace subgap
