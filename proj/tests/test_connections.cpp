#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "subgap/connection.hpp"
#include "subgap/lie_algebra.hpp"

using namespace subgap;

namespace {

double max_torsion(const LieAlgebra& alg, const ConnectionTable& conn) {
  Tensor3 t = torsion(alg, conn);
  double worst = 0.0;
  for (int i = 0; i < alg.dim; ++i)
    for (int j = 0; j < alg.dim; ++j)
      for (int k = 0; k < alg.dim; ++k)
        worst = std::max(worst, std::abs(t(i, j, k)));
  return worst;
}

}  // namespace

TEST_CASE("Levi-Civita is torsion-free and metric compatible") {
  for (double eps : {1.0, 0.5, 4.0}) {
    for (const LieAlgebra& alg :
         {builtins::su2(), builtins::so4(), builtins::su2xsu2(0.2)}) {
      Splitting split;
      for (int i = 0; i < alg.dim; ++i)
        (i < alg.dim / 2 ? split.h : split.v).push_back(i);
      Metric metric{eps};
      ConnectionTable lc = levi_civita(alg, metric, split);
      CHECK(lc.metric_compatible);
      CHECK(max_torsion(alg, lc) < 1e-12);
    }
  }
}

TEST_CASE("bi-invariant Levi-Civita on su2 halves the brackets") {
  LieAlgebra alg = builtins::su2();
  Splitting split{{0, 1, 2}, {}};
  ConnectionTable lc = levi_civita(alg, Metric{1.0}, split);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        CHECK(lc.gamma(i, j, k) == doctest::Approx(0.5 * alg.c(i, j, k)));

  // R(X,Y)Y = -[[X,Y],Y]/4 = X/4 for the bi-invariant metric
  Tensor4 r = curvature(alg, lc);
  CHECK(r(0, 1, 1, 0) == doctest::Approx(0.25));
  CHECK(r(0, 2, 2, 0) == doctest::Approx(0.25));
  CHECK(r(0, 1, 1, 2) == doctest::Approx(0.0));
}

TEST_CASE("first Bianchi identity for the torsion-free connection") {
  LieAlgebra alg = builtins::so4();
  Splitting split{{0, 1, 2, 3}, {4, 5}};
  ConnectionTable lc = levi_civita(alg, Metric{2.0}, split);
  Tensor4 r = curvature(alg, lc);
  const int d = alg.dim;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int l = 0; l < d; ++l)
        for (int k = 0; k < d; ++k)
          CHECK(std::abs(r(i, j, l, k) + r(j, l, i, k) + r(l, i, j, k)) <
                1e-12);
}

TEST_CASE("adapted connection keeps the Levi-Civita horizontal block") {
  LieAlgebra alg = builtins::so4();
  Splitting split{{0, 1, 2, 3}, {4, 5}};
  Metric metric{1.0};
  ConnectionTable lc = levi_civita(alg, metric, split);
  ConnectionTable conn = build_connection(alg, metric, split,
                                          ConnectionStrategy::bott_vertical);
  CHECK(conn.metric_compatible);
  for (int i : split.h)
    for (int j : split.h)
      for (int k : split.h)
        CHECK(conn.gamma(i, j, k) == doctest::Approx(lc.gamma(i, j, k)));
  // mixed block: vertical direction acts on horizontal fields by brackets
  for (int i : split.v)
    for (int j : split.h)
      for (int k : split.h)
        CHECK(conn.gamma(i, j, k) == doctest::Approx(alg.c(i, j, k)));
}

TEST_CASE("adapted torsion maps horizontal pairs into the vertical bundle") {
  LieAlgebra alg = builtins::so4();
  Splitting split{{0, 1, 2, 3}, {4, 5}};
  Metric metric{1.0};
  ConnectionTable conn = build_connection(alg, metric, split,
                                          ConnectionStrategy::bott_vertical);
  Tensor3 t = torsion(alg, conn);
  for (int i : split.h)
    for (int j : split.h) {
      for (int k : split.h) CHECK(std::abs(t(i, j, k)) < 1e-12);
      for (int k : split.v)
        CHECK(t(i, j, k) == doctest::Approx(-alg.c(i, j, k)));
    }
  // mixed torsion vanishes here because the foliation is totally geodesic
  for (int i : split.h)
    for (int k : split.v)
      for (int l = 0; l < alg.dim; ++l) CHECK(std::abs(t(i, k, l)) < 1e-12);
}

TEST_CASE("vertical strategies: user table equal to bott is accepted") {
  LieAlgebra alg = builtins::so4();
  Splitting split{{0, 1, 2, 3}, {4, 5}};
  Metric metric{1.0};
  ConnectionTable bott = build_connection(alg, metric, split,
                                          ConnectionStrategy::bott_vertical);
  Tensor3 gv(alg.dim);
  for (int i = 0; i < alg.dim; ++i)
    for (int j : split.v)
      for (int k : split.v) gv(i, j, k) = bott.gamma(i, j, k);
  ConnectionTable user = build_connection(
      alg, metric, split, ConnectionStrategy::user_supplied, &gv);
  for (int i = 0; i < alg.dim; ++i)
    for (int j = 0; j < alg.dim; ++j)
      for (int k = 0; k < alg.dim; ++k)
        CHECK(user.gamma(i, j, k) == doctest::Approx(bott.gamma(i, j, k)));
}

TEST_CASE("incompatible vertical tables are rejected") {
  LieAlgebra alg = builtins::so4();
  Splitting split{{0, 1, 2, 3}, {4, 5}};
  Metric metric{1.0};
  Tensor3 gv(alg.dim);
  gv(4, 4, 4) = 1.0;  // symmetric part cannot vanish
  CHECK_THROWS_AS(build_connection(alg, metric, split,
                                   ConnectionStrategy::user_supplied, &gv),
                  IncompatibleVerticalConnection);
  CHECK_THROWS_AS(build_connection(alg, metric, split,
                                   ConnectionStrategy::user_supplied, nullptr),
                  SchemaViolation);
}

TEST_CASE("bott strategy rejected when the foliation is not totally geodesic") {
  LieAlgebra alg = builtins::su2xsu2(0.3);
  Splitting split{{0, 1, 2}, {3, 4, 5}};
  Metric metric{1.0};
  CHECK_THROWS_AS(build_connection(alg, metric, split,
                                   ConnectionStrategy::bott_vertical),
                  IncompatibleVerticalConnection);
  // the frame-flat vertical connection always works
  ConnectionTable ff = build_connection(alg, metric, split,
                                        ConnectionStrategy::frame_flat);
  for (int i = 0; i < alg.dim; ++i)
    for (int j : split.v)
      for (int k : split.v) CHECK(ff.gamma(i, j, k) == doctest::Approx(0.0));
}

TEST_CASE("nabla of a vanishing torsion vanishes") {
  LieAlgebra alg = builtins::su2();
  Splitting split{{0, 1, 2}, {}};
  ConnectionTable lc = levi_civita(alg, Metric{1.0}, split);
  Tensor3 t = torsion(alg, lc);
  Tensor4 nt = nabla_torsion(alg, lc, t);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l)
        for (int k = 0; k < 3; ++k) CHECK(std::abs(nt(i, j, l, k)) < 1e-12);
}
