#include "subgap/lie_algebra.hpp"

#include <algorithm>
#include <cmath>

namespace subgap {

int LieAlgebra::index(const std::string& label) const {
  for (int i = 0; i < dim; ++i)
    if (labels[i] == label) return i;
  throw SchemaViolation("unknown frame label '" + label + "'");
}

Eigen::VectorXd LieAlgebra::bracket(const Eigen::VectorXd& u,
                                    const Eigen::VectorXd& v) const {
  if (u.size() != dim || v.size() != dim)
    throw DimensionMismatch("bracket: coefficient vectors must have length " +
                            std::to_string(dim));
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim);
  for (int i = 0; i < dim; ++i) {
    if (u[i] == 0.0) continue;
    for (int j = 0; j < dim; ++j) {
      if (v[j] == 0.0) continue;
      for (int k = 0; k < dim; ++k) out[k] += u[i] * v[j] * c(i, j, k);
    }
  }
  return out;
}

double Metric::weight(const Splitting& split, int a) const {
  for (int k : split.v)
    if (k == a) return 1.0 / epsilon;
  return 1.0;
}

void validate_splitting(const LieAlgebra& alg, const Splitting& split) {
  std::vector<int> seen(alg.dim, 0);
  for (int i : split.h) {
    if (i < 0 || i >= alg.dim) throw SchemaViolation("horizontal index out of range");
    ++seen[i];
  }
  for (int i : split.v) {
    if (i < 0 || i >= alg.dim) throw SchemaViolation("vertical index out of range");
    ++seen[i];
  }
  for (int i = 0; i < alg.dim; ++i)
    if (seen[i] != 1)
      throw SchemaViolation("splitting must partition the frame; index " +
                            std::to_string(i) + " is covered " +
                            std::to_string(seen[i]) + " times");
  if (split.n() < 1) throw SchemaViolation("horizontal rank must be >= 1");
}

Diagnostic check_antisymmetry(const LieAlgebra& alg, double tol) {
  Diagnostic diag;
  for (int i = 0; i < alg.dim; ++i)
    for (int j = 0; j < alg.dim; ++j)
      for (int k = 0; k < alg.dim; ++k)
        diag.update(alg.c(i, j, k) + alg.c(j, i, k), i, j, k);
  diag.finalize(tol);
  return diag;
}

Diagnostic check_jacobi(const LieAlgebra& alg, double tol) {
  Diagnostic diag;
  const int d = alg.dim;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int l = 0; l < d; ++l)
        for (int k = 0; k < d; ++k) {
          double r = 0.0;
          for (int s = 0; s < d; ++s)
            r += alg.c(i, j, s) * alg.c(s, l, k) +
                 alg.c(j, l, s) * alg.c(s, i, k) +
                 alg.c(l, i, s) * alg.c(s, j, k);
          diag.update(r, i, j, l, k);
        }
  diag.finalize(tol);
  return diag;
}

UnimodularResult check_unimodular(const LieAlgebra& alg, double tol) {
  UnimodularResult res;
  for (int i = 0; i < alg.dim; ++i) {
    double tr = 0.0;
    for (int j = 0; j < alg.dim; ++j) tr += alg.c(i, j, j);
    if (std::abs(tr) > res.residual) {
      res.residual = std::abs(tr);
      res.witness = i;
    }
  }
  res.unimodular = res.residual <= tol;
  return res;
}

namespace {

int rank_of(const std::vector<Eigen::VectorXd>& span, int dim, double tol) {
  if (span.empty()) return 0;
  Eigen::MatrixXd m(dim, static_cast<int>(span.size()));
  for (size_t j = 0; j < span.size(); ++j) m.col(static_cast<int>(j)) = span[j];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > tol * std::max(1.0, svd.singularValues()[0]))
      ++r;
  return r;
}

}  // namespace

StepResult bracket_generating_step(const LieAlgebra& alg,
                                   const Splitting& split, double tol) {
  validate_splitting(alg, split);
  std::vector<Eigen::VectorXd> horiz;
  for (int i : split.h) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(alg.dim);
    e[i] = 1.0;
    horiz.push_back(e);
  }
  std::vector<Eigen::VectorXd> flag = horiz;
  int rank = rank_of(flag, alg.dim, tol);
  StepResult res;
  res.step = 1;
  res.stabilized_dim = rank;
  while (rank < alg.dim) {
    std::vector<Eigen::VectorXd> next = flag;
    for (const auto& x : horiz)
      for (const auto& y : flag) next.push_back(alg.bracket(x, y));
    int next_rank = rank_of(next, alg.dim, tol);
    if (next_rank == rank) {
      res.generating = false;
      res.stabilized_dim = rank;
      return res;
    }
    flag = std::move(next);
    rank = next_rank;
    ++res.step;
  }
  res.generating = true;
  res.stabilized_dim = alg.dim;
  return res;
}

Splitting splitting_from_labels(const LieAlgebra& alg,
                                const std::vector<std::string>& horizontal,
                                const std::vector<std::string>& vertical) {
  Splitting split;
  for (const auto& l : horizontal) split.h.push_back(alg.index(l));
  for (const auto& l : vertical) split.v.push_back(alg.index(l));
  validate_splitting(alg, split);
  return split;
}

namespace builtins {

LieAlgebra su2() {
  LieAlgebra alg;
  alg.dim = 3;
  alg.labels = {"X", "Y", "Z"};
  alg.c = Tensor3(3);
  auto set = [&](int i, int j, int k) {
    alg.c(i, j, k) = 1.0;
    alg.c(j, i, k) = -1.0;
  };
  set(0, 1, 2);  // [X,Y] = Z
  set(1, 2, 0);  // [Y,Z] = X
  set(2, 0, 1);  // [Z,X] = Y
  return alg;
}

LieAlgebra so4() {
  // Frame B12, B14, B24, B34, B13, B23 as 4x4 matrices; structure constants
  // read off with the orthonormal inner product <A,B> = -tr(AB)/2.
  const std::array<std::pair<int, int>, 6> idx = {
      {{0, 1}, {0, 3}, {1, 3}, {2, 3}, {0, 2}, {1, 2}}};
  std::vector<Eigen::Matrix4d> basis;
  for (auto [i, j] : idx) {
    Eigen::Matrix4d b = Eigen::Matrix4d::Zero();
    b(i, j) = 1.0;
    b(j, i) = -1.0;
    basis.push_back(b);
  }
  LieAlgebra alg;
  alg.dim = 6;
  alg.labels = {"X1", "X2", "X3", "X4", "Z1", "Z2"};
  alg.c = Tensor3(6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      Eigen::Matrix4d comm = basis[a] * basis[b] - basis[b] * basis[a];
      for (int k = 0; k < 6; ++k)
        alg.c(a, b, k) = -0.5 * (comm * basis[k]).trace();
    }
  return alg;
}

LieAlgebra su2xsu2_product() {
  LieAlgebra alg;
  alg.dim = 6;
  alg.labels = {"X1", "Y1", "Z1", "X2", "Y2", "Z2"};
  alg.c = Tensor3(6);
  auto set = [&](int i, int j, int k) {
    alg.c(i, j, k) = 1.0;
    alg.c(j, i, k) = -1.0;
  };
  for (int base : {0, 3}) {
    set(base, base + 1, base + 2);
    set(base + 1, base + 2, base);
    set(base + 2, base, base + 1);
  }
  return alg;
}

LieAlgebra su2xsu2(double c) {
  LieAlgebra base = su2xsu2_product();
  // Rows: new frame coordinates in the product basis.
  Eigen::MatrixXd frame(6, 6);
  frame.setZero();
  // Xc = X- + c X+ = (1+c) X1 + (c-1) X2
  frame(0, 0) = 1.0 + c;
  frame(0, 3) = c - 1.0;
  frame(1, 1) = 1.0;  // Y-
  frame(1, 4) = -1.0;
  frame(2, 2) = 1.0;  // Z-
  frame(2, 5) = -1.0;
  frame(3, 0) = 1.0;  // X+
  frame(3, 3) = 1.0;
  frame(4, 1) = 1.0;  // Y+
  frame(4, 4) = 1.0;
  frame(5, 2) = 1.0;  // Z+
  frame(5, 5) = 1.0;
  Eigen::MatrixXd to_new = frame.transpose().inverse();

  LieAlgebra alg;
  alg.dim = 6;
  alg.labels = {"Xc", "Y-", "Z-", "X+", "Y+", "Z+"};
  alg.c = Tensor3(6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      Eigen::VectorXd w =
          base.bracket(frame.row(a).transpose(), frame.row(b).transpose());
      Eigen::VectorXd coeff = to_new * w;
      for (int k = 0; k < 6; ++k) {
        double v = coeff[k];
        alg.c(a, b, k) = std::abs(v) < 1e-14 ? 0.0 : v;
      }
    }
  return alg;
}

}  // namespace builtins

}  // namespace subgap
