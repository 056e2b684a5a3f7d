#include "subgap/peter_weyl.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "subgap/lie_algebra.hpp"

namespace subgap {

namespace {

using CMat = Eigen::MatrixXcd;
using std::complex;

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

const LieAlgebra& base_algebra(Group group) {
  static const LieAlgebra su2_alg = builtins::su2();
  static const LieAlgebra prod_alg = builtins::su2xsu2_product();
  static const LieAlgebra so4_alg = builtins::so4();
  switch (group) {
    case Group::su2:
      return su2_alg;
    case Group::su2xsu2:
      return prod_alg;
    case Group::so4:
    default:
      return so4_alg;
  }
}

bool fields_generate(const LieAlgebra& alg,
                     const std::vector<Eigen::VectorXd>& h_fields) {
  std::vector<Eigen::VectorXd> flag = h_fields;
  auto rank = [&](const std::vector<Eigen::VectorXd>& span) {
    Eigen::MatrixXd m(alg.dim, static_cast<int>(span.size()));
    for (size_t j = 0; j < span.size(); ++j)
      m.col(static_cast<int>(j)) = span[j];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    int r = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()[i] > 1e-9 * std::max(1.0, svd.singularValues()[0]))
        ++r;
    return r;
  };
  int r = rank(flag);
  while (r < alg.dim) {
    std::vector<Eigen::VectorXd> next = flag;
    for (const auto& x : h_fields)
      for (const auto& y : flag) next.push_back(alg.bracket(x, y));
    int nr = rank(next);
    if (nr == r) return false;
    flag = std::move(next);
    r = nr;
  }
  return true;
}

std::vector<IrrepLabel> enumerate_labels(Group group, int cutoff) {
  std::vector<IrrepLabel> labels;
  switch (group) {
    case Group::su2:
      for (int t = 0; t <= 2 * cutoff; ++t) labels.push_back({{t}, true});
      break;
    case Group::su2xsu2:
      for (int t1 = 0; t1 <= 2 * cutoff; ++t1)
        for (int t2 = 0; t1 + t2 <= 2 * cutoff; ++t2)
          labels.push_back({{t1, t2}, true});
      break;
    case Group::so4:
      for (int t1 = 0; t1 <= 2 * cutoff; ++t1)
        for (int t2 = 0; t1 + t2 <= 2 * cutoff; ++t2)
          if ((t1 + t2) % 2 == 0) labels.push_back({{t1, t2}, true});
      break;
  }
  return labels;
}

double gap_only(Group group, const std::vector<Eigen::VectorXd>& h_fields,
                int cutoff, int* multiplicity,
                std::vector<std::pair<IrrepLabel, std::vector<double>>>* keep) {
  double gap = std::numeric_limits<double>::infinity();
  int mult = 0;
  for (const IrrepLabel& label : enumerate_labels(group, cutoff)) {
    auto rep = build_rep(group, label);
    CMat lap = rep_sublaplacian(rep, h_fields);
    Eigen::SelfAdjointEigenSolver<CMat> eig(lap, Eigen::EigenvaluesOnly);
    std::vector<double> evs(eig.eigenvalues().data(),
                            eig.eigenvalues().data() + lap.rows());
    for (double ev : evs) {
      if (ev <= 1e-9) continue;
      if (ev < gap - 1e-9) {
        gap = ev;
        mult = 1;
      } else if (std::abs(ev - gap) <= 1e-9) {
        ++mult;
      }
    }
    if (keep) keep->emplace_back(label, std::move(evs));
  }
  if (multiplicity) *multiplicity = mult;
  return gap;
}

}  // namespace

std::array<CMat, 3> spin_generators(int two_j) {
  if (two_j < 0) throw SchemaViolation("two_j must be nonnegative");
  const int dim = two_j + 1;
  const double j = two_j / 2.0;
  CMat jz = CMat::Zero(dim, dim);
  CMat jp = CMat::Zero(dim, dim);  // raising operator
  // Basis ordered m = j, j-1, ..., -j.
  for (int r = 0; r < dim; ++r) {
    double m = j - r;
    jz(r, r) = m;
    if (r + 1 < dim) {
      double mlow = m - 1.0;
      jp(r, r + 1) = std::sqrt(j * (j + 1) - mlow * (mlow + 1));
    }
  }
  CMat jm = jp.adjoint();
  const complex<double> I(0.0, 1.0);
  CMat jx = 0.5 * (jp + jm);
  CMat jy = (jp - jm) / (2.0 * I);
  return {-I * jx, -I * jy, -I * jz};
}

std::vector<CMat> build_rep(Group group, const IrrepLabel& label) {
  switch (group) {
    case Group::su2: {
      if (label.two_j.size() != 1)
        throw SchemaViolation("su2 label needs one entry");
      auto g = spin_generators(label.two_j[0]);
      return {g[0], g[1], g[2]};
    }
    case Group::su2xsu2: {
      if (label.two_j.size() != 2)
        throw SchemaViolation("su2xsu2 label needs two entries");
      auto g1 = spin_generators(label.two_j[0]);
      auto g2 = spin_generators(label.two_j[1]);
      CMat id1 = CMat::Identity(label.two_j[0] + 1, label.two_j[0] + 1);
      CMat id2 = CMat::Identity(label.two_j[1] + 1, label.two_j[1] + 1);
      std::vector<CMat> rep;
      for (int a = 0; a < 3; ++a) rep.push_back(kron(g1[a], id2));
      for (int a = 0; a < 3; ++a) rep.push_back(kron(id1, g2[a]));
      return rep;
    }
    case Group::so4:
    default: {
      if (label.two_j.size() != 2)
        throw SchemaViolation("so4 label needs two entries");
      if ((label.two_j[0] + label.two_j[1]) % 2 != 0)
        throw NonDescendingIrrep(
            "label does not descend to SO(4): j1 + j2 is half-integral");
      auto g1 = spin_generators(label.two_j[0]);
      auto g2 = spin_generators(label.two_j[1]);
      CMat id1 = CMat::Identity(label.two_j[0] + 1, label.two_j[0] + 1);
      CMat id2 = CMat::Identity(label.two_j[1] + 1, label.two_j[1] + 1);
      // Self-dual / anti-self-dual su(2) copies inside so(4); the frames
      // (P1, -P2, P3) and (M1, -M2, M3) match the su(2) bracket convention.
      CMat p1 = kron(g1[0], id2), p2 = kron(-g1[1], id2), p3 = kron(g1[2], id2);
      CMat m1 = kron(id1, g2[0]), m2 = kron(id1, -g2[1]), m3 = kron(id1, g2[2]);
      std::vector<CMat> rep(6);
      rep[0] = p3 + m3;   // B12
      rep[1] = p1 - m1;   // B14
      rep[2] = p2 - m2;   // B24
      rep[3] = p3 - m3;   // B34
      rep[4] = -p2 - m2;  // B13
      rep[5] = p1 + m1;   // B23
      return rep;
    }
  }
}

CMat rep_sublaplacian(const std::vector<CMat>& rep,
                      const std::vector<Eigen::VectorXd>& h_fields) {
  if (rep.empty()) throw SchemaViolation("empty representation");
  const int dim = static_cast<int>(rep[0].rows());
  CMat lap = CMat::Zero(dim, dim);
  for (const auto& field : h_fields) {
    if (field.size() != static_cast<int>(rep.size()))
      throw DimensionMismatch("horizontal field length does not match basis");
    CMat x = CMat::Zero(dim, dim);
    for (int a = 0; a < field.size(); ++a)
      if (field[a] != 0.0) x += field[a] * rep[a];
    lap -= x * x;
  }
  return 0.5 * (lap + lap.adjoint());
}

SpectrumReport first_gap(Group group,
                         const std::vector<Eigen::VectorXd>& h_fields,
                         int cutoff) {
  if (cutoff < 1) throw SchemaViolation("cutoff must be >= 1");
  if (!fields_generate(base_algebra(group), h_fields))
    throw NotBracketGenerating(
        "horizontal fields do not bracket-generate the algebra; the spectrum "
        "would not be discrete-gapped");

  SpectrumReport report;
  report.cutoff = cutoff;
  report.first_gap =
      gap_only(group, h_fields, cutoff, &report.multiplicity, &report.spectra);
  double doubled = gap_only(group, h_fields, 2 * cutoff, nullptr, nullptr);
  report.stable = std::abs(doubled - report.first_gap) <= 1e-9;
  return report;
}

}  // namespace subgap
