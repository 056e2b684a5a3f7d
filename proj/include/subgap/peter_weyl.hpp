#ifndef SUBGAP_PETER_WEYL_HPP
#define SUBGAP_PETER_WEYL_HPP

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "subgap/types.hpp"

namespace subgap {

enum class Group { su2, su2xsu2, so4 };

/// Highest-weight label: one doubled spin per su(2) factor. For SO(4) the
/// label lives on the double cover and descends iff j1 + j2 is an integer.
struct IrrepLabel {
  std::vector<int> two_j;
  bool descends_to_quotient = true;

  int dim() const {
    int d = 1;
    for (int t : two_j) d *= t + 1;
    return d;
  }
};

/// Skew-Hermitian spin-j images of the su(2) frame X, Y, Z with
/// [X,Y] = Z cyclically; size (two_j + 1).
std::array<Eigen::MatrixXcd, 3> spin_generators(int two_j);

/// Frame-ordered generator matrices of the irrep. Basis order:
///   su2:      X, Y, Z
///   su2xsu2:  X1, Y1, Z1, X2, Y2, Z2
///   so4:      X1=B12, X2=B14, X3=B24, X4=B34, Z1=B13, Z2=B23
/// Throws NonDescendingIrrep for so4 labels with j1 + j2 half-integral.
std::vector<Eigen::MatrixXcd> build_rep(Group group, const IrrepLabel& label);

/// Hermitian positive semi-definite matrix of -sum_i dpi(X_i)^2 for the
/// horizontal fields given as coefficient vectors in the rep's basis order.
Eigen::MatrixXcd rep_sublaplacian(const std::vector<Eigen::MatrixXcd>& rep,
                                  const std::vector<Eigen::VectorXd>& h_fields);

struct SpectrumReport {
  std::vector<std::pair<IrrepLabel, std::vector<double>>> spectra;
  double first_gap = 0.0;
  int multiplicity = 0;
  int cutoff = 0;        // maximum total spin enumerated
  bool stable = false;   // gap unchanged when the cutoff is doubled
};

/// Enumerates all irreps with total spin <= cutoff (descending labels only
/// for so4), collects eigenvalues and returns the smallest positive one.
/// Throws NotBracketGenerating if the horizontal fields do not generate.
SpectrumReport first_gap(Group group,
                         const std::vector<Eigen::VectorXd>& h_fields,
                         int cutoff);

}  // namespace subgap

#endif
