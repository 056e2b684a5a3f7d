#ifndef SUBGAP_LIE_ALGEBRA_HPP
#define SUBGAP_LIE_ALGEBRA_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "subgap/types.hpp"

namespace subgap {

/// A finite-dimensional Lie algebra given by structure constants in a
/// labeled frame: c(i,j,k) is the E_k-coefficient of [E_i, E_j].
/// Immutable after construction.
struct LieAlgebra {
  int dim = 0;
  std::vector<std::string> labels;
  Tensor3 c;

  /// Index of a frame label; throws SchemaViolation if absent.
  int index(const std::string& label) const;

  /// Bilinear extension of the structure constants to coefficient vectors.
  Eigen::VectorXd bracket(const Eigen::VectorXd& u,
                          const Eigen::VectorXd& v) const;
};

/// Horizontal/vertical index partition. The horizontal rank n is h.size(),
/// the vertical rank m is v.size(); m == 0 is the Riemannian case.
struct Splitting {
  std::vector<int> h;
  std::vector<int> v;

  int n() const { return static_cast<int>(h.size()); }
  int m() const { return static_cast<int>(v.size()); }
};

/// Vertical scaling of the taming metric: the frame is orthonormal on H
/// and has squared length 1/epsilon on V.
struct Metric {
  double epsilon = 1.0;

  /// Squared length of frame vector a under the splitting.
  double weight(const Splitting& split, int a) const;
};

/// Checks that h and v are disjoint and cover 0..dim-1 with n >= 1.
void validate_splitting(const LieAlgebra& alg, const Splitting& split);

Diagnostic check_antisymmetry(const LieAlgebra& alg, double tol = kDefaultTol);

/// Jacobi identity residual over all index quadruples.
Diagnostic check_jacobi(const LieAlgebra& alg, double tol = kDefaultTol);

struct UnimodularResult {
  bool unimodular = true;
  double residual = 0.0;
  int witness = -1;  // frame index i with the worst trace of ad(E_i)
};

/// Unimodularity: tr ad(E_i) = sum_j c(i,j,j) vanishes for every i.
UnimodularResult check_unimodular(const LieAlgebra& alg,
                                  double tol = kDefaultTol);

struct StepResult {
  bool generating = false;
  int step = 0;            // smallest r with H + [H,H] + ... = whole algebra
  int stabilized_dim = 0;  // dimension where the flag stops growing
};

/// Growth of the flag H, H+[H,H], ... by rank of spanning sets.
StepResult bracket_generating_step(const LieAlgebra& alg,
                                   const Splitting& split,
                                   double tol = kDefaultTol);

/// Builds a splitting from frame labels.
Splitting splitting_from_labels(const LieAlgebra& alg,
                                const std::vector<std::string>& horizontal,
                                const std::vector<std::string>& vertical);

namespace builtins {

/// su(2) with frame X, Y, Z and brackets [X,Y]=Z, [Y,Z]=X, [Z,X]=Y.
LieAlgebra su2();

/// so(4) in the frame X1=B12, X2=B14, X3=B24, X4=B34, Z1=B13, Z2=B23,
/// where B^{ij} = e_i e_j^t - e_j e_i^t and the frame is orthonormal for
/// <A,B> = -tr(AB)/2.
LieAlgebra so4();

/// su(2)+su(2) in the frame Xc, Y-, Z-, X+, Y+, Z+ with
/// A+- = A_1 +- A_2 and Xc = X- + c X+.
LieAlgebra su2xsu2(double c);

/// su(2)+su(2) in the plain product frame X1, Y1, Z1, X2, Y2, Z2.
LieAlgebra su2xsu2_product();

}  // namespace builtins

}  // namespace subgap

#endif
