#ifndef SUBGAP_TYPES_HPP
#define SUBGAP_TYPES_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace subgap {

/// Default tolerance separating true zeros from floating-point noise.
/// All shipped example algebras have small rational structure constants,
/// so 1e-9 is many orders of magnitude above rounding error.
inline constexpr double kDefaultTol = 1e-9;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IncompatibleVerticalConnection : public Error {
 public:
  IncompatibleVerticalConnection(const std::string& msg, double residual)
      : Error(msg), residual(residual) {}
  double residual;
};

class RicciNotSymmetric : public Error {
 public:
  RicciNotSymmetric(const std::string& msg, double residual)
      : Error(msg), residual(residual) {}
  double residual;
};

class NotStepTwo : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  NotApplicable(const std::string& msg, double margin)
      : Error(msg), margin(margin) {}
  double margin;
};

class InfeasibleKappa3 : public Error {
 public:
  using Error::Error;
};

class NoSignChange : public Error {
 public:
  using Error::Error;
};

class NonDescendingIrrep : public Error {
 public:
  using Error::Error;
};

class NotBracketGenerating : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnknownBuiltin : public Error {
 public:
  using Error::Error;
};

class SchemaViolation : public Error {
 public:
  using Error::Error;
};

/// Dense three-index table of scalars, indexed (i, j, k).
class Tensor3 {
 public:
  Tensor3() : d1_(0), d2_(0), d3_(0) {}
  Tensor3(int d1, int d2, int d3)
      : d1_(d1), d2_(d2), d3_(d3),
        v_(static_cast<size_t>(d1) * d2 * d3, 0.0) {}
  explicit Tensor3(int d) : Tensor3(d, d, d) {}

  double& operator()(int i, int j, int k) {
    return v_[(static_cast<size_t>(i) * d2_ + j) * d3_ + k];
  }
  double operator()(int i, int j, int k) const {
    return v_[(static_cast<size_t>(i) * d2_ + j) * d3_ + k];
  }

  int dim1() const { return d1_; }
  int dim2() const { return d2_; }
  int dim3() const { return d3_; }

 private:
  int d1_, d2_, d3_;
  std::vector<double> v_;
};

/// Dense four-index table, indexed (i, j, l, k).
class Tensor4 {
 public:
  Tensor4() : d_(0) {}
  explicit Tensor4(int d)
      : d_(d), v_(static_cast<size_t>(d) * d * d * d, 0.0) {}

  double& operator()(int i, int j, int l, int k) {
    return v_[((static_cast<size_t>(i) * d_ + j) * d_ + l) * d_ + k];
  }
  double operator()(int i, int j, int l, int k) const {
    return v_[((static_cast<size_t>(i) * d_ + j) * d_ + l) * d_ + k];
  }

  int dim() const { return d_; }

 private:
  int d_;
  std::vector<double> v_;
};

/// Pass/fail outcome of an algebraic check, carrying the worst residual
/// and the frame indices that achieve it. Unused witness slots stay -1.
struct Diagnostic {
  bool pass = true;
  double residual = 0.0;
  std::array<int, 4> witness = {-1, -1, -1, -1};
  double tolerance = kDefaultTol;

  void update(double r, int a = -1, int b = -1, int c = -1, int d = -1) {
    double ar = r < 0 ? -r : r;
    if (ar > residual) {
      residual = ar;
      witness = {a, b, c, d};
    }
  }
  void finalize(double tol) {
    tolerance = tol;
    pass = residual <= tol;
  }
};

}  // namespace subgap

#endif
