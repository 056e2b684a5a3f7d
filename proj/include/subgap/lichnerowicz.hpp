#ifndef SUBGAP_LICHNEROWICZ_HPP
#define SUBGAP_LICHNEROWICZ_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "subgap/gap_constants.hpp"
#include "subgap/types.hpp"

namespace subgap {

enum class BoundVariant { general, yang_mills, totally_geodesic, riemannian };

/// A certified lower bound on the spectral gap -lambda_1, together with
/// the positivity margin of the estimate's hypothesis.
struct BoundResult {
  BoundVariant variant = BoundVariant::general;
  double value = 0.0;
  double applicability_margin = 0.0;
  GapConstants inputs;
};

/// Hypothesis expression rho1 rho2 - 4 k2^2 - 3 k1 k3 - 8 k2 sqrt(k1 k3);
/// positive means the general estimate applies.
double applicability_margin(const GapConstants& k);

/// Evaluates the spectral-gap bound for the requested variant.
/// Throws NotApplicable when the hypothesis fails and InfeasibleKappa3 when
/// kappa3 is consumed but no finite kappa3 exists.
BoundResult evaluate_bound(const GapConstants& k, BoundVariant variant);

/// Vertical rescaling (rho1, rho2/e, kappa1/e, kappa2/sqrt(e), kappa3);
/// the bound value is invariant under it.
GapConstants rescale_constants(const GapConstants& k, double epsilon);

/// Scalar inputs for the conformal family on su(2): inf and oscillation of
/// the conformal factor and sup norms of its differential and Laplacian.
struct ConformalNorms {
  double m = 0.0;
  double big_m = 0.0;
  double df_sup = 0.0;
  double lf_sup = 0.0;
};

/// Closed-form bound for the conformally rescaled Hopf structure on su(2).
/// Default norms correspond to the factor c|z1|^2.
BoundResult conformal_su2_bound(
    double c, const std::optional<ConformalNorms>& norms = std::nullopt);

struct SweepResult {
  double threshold = 0.0;  // largest parameter with positive bound
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  std::vector<std::pair<double, double>> samples;  // (parameter, bound)
};

/// Bisects for the largest parameter with a positive certified bound.
/// The callback must already clamp inapplicable outcomes to nonpositive
/// values. Throws NoSignChange if [lo, hi] does not bracket a root.
SweepResult sweep_threshold(const std::function<double(double)>& bound,
                            double lo, double hi, double tol = 1e-10,
                            int sample_count = 21);

/// Bound with NotApplicable / NotStepTwo clamped to a nonpositive value,
/// for use in sweeps.
double clamped_bound(const GapConstants& k, BoundVariant variant);

}  // namespace subgap

#endif
