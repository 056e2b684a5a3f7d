#include "subgap/lichnerowicz.hpp"

#include <cmath>
#include <string>

namespace subgap {

namespace {

double ratio_term(const GapConstants& k) {
  return (static_cast<double>(k.n) - 1.0) / static_cast<double>(k.n);
}

}  // namespace

double applicability_margin(const GapConstants& k) {
  return k.rho1 * k.rho2 - 4.0 * k.kappa2 * k.kappa2 -
         3.0 * k.kappa1 * k.kappa3 -
         8.0 * k.kappa2 * std::sqrt(k.kappa1 * k.kappa3);
}

BoundResult evaluate_bound(const GapConstants& k, BoundVariant variant) {
  BoundResult res;
  res.variant = variant;
  res.inputs = k;

  if (variant == BoundVariant::riemannian) {
    if (k.m != 0)
      throw NotApplicable("riemannian variant requires an empty vertical part",
                          0.0);
    if (k.n < 2)
      throw NotApplicable("riemannian variant requires rank >= 2", 0.0);
    res.applicability_margin = k.rho1;
    if (k.rho1 <= 0.0)
      throw NotApplicable("nonpositive Ricci lower bound", k.rho1);
    res.value = (static_cast<double>(k.n) / (k.n - 1.0)) * k.rho1;
    return res;
  }

  if (k.rho2 <= 0.0)
    throw NotApplicable("rho2 must be positive (step-2 condition)", k.rho2);
  const double denom = ratio_term(k) * k.rho2 + 3.0 * k.kappa1;

  switch (variant) {
    case BoundVariant::yang_mills: {
      res.applicability_margin = k.rho1 * k.rho2;
      if (res.applicability_margin <= 0.0)
        throw NotApplicable("rho1 rho2 must be positive",
                            res.applicability_margin);
      res.value = k.rho1 * k.rho2 / denom;
      return res;
    }
    case BoundVariant::totally_geodesic: {
      double margin = k.rho1 * k.rho2 - 4.0 * k.kappa2 * k.kappa2;
      res.applicability_margin = margin;
      if (margin <= 0.0)
        throw NotApplicable("rho1 rho2 - 4 kappa2^2 must be positive", margin);
      double num = margin;
      double t = 4.0 * k.kappa2 * std::sqrt(k.kappa1) / denom;
      if (t == 0.0) {
        res.value = num / denom;
        return res;
      }
      double s = std::sqrt(num / denom + t * t) - t;
      res.value = s * s;
      return res;
    }
    case BoundVariant::general:
    default: {
      if (!k.feasible_kappa3)
        throw InfeasibleKappa3(
            "no finite kappa3 bounds the W-form: its symmetrized part has "
            "nonzero entries outside the vertical block (worst " +
            std::to_string(k.w_offblock_norm) + ")");
      double margin = applicability_margin(k);
      res.applicability_margin = margin;
      if (margin <= 0.0)
        throw NotApplicable("positivity hypothesis fails", margin);
      double num = k.rho1 * k.rho2 - 4.0 * k.kappa2 * k.kappa2 +
                   ratio_term(k) * k.rho2 * k.kappa3;
      double t = 4.0 * k.kappa2 * std::sqrt(k.kappa1) / denom;
      if (t == 0.0 && k.kappa3 == 0.0) {
        res.value = num / denom;  // agrees exactly with yang_mills
        return res;
      }
      double s = std::sqrt(num / denom + t * t) - t;
      res.value = s * s - k.kappa3;
      return res;
    }
  }
}

GapConstants rescale_constants(const GapConstants& k, double epsilon) {
  if (epsilon <= 0.0) throw SchemaViolation("epsilon must be positive");
  GapConstants out = k;
  out.rho2 = k.rho2 / epsilon;
  out.kappa1 = k.kappa1 / epsilon;
  out.kappa2 = k.kappa2 / std::sqrt(epsilon);
  // diagnostics follow the scalars they generated
  if (out.q_form.size() > 0) out.q_form /= epsilon;
  out.s_gram /= epsilon;
  if (out.b_mixed.size() > 0) out.b_mixed /= std::sqrt(epsilon);
  return out;
}

BoundResult conformal_su2_bound(double c,
                                const std::optional<ConformalNorms>& norms) {
  if (c < 0.0) throw SchemaViolation("conformal parameter must be >= 0");
  ConformalNorms nm;
  if (norms) {
    nm = *norms;
  } else {
    nm.m = 0.0;
    nm.big_m = c;
    nm.df_sup = 2.0 * c;
    nm.lf_sup = 2.0 * c;
  }
  BoundResult res;
  res.variant = BoundVariant::totally_geodesic;
  double denom = std::exp(-4.0 * nm.big_m) + 3.0;
  double num = 2.0 * std::exp(-6.0 * nm.big_m) * (1.0 - nm.lf_sup) -
               4.0 * nm.df_sup * nm.df_sup;
  res.applicability_margin = num;
  if (num <= 0.0)
    throw NotApplicable("conformal bound is trivial for these norms", num);
  double t = 4.0 * nm.df_sup / denom;
  double s = std::sqrt(num / denom + t * t) - t;
  res.value = std::exp(-2.0 * nm.m) * s * s;
  return res;
}

SweepResult sweep_threshold(const std::function<double(double)>& bound,
                            double lo, double hi, double tol,
                            int sample_count) {
  double flo = bound(lo);
  double fhi = bound(hi);
  if (!(flo > 0.0 && fhi <= 0.0))
    throw NoSignChange("bound(lo) > 0 >= bound(hi) required for bisection");

  SweepResult res;
  if (sample_count > 1) {
    for (int i = 0; i < sample_count; ++i) {
      double x = lo + (hi - lo) * i / (sample_count - 1.0);
      res.samples.emplace_back(x, bound(x));
    }
  }

  double a = lo, b = hi;
  for (int it = 0; it < 200 && (b - a) > tol; ++it) {
    double mid = 0.5 * (a + b);
    if (bound(mid) > 0.0)
      a = mid;
    else
      b = mid;
  }
  res.bracket_lo = a;
  res.bracket_hi = b;
  res.threshold = 0.5 * (a + b);
  return res;
}

double clamped_bound(const GapConstants& k, BoundVariant variant) {
  try {
    return evaluate_bound(k, variant).value;
  } catch (const NotApplicable& e) {
    return e.margin < 0.0 ? e.margin : 0.0;
  } catch (const InfeasibleKappa3&) {
    return -1.0;
  }
}

}  // namespace subgap
