// Acceptance gate: one line per criterion, exit 0 only if all pass.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "subgap/report.hpp"

using namespace subgap;

namespace {

int failures = 0;

void criterion(int number, const std::string& text,
               const std::function<bool()>& body) {
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number,
              text.c_str(), error.empty() ? "" : " -- exception: ",
              error.c_str());
  if (!ok) ++failures;
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

double su2xsu2_closed_form(double c) {
  double s = std::sqrt(33.0 + 25.0 * c * c) - 6.0 * std::abs(c);
  return 2.0 / 121.0 * s * s - 2.0 * c * c;
}

GapConstants pipeline_constants(const LieAlgebra& alg, const Splitting& split,
                                ConnectionStrategy strategy) {
  Metric metric{1.0};
  ConnectionTable conn = build_connection(alg, metric, split, strategy);
  GeometryTensors gt = structure_tensors(alg, metric, split, conn);
  return extract_constants(gt, alg, metric, split);
}

}  // namespace

int main() {
  criterion(1,
            "so4 fixture: checks, Ricci block, constants (1/2,2,2,0,0), "
            "bound 2/15, recorded discrepancy",
            [] {
              LieAlgebra alg = builtins::so4();
              Splitting split{{0, 1, 2, 3}, {4, 5}};
              Metric metric{1.0};
              bool checks =
                  check_assumption_A(alg, metric, split).pass &&
                  check_assumption_B(alg, split).pass &&
                  check_assumption_C(alg, metric, split).pass &&
                  check_totally_geodesic(alg, metric, split).pass &&
                  !check_v_integrable(alg, split).pass;
              ConnectionTable conn = build_connection(
                  alg, metric, split, ConnectionStrategy::bott_vertical);
              GeometryTensors gt =
                  structure_tensors(alg, metric, split, conn);
              const double diag[4] = {0.5, 1.5, 1.5, 2.0};
              bool ric_ok = true;
              for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                  ric_ok = ric_ok && near(gt.ric(split.h[a], split.h[b]),
                                          a == b ? diag[a] : 0.0, 1e-9);
              GapConstants k = extract_constants(gt, alg, metric, split);
              bool consts_ok = near(k.rho1, 0.5, 1e-9) &&
                               near(k.rho2, 2.0, 1e-9) &&
                               near(k.kappa1, 2.0, 1e-9) &&
                               near(k.kappa2, 0.0, 1e-9) &&
                               near(k.kappa3, 0.0, 1e-9);
              // independent substitution oracle: kappa2 = kappa3 = 0
              // collapses the estimate to rho1 rho2 / ((n-1)/n rho2 + 3 k1)
              double oracle =
                  (0.5 * 2.0) / ((3.0 / 4.0) * 2.0 + 3.0 * 2.0);
              BoundResult b = evaluate_bound(k, BoundVariant::general);
              bool bound_ok = near(b.value, 2.0 / 15.0, 1e-12) &&
                              near(b.value, oracle, 1e-12);
              Report rep = analyze(builtin_input("so4_example"));
              bool note_ok =
                  rep.data.contains("discrepancy_notes") &&
                  rep.data["discrepancy_notes"][0].get<std::string>().find(
                      "8/51") != std::string::npos;
              return checks && ric_ok && consts_ok && bound_ok && note_ok;
            });

  criterion(2,
            "su2xsu2 fixture: closed form for c in {0,0.05,0.1,0.2}, bott "
            "rejected, sweep threshold 1/(2 sqrt 2)",
            [] {
              bool ok = true;
              for (double c : {0.0, 0.05, 0.1, 0.2}) {
                GapConstants k = pipeline_constants(
                    builtins::su2xsu2(c), {{0, 1, 2}, {3, 4, 5}},
                    ConnectionStrategy::frame_flat);
                double v = evaluate_bound(k, BoundVariant::general).value;
                ok = ok && near(v, su2xsu2_closed_form(c), 1e-9);
              }
              LieAlgebra alg = builtins::su2xsu2(0.1);
              Splitting split{{0, 1, 2}, {3, 4, 5}};
              ok = ok &&
                   !check_totally_geodesic(alg, Metric{1.0}, split).pass;
              bool rejected = false;
              try {
                build_connection(alg, Metric{1.0}, split,
                                 ConnectionStrategy::bott_vertical);
              } catch (const IncompatibleVerticalConnection&) {
                rejected = true;
              }
              SweepResult sweep = sweep_threshold(
                  [](double c) { return family_bound("su2xsu2_example", c); },
                  0.0, 0.5);
              ok = ok && rejected &&
                   near(sweep.threshold, 1.0 / (2.0 * std::sqrt(2.0)), 1e-8);
              return ok;
            });

  criterion(3, "hopf sharpness: bound 1/2 equals the exact first gap", [] {
    Report rep = analyze(builtin_input("su2_hopf"));
    double bound = rep.data["bounds"]["certified"].get<double>();
    double gap = rep.data["spectrum"]["first_gap"].get<double>();
    return near(bound, 0.5, 1e-9) && near(gap, 0.5, 1e-9) &&
           std::abs(bound - gap) < 1e-9;
  });

  criterion(4, "riemannian limit: bound 3/4 equals the exact first gap", [] {
    Report rep = analyze(builtin_input("su2_riemannian"));
    double bound = rep.data["bounds"]["certified"].get<double>();
    double gap = rep.data["spectrum"]["first_gap"].get<double>();
    return near(bound, 0.75, 1e-9) && near(gap, 0.75, 1e-9) &&
           std::abs(bound - gap) < 1e-9;
  });

  criterion(5,
            "soundness: certified bound <= exact gap on every builtin; so4 "
            "gap >= 2/15",
            [] {
              bool ok = true;
              bool compared = false;
              for (const AnalysisInput& in : builtin_examples()) {
                Report rep = analyze(in);
                if (!rep.data.contains("bounds") ||
                    !rep.data["bounds"].contains("certified") ||
                    !rep.data.contains("spectrum") ||
                    !rep.data["spectrum"].contains("first_gap"))
                  continue;
                compared = true;
                double bound = rep.data["bounds"]["certified"].get<double>();
                double gap = rep.data["spectrum"]["first_gap"].get<double>();
                ok = ok && bound <= gap + 1e-9;
              }
              SpectrumReport so4 = first_gap(
                  Group::so4,
                  {Eigen::VectorXd::Unit(6, 0), Eigen::VectorXd::Unit(6, 1),
                   Eigen::VectorXd::Unit(6, 2), Eigen::VectorXd::Unit(6, 3)},
                  3);
              return ok && compared && so4.first_gap >= 2.0 / 15.0 - 1e-9;
            });

  criterion(6,
            "property suites: torsion lemma, Ricci structure, Bianchi with "
            "torsion, scaling invariance, rho2 vs step 2",
            [] {
              struct Case {
                LieAlgebra alg;
                Splitting split;
                ConnectionStrategy strategy;
              };
              std::vector<Case> cases = {
                  {builtins::so4(), {{0, 1, 2, 3}, {4, 5}},
                   ConnectionStrategy::bott_vertical},
                  {builtins::su2(), {{0, 1}, {2}},
                   ConnectionStrategy::bott_vertical},
                  {builtins::su2xsu2(0.2), {{0, 1, 2}, {3, 4, 5}},
                   ConnectionStrategy::frame_flat}};
              bool ok = true;
              for (const Case& cs : cases) {
                Metric metric{1.0};
                if (!check_assumption_A(cs.alg, metric, cs.split).pass ||
                    !check_assumption_B(cs.alg, cs.split).pass ||
                    !check_assumption_C(cs.alg, metric, cs.split).pass)
                  return false;
                ConnectionTable conn = build_connection(
                    cs.alg, metric, cs.split, cs.strategy);
                GeometryTensors gt =
                    structure_tensors(cs.alg, metric, cs.split, conn);
                const int d = cs.alg.dim;
                // torsion lemma items
                for (int i : cs.split.h)
                  for (int j = 0; j < d; ++j)
                    for (int k : cs.split.h)
                      ok = ok && std::abs(gt.t(i, j, k)) < 1e-9;
                for (int i : cs.split.h)
                  for (int j : cs.split.h)
                    for (int k = 0; k < d; ++k)
                      ok = ok && near(gt.t(i, j, k), -gt.curv(i, j, k), 1e-9);
                for (int i : cs.split.v)
                  for (int j : cs.split.v)
                    for (int k : cs.split.h)
                      ok = ok &&
                           near(gt.t(i, j, k), -gt.cocurv(i, j, k), 1e-9);
                for (int s : cs.split.h)
                  for (int b = 0; b < d; ++b)
                    ok = ok && std::abs(gt.b_map(s, b)) < 1e-9;
                for (int i : cs.split.h) {
                  double tr = 0.0;
                  for (int j = 0; j < d; ++j) tr += gt.t(i, j, j);
                  ok = ok && std::abs(tr) < 1e-9;
                }
                // Ricci symmetry and vertical columns
                for (int a : cs.split.h)
                  for (int b : cs.split.h)
                    ok = ok && near(gt.ric(a, b), gt.ric(b, a), 1e-9);
                for (int a = 0; a < d; ++a)
                  for (int b : cs.split.v)
                    ok = ok && std::abs(gt.ric(a, b)) < 1e-9;
                // first Bianchi identity with torsion
                auto term = [&](int i, int j, int l, int k) {
                  double acc = gt.r(i, j, l, k) - gt.nabla_t(i, j, l, k);
                  for (int s = 0; s < d; ++s)
                    acc -= gt.t(i, j, s) * gt.t(s, l, k);
                  return acc;
                };
                for (int i = 0; i < d; ++i)
                  for (int j = 0; j < d; ++j)
                    for (int l = 0; l < d; ++l)
                      for (int k = 0; k < d; ++k)
                        ok = ok && std::abs(term(i, j, l, k) +
                                            term(j, l, i, k) +
                                            term(l, i, j, k)) < 1e-9;
                // scaling invariance of the bound
                GapConstants base =
                    extract_constants(gt, cs.alg, metric, cs.split);
                double v0 = evaluate_bound(base, BoundVariant::general).value;
                for (double eps : {0.5, 2.0, 10.0}) {
                  GapConstants scaled = rescale_constants(base, eps);
                  ok = ok &&
                       near(evaluate_bound(scaled, BoundVariant::general)
                                .value,
                            v0, 1e-9);
                }
              }
              // rho2 > 0 iff step 2, on 50 randomized so(4) subsets
              LieAlgebra so4 = builtins::so4();
              std::mt19937 rng(424242);
              for (int trial = 0; trial < 50; ++trial) {
                std::vector<int> perm = {0, 1, 2, 3, 4, 5};
                std::shuffle(perm.begin(), perm.end(), rng);
                int n = 2 + static_cast<int>(rng() % 4);
                Splitting split;
                split.h.assign(perm.begin(), perm.begin() + n);
                split.v.assign(perm.begin() + n, perm.end());
                StepResult step = bracket_generating_step(so4, split);
                Eigen::MatrixXd q =
                    vertical_bracket_form(so4, Metric{1.0}, split);
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(q);
                bool rho2_pos = eig.eigenvalues()(0) > kDefaultTol;
                ok = ok &&
                     ((step.generating && step.step <= 2) == rho2_pos);
              }
              return ok;
            });

  criterion(7,
            "conformal family: value 1/2 at c = 0, nontriviality root "
            "inside (0.17, 0.175), recorded discrepancy",
            [] {
              bool ok = near(conformal_su2_bound(0.0).value, 0.5, 1e-12);
              SweepResult sweep = sweep_threshold(
                  [](double c) { return family_bound("su2_conformal", c); },
                  0.0, 0.5, 1e-6);
              ok = ok && sweep.threshold > 0.17 && sweep.threshold < 0.175;
              double c = sweep.threshold;
              ok = ok && std::abs(std::exp(-6.0 * c) * (1.0 - 2.0 * c) -
                                  8.0 * c * c) < 1e-4;
              Report rep = analyze(builtin_input("su2_conformal"));
              ok = ok && rep.data.contains("discrepancy_notes") &&
                   rep.data["discrepancy_notes"][0]
                           .get<std::string>()
                           .find("1.17139") != std::string::npos;
              return ok;
            });

  if (failures == 0) std::printf("all acceptance criteria passed\n");
  return failures == 0 ? 0 : 1;
}
