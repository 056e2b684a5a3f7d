#ifndef SUBGAP_REPORT_HPP
#define SUBGAP_REPORT_HPP

#include <json.hpp>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "subgap/connection.hpp"
#include "subgap/lichnerowicz.hpp"
#include "subgap/lie_algebra.hpp"
#include "subgap/peter_weyl.hpp"

namespace subgap {

struct SpectrumRequest {
  bool enabled = false;
  int cutoff = 3;
};

struct SweepRequest {
  std::string parameter = "c";
  double lo = 0.0;
  double hi = 0.5;
  double tol = 1e-10;
};

/// Everything needed to run the certification pipeline once.
struct AnalysisInput {
  std::string name;
  LieAlgebra algebra;
  std::vector<std::string> horizontal;
  std::vector<std::string> vertical;
  double epsilon = 1.0;
  ConnectionStrategy vstrategy = ConnectionStrategy::bott_vertical;
  std::optional<Tensor3> user_gamma_v;
  double tolerance = kDefaultTol;
  std::optional<Group> spectrum_group;
  SpectrumRequest spectrum;
  // horizontal fields as coefficient vectors in the group's rep basis;
  // empty means the frame labels coincide with that basis
  std::vector<Eigen::VectorXd> spectrum_fields;
  std::optional<SweepRequest> sweep;
  bool conformal = false;  // closed-form conformal family on su(2)
  double param_c = 0.0;    // family parameter, where the fixture has one
  std::vector<std::string> discrepancy_notes;
};

/// Machine-readable certification report (ordered so output is
/// byte-deterministic).
struct Report {
  nlohmann::ordered_json data;

  std::string machine_text() const;  // 17-significant-digit serialization
  std::string human_text() const;
};

/// Reads and validates an analysis input file (JSON, schema in README).
AnalysisInput parse_spec(const std::string& path);
AnalysisInput parse_spec_json(const nlohmann::ordered_json& j);

/// Serializes an input back to its file schema; parse of the result is the
/// identity.
nlohmann::ordered_json serialize(const AnalysisInput& input);

/// Runs lie_core -> connections -> geometry -> gap_constants ->
/// lichnerowicz (-> peter_weyl if requested). Mathematical failures are
/// recorded in the report, never thrown; dependent stages are skipped with
/// an explanation.
Report analyze(const AnalysisInput& input);

/// Named fixture by name; family fixtures take the parameter c.
AnalysisInput builtin_input(const std::string& name, double c);
AnalysisInput builtin_input(const std::string& name);

/// All shipped fixtures at their default parameters, in a stable order.
std::vector<AnalysisInput> builtin_examples();

/// Runs every golden fixture against its stored expected values.
/// Prints one line per check; returns false on any mismatch.
bool verify_goldens(std::ostream& out);

/// Parametric family bound for sweeps: rebuilds the pipeline at each c and
/// clamps inapplicable outcomes to nonpositive values.
double family_bound(const std::string& builtin_name, double c);

}  // namespace subgap

#endif
