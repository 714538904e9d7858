#pragma once

// Experiment harness: covolumes, counting sweeps against main terms,
// error-exponent regression and the transform property suite.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hlp/orbit.hpp"

namespace hlp {

enum class GroupKind { Modular, Hilbert };
enum class ExperimentKind { Hypercube, Box, Strip, TransformSuite };
// Lower box edge for box sweeps: U = 0 or U = V/2.
enum class BoxMode { Zero, Half };

struct ExperimentConfig {
  GroupKind group = GroupKind::Modular;
  Int m = 5;
  std::vector<Point> z{{0.0, 1.0}};
  ExperimentKind kind = ExperimentKind::Hypercube;
  double grid_min = 1.0;
  double grid_max = 1.0;
  double grid_step = 1.0;
  // 0-based coordinates; A and B are aligned with E
  std::vector<int> strip_E;
  std::vector<double> strip_A;
  std::vector<double> strip_B;
  BoxMode box_mode = BoxMode::Zero;
  std::optional<double> qhat;
  double tauhat = 0.0;
  std::string out_path;
  int threads = 1;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

FieldSpec field_of(const ExperimentConfig& cfg);
MultiPoint point_of(const ExperimentConfig& cfg);
StripSpec strip_of(const ExperimentConfig& cfg, double T);
// grid_min, grid_min + step, ... <= grid_max; EmptyGrid when there is none.
std::vector<double> grid_values(const ExperimentConfig& cfg);
// Throws the matching validation error for inconsistent settings.
void validate(const ExperimentConfig& cfg);

// Volume of Gamma \ H^d: pi/3 for PSL2(Z), 8 pi^2 zeta_F(-1) for PSL2(O_F)
// with zeta_F(-1) = B_{2,chi}/24 from the generalized Bernoulli number.
double covolume(const FieldSpec& field);

struct CountReport {
  double T = 0.0;
  std::uint64_t count = 0;
  double main_term = 0.0;
  double ratio = 0.0;
  double excess = 0.0;
  double n_of_z = 1.0;
  std::uint64_t near_boundary = 0;
  double wall_s = 0.0;
};

struct ExperimentSummary {
  int e = 0;  // size of E
  int q = 0;  // size of Q
  double qhat = 0.0;
  double tauhat = 0.0;
  bool large_gap = true;
  // predicted growth rate of |excess| in T
  double predicted_exponent = 0.0;
  std::string box_mode;
};

ExperimentSummary summarize(const ExperimentConfig& cfg);

// One row per grid value. Each finished row is passed to sink first, so a
// later failure leaves the earlier rows written.
std::vector<CountReport> run_count_experiment(const ExperimentConfig& cfg,
                                              const std::function<void(const CountReport&)>& sink = {});

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  bool sign_changes = false;
  int rows = 0;
};

// Least squares of log|excess| against T over rows with nonzero excess; needs
// at least 4 such rows (DegenerateFit otherwise).
FitResult fit_error_exponent(const std::vector<CountReport>& reports);

struct SuiteCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Numerical properties of the Selberg transform and eta.
std::vector<SuiteCheck> run_transform_suite();

}  // namespace hlp
