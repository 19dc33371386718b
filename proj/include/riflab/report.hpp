#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "riflab/json_io.hpp"
#include "riflab/norms.hpp"

namespace riflab {

inline constexpr int kReportSchema = 1;
const char* version();

struct AnalyzeConfig {
  std::uint64_t seed = 42;
  /// Relative tolerance of the H^1 quadrature ladder.
  double tol = 1e-4;
  /// Angles of the singularity cross-check scan.
  int grid = 4096;
  /// Taylor order for the Dirichlet tails.
  int max_order = 256;
  std::vector<double> alphas{0.0, 0.25, 0.5, 0.75, 1.0};
  bool h1 = true;
  int agler_samples = 1000;
  Exec exec = Exec::parallel;
};

struct FitSummary {
  Axis axis = Axis::z1;
  Complex tau1, tau2;
  int samples = 0;
  double slope = 0.0;
  double slope_stderr = 0.0;
  double slope_plus = 0.0;
  double slope_minus = 0.0;
  std::optional<Rational> K;
};

struct DirichletSummary {
  double alpha = 0.0;
  int N = 0;
  double partial_sum = 0.0;
  double tail_exponent = 0.0;
  Membership verdict = Membership::inconclusive;
  bool theorem_override = false;
};

struct AglerSummary {
  int samples = 0;
  double max_abs = 0.0;
  double mean_abs = 0.0;
};

struct LocalDirichletSummary {
  Complex z1, z2;
  double boundary = 0.0;
  double kernel = 0.0;
};

struct AnalysisReport {
  std::string tool_version;
  std::string source;
  PolyInput input;
  AnalyzeConfig config;
  std::vector<SingularPoint> singularities;
  std::vector<FitSummary> fits;
  double K1 = 0.0, K2 = 0.0;
  std::optional<Rational> K1_rational, K2_rational;
  double hp_threshold_1 = 0.0, hp_threshold_2 = 0.0;
  MembershipReport membership;
  std::optional<H1Check> h1;
  std::vector<DirichletSummary> dirichlet;
  std::optional<AglerSummary> agler;
  std::optional<LocalDirichletSummary> local_dirichlet;
};

/// Runs the contact, membership, H^1 and Dirichlet analyses; with Agler
/// vectors also the identity check and the local Dirichlet cross-form at 0.
AnalysisReport analyze(const PolyInput& in, const std::string& source, const std::optional<AglerVectors>& agler,
                       const AnalyzeConfig& cfg = {});

Json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const Json& j);

Json to_json(const SingularPoint& s);
Json to_json(const ContactReport& c);
Json to_json(const QuadratureResult& q);
Json to_json(const MembershipReport& m);
Json to_json(const DirichletTail& t, bool include_annular = false);

}  // namespace riflab
