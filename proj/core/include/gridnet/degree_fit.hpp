#ifndef GRIDNET_DEGREE_FIT_HPP
#define GRIDNET_DEGREE_FIT_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gridnet/graph.hpp"

namespace gridnet {

/// Empirical survival function P(K >= k) of the node degree sequence over
/// k = k_min..k_max. Isolated nodes are excluded (counted separately), so
/// every survival value is strictly positive and P(K >= k_min) = 1.
struct CumulativeDegreeDistribution {
  std::vector<int> support;
  std::vector<double> survival;
  int excluded_isolated = 0;
};

/// Requires N >= 2 and at least one edge.
CumulativeDegreeDistribution cumulative_distribution(const Snapshot& g);

enum class FitModel { exponential, power_law };

std::string to_string(FitModel model);

/// Least-squares fit in log space: ln P linear in k (exponential,
/// P = a*exp(-rate*k)) or in ln k (power law, P = a*k^-exponent).
struct FitResult {
  FitModel model = FitModel::exponential;
  double amplitude = 0.0;
  double rate_or_exponent = 0.0;
  double sse = 0.0;        // residual sum of squares in log space
  double r_squared = 0.0;
  bool low_confidence = false;  // fewer than 3 support points
};

/// Throws FitError with fewer than 2 support points.
FitResult fit(const CumulativeDegreeDistribution& dist, FitModel model);

enum class DegreeClass { exponential, power_law, inconclusive };

std::string to_string(DegreeClass c);

/// Fits both models and picks the one with the higher r-squared.
/// |delta r^2| < 1e-9 or a degenerate support reports inconclusive.
struct ClassifyResult {
  DegreeClass verdict = DegreeClass::inconclusive;
  std::optional<FitResult> exponential;
  std::optional<FitResult> power_law;
};

ClassifyResult classify(const Snapshot& g);

std::string fit_csv_header();
std::string fit_csv_row(int year, const FitResult& r);
nlohmann::ordered_json fit_to_json(const FitResult& r);

}  // namespace gridnet

#endif
