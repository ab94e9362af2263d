#include "gridnet/degree_fit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "gridnet/errors.hpp"

namespace gridnet {

CumulativeDegreeDistribution cumulative_distribution(const Snapshot& g) {
  if (g.node_count() < 2 || g.edge_count() < 1)
    throw UndefinedMetricError(
        "degree distribution undefined for a degenerate graph");

  CumulativeDegreeDistribution dist;
  std::vector<int> degrees;
  degrees.reserve(static_cast<std::size_t>(g.node_count()));
  for (int i = 0; i < g.node_count(); ++i) {
    const int k = g.degree(i);
    if (k == 0) {
      ++dist.excluded_isolated;
      continue;
    }
    degrees.push_back(k);
  }
  const auto [lo, hi] = std::minmax_element(degrees.begin(), degrees.end());
  const int k_min = *lo;
  const int k_max = *hi;
  const double total = static_cast<double>(degrees.size());
  for (int k = k_min; k <= k_max; ++k) {
    const long long at_least =
        std::count_if(degrees.begin(), degrees.end(),
                      [k](int d) { return d >= k; });
    dist.support.push_back(k);
    dist.survival.push_back(static_cast<double>(at_least) / total);
  }
  return dist;
}

std::string to_string(FitModel model) {
  return model == FitModel::exponential ? "exponential" : "power_law";
}

std::string to_string(DegreeClass c) {
  switch (c) {
    case DegreeClass::exponential: return "exponential";
    case DegreeClass::power_law: return "power_law";
    default: return "inconclusive";
  }
}

FitResult fit(const CumulativeDegreeDistribution& dist, FitModel model) {
  const std::size_t n = dist.support.size();
  if (n < 2)
    throw FitError("fit impossible: " + std::to_string(n) +
                   " support point(s), need at least 2");

  // Linear regression of y = ln P on x = k (exponential) or ln k (power).
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double k = static_cast<double>(dist.support[i]);
    xs[i] = model == FitModel::exponential ? k : std::log(k);
    ys[i] = std::log(dist.survival[i]);
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;

  FitResult r;
  r.model = model;
  r.amplitude = std::exp(intercept);
  r.rate_or_exponent = -slope;
  r.sse = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double resid = ys[i] - (intercept + slope * xs[i]);
    r.sse += resid * resid;
  }
  r.r_squared = syy > 0.0 ? 1.0 - r.sse / syy : 1.0;
  r.low_confidence = n < 3;
  return r;
}

ClassifyResult classify(const Snapshot& g) {
  const auto dist = cumulative_distribution(g);
  ClassifyResult result;
  if (dist.support.size() < 2) return result;  // inconclusive, no fits

  result.exponential = fit(dist, FitModel::exponential);
  result.power_law = fit(dist, FitModel::power_law);
  const double delta =
      result.power_law->r_squared - result.exponential->r_squared;
  if (std::abs(delta) < 1e-9)
    result.verdict = DegreeClass::inconclusive;
  else
    result.verdict =
        delta > 0 ? DegreeClass::power_law : DegreeClass::exponential;
  return result;
}

std::string fit_csv_header() {
  return "year,model,amplitude,rate_or_exponent,sse,r_squared";
}

std::string fit_csv_row(int year, const FitResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%d,%s,%.9g,%.9g,%.9g,%.9g", year,
                to_string(r.model).c_str(), r.amplitude, r.rate_or_exponent,
                r.sse, r.r_squared);
  return buf;
}

nlohmann::ordered_json fit_to_json(const FitResult& r) {
  return nlohmann::ordered_json{
      {"model", to_string(r.model)},
      {"amplitude", r.amplitude},
      {"rate_or_exponent", r.rate_or_exponent},
      {"sse", r.sse},
      {"r_squared", r.r_squared},
      {"low_confidence", r.low_confidence},
  };
}

}  // namespace gridnet
