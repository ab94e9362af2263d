#include "gridnet/degree_fit.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

#include "gridnet/errors.hpp"
#include "gridnet/generators.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace gridnet;

TEST_CASE("cumulative distribution by direct count") {
  SUBCASE("star S4: degrees 3,1,1,1") {
    const auto d = cumulative_distribution(make_star(4));
    CHECK(d.support == std::vector<int>{1, 2, 3});
    CHECK(d.survival[0] == doctest::Approx(1.0));
    CHECK(d.survival[1] == doctest::Approx(0.25));
    CHECK(d.survival[2] == doctest::Approx(0.25));
  }
  SUBCASE("K4 collapses to a single point") {
    const auto d = cumulative_distribution(make_complete(4));
    CHECK(d.support == std::vector<int>{3});
    CHECK(d.survival == std::vector<double>{1.0});
  }
  SUBCASE("path of three") {
    const auto d = cumulative_distribution(make_path(3));
    CHECK(d.support == std::vector<int>{1, 2});
    CHECK(d.survival[0] == doctest::Approx(1.0));
    CHECK(d.survival[1] == doctest::Approx(1.0 / 3.0));
  }
  SUBCASE("isolated nodes are excluded and counted") {
    const auto g = testing::graph(5, {{0, 1}, {1, 2}});
    const auto d = cumulative_distribution(g);
    CHECK(d.excluded_isolated == 2);
    CHECK(d.survival[0] == doctest::Approx(1.0));
  }
  SUBCASE("degenerate graphs are rejected") {
    CHECK_THROWS_AS(cumulative_distribution(testing::graph(3, {})),
                    UndefinedMetricError);
  }
}

TEST_CASE("survival function is non-increasing and positive") {
  std::mt19937_64 rng(1001);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> size(2, 40);
    const auto g = oracle::random_graph(size(rng), 0.2, rng);
    if (g.edge_count() == 0) continue;
    const auto d = cumulative_distribution(g);
    CHECK(d.survival.front() == doctest::Approx(1.0));
    for (std::size_t i = 0; i < d.survival.size(); ++i) {
      CHECK(d.survival[i] > 0.0);
      if (i) CHECK(d.survival[i] <= d.survival[i - 1]);
    }
  }
}

namespace {

CumulativeDegreeDistribution synthetic_curve(double (*f)(int)) {
  CumulativeDegreeDistribution d;
  for (int k = 1; k <= 10; ++k) {
    d.support.push_back(k);
    d.survival.push_back(f(k));
  }
  return d;
}

}  // namespace

TEST_CASE("exact exponential data recovers its parameters") {
  const auto d = synthetic_curve([](int k) { return std::exp(-0.5 * k); });
  const auto r = fit(d, FitModel::exponential);
  CHECK(r.rate_or_exponent == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(r.amplitude == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.sse < 1e-9);
  CHECK(r.r_squared == doctest::Approx(1.0));
  CHECK_FALSE(r.low_confidence);
}

TEST_CASE("exact power-law data recovers its parameters") {
  const auto d = synthetic_curve([](int k) { return std::pow(k, -2.0); });
  const auto r = fit(d, FitModel::power_law);
  CHECK(r.rate_or_exponent == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(r.amplitude == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.sse < 1e-9);
}

TEST_CASE("fit degenerate support") {
  CumulativeDegreeDistribution one;
  one.support = {2};
  one.survival = {1.0};
  CHECK_THROWS_AS(fit(one, FitModel::exponential), FitError);

  CumulativeDegreeDistribution two;
  two.support = {1, 2};
  two.survival = {1.0, 0.5};
  const auto r = fit(two, FitModel::exponential);
  CHECK(r.low_confidence);  // fit runs, flagged
}

TEST_CASE("normal equations hold on accepted fits") {
  std::mt19937_64 rng(2023);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = oracle::random_graph(30, 0.2, rng);
    if (g.edge_count() == 0) continue;
    const auto d = cumulative_distribution(g);
    if (d.support.size() < 2) continue;
    for (auto model : {FitModel::exponential, FitModel::power_law}) {
      const auto r = fit(d, model);
      // Residuals of the log-space regression are orthogonal to the
      // design: sum(resid) = 0 and sum(resid * x) = 0.
      double s0 = 0.0, s1 = 0.0;
      const double ln_a = std::log(r.amplitude);
      for (std::size_t i = 0; i < d.support.size(); ++i) {
        const double x = model == FitModel::exponential
                             ? static_cast<double>(d.support[i])
                             : std::log(static_cast<double>(d.support[i]));
        const double resid =
            std::log(d.survival[i]) - (ln_a - r.rate_or_exponent * x);
        s0 += resid;
        s1 += resid * x;
      }
      CHECK(std::abs(s0) < 1e-9);
      CHECK(std::abs(s1) < 1e-9);
    }
  }
}

TEST_CASE("classification of generated graphs") {
  SUBCASE("preferential attachment looks like a power law") {
    const auto g = make_preferential_attachment(2000, 2, 12345);
    const auto c = classify(g);
    CHECK(c.verdict == DegreeClass::power_law);
    REQUIRE(c.power_law);
    REQUIRE(c.exponential);
    CHECK(c.power_law->r_squared > c.exponential->r_squared);
  }
  SUBCASE("sparse Erdos-Renyi looks exponential") {
    const auto g = make_erdos_renyi(2000, 2.6 / 1999.0, 512);
    const auto c = classify(g);
    CHECK(c.verdict == DegreeClass::exponential);
  }
  SUBCASE("a regular ring is inconclusive") {
    const auto c = classify(make_ring(50, 4));
    CHECK(c.verdict == DegreeClass::inconclusive);
    CHECK_FALSE(c.exponential.has_value());
  }
}

TEST_CASE("classification is invariant under node relabeling") {
  const auto g = make_preferential_attachment(300, 2, 777);
  const auto base = classify(g);

  std::mt19937_64 rng(8);
  std::vector<int> perm(static_cast<std::size_t>(g.node_count()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<EdgeIx> edges;
  for (const auto& e : g.edges()) {
    const int a = perm[static_cast<std::size_t>(e.lo)];
    const int b = perm[static_cast<std::size_t>(e.hi)];
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  const auto h = testing::graph(g.node_count(), std::move(edges));
  const auto relabeled = classify(h);
  CHECK(relabeled.verdict == base.verdict);
  CHECK(relabeled.power_law->sse ==
        doctest::Approx(base.power_law->sse).epsilon(1e-12));
}

TEST_CASE("fit CSV row format") {
  const auto d = synthetic_curve([](int k) { return std::exp(-0.5 * k); });
  const auto r = fit(d, FitModel::exponential);
  const auto row = fit_csv_row(2019, r);
  CHECK(row.substr(0, 17) == "2019,exponential,");
  CHECK(fit_csv_header() ==
        "year,model,amplitude,rate_or_exponent,sse,r_squared");
}
