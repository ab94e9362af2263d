// Acceptance suite: every release criterion runs here at its stated
// tolerance and prints one [criterion N] PASS/FAIL line.

#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gridnet/attack.hpp"
#include "gridnet/degree_fit.hpp"
#include "gridnet/generators.hpp"
#include "gridnet/graph.hpp"
#include "gridnet/metrics.hpp"
#include "gridnet/timeline.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace gridnet;
using testing::run_cli;

namespace {

class Criterion {
public:
  Criterion(int number, std::string title)
      : number_(number), title_(std::move(title)) {}

  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }

  bool finish() const {
    const bool pass = failures_.empty();
    std::printf("[criterion %d] %s  %s (%d checks)\n", number_,
                pass ? "PASS" : "FAIL", title_.c_str(), checks_);
    for (const auto& f : failures_) std::printf("    failed: %s\n", f.c_str());
    std::fflush(stdout);
    return pass;
  }

private:
  int number_;
  std::string title_;
  int checks_ = 0;
  std::vector<std::string> failures_;
};

double seconds_since(
    const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

}  // namespace

TEST_CASE("criterion 1: oracle equivalence on random graphs") {
  Criterion c(1, "efficiency, L, C and all-pairs distances match "
                 "brute-force oracles to 1e-12 on 200 random graphs");
  const auto start = std::chrono::steady_clock::now();

  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> size(2, 7);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  int disconnected_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_graph(size(rng), density(rng), rng);
    const auto want = oracle::relaxation_distances(g);
    const auto got = all_pairs_distances(g);
    bool table_ok = true;
    for (int i = 0; i < g.node_count(); ++i)
      for (int j = 0; j < g.node_count(); ++j) {
        const bool reach = want[i][j] < oracle::kInf;
        if (reach != is_reachable(got.at(i, j)) ||
            (reach && got.at(i, j) != static_cast<int>(want[i][j])))
          table_ok = false;
      }
    c.expect(table_ok, "all-pairs table mismatch on trial " +
                           std::to_string(trial));
    if (connected_components(g).count > 1) ++disconnected_seen;

    if (g.node_count() >= 2)
      c.expect(std::abs(efficiency(g) - oracle::efficiency(g)) <= 1e-12,
               "efficiency mismatch on trial " + std::to_string(trial));
    c.expect(std::abs(clustering(g) - oracle::clustering(g)) <= 1e-12,
             "clustering mismatch on trial " + std::to_string(trial));
    if (g.edge_count() >= 1)
      c.expect(
          std::abs(avg_path_length(g) - oracle::avg_path_length(g)) <= 1e-12,
          "path length mismatch on trial " + std::to_string(trial));
  }
  c.expect(disconnected_seen > 0, "sample contained no disconnected graphs");
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 10.0,
           "runtime " + std::to_string(elapsed) + "s exceeds 10s");
  CHECK(c.finish());
}

TEST_CASE("criterion 2: analytic fixtures are exact") {
  Criterion c(2, "closed-form efficiency, L, C and modularity values to "
                 "1e-12");
  const auto close = [](double a, double b) {
    return std::abs(a - b) <= 1e-12;
  };
  c.expect(close(efficiency(make_complete(4)), 1.0), "efficiency(K4)");
  c.expect(close(efficiency(make_path(3)), 5.0 / 6.0), "efficiency(P3)");
  c.expect(close(efficiency(testing::two_triangles()), 0.4),
           "efficiency(two K3)");
  c.expect(close(avg_path_length(make_ring(5)), 1.5), "L(C5)");
  c.expect(close(clustering(make_complete(3)), 1.0), "C(K3)");
  c.expect(close(clustering(make_path(6)), 0.0), "C(path tree)");
  c.expect(close(clustering(make_star(7)), 0.0), "C(star tree)");
  c.expect(close(modularity(testing::two_triangles(),
                            Partition::from_labels({0, 0, 0, 1, 1, 1})),
                 0.5),
           "Q(two K3, component partition)");
  c.expect(close(modularity(testing::two_triangles(),
                            Partition::single_community(6)),
                 0.0),
           "Q(two K3, single community)");
  CHECK(c.finish());
}

TEST_CASE("criterion 3: damage fixtures") {
  Criterion c(3, "star and path removal fixtures under fixed-N");

  const auto s4 = make_star(4);
  const auto hub = damage(s4, ElementKind::node, std::vector<int>{0});
  c.expect(std::abs(hub.damage - 1.0) <= 1e-12, "S4 hub damage 1.0");
  c.expect(std::abs(hub.disconnection - 1.0) <= 1e-12,
           "S4 hub disconnection 1.0");
  const auto leaf = damage(s4, ElementKind::node, std::vector<int>{1});
  c.expect(std::abs(leaf.damage - 4.0 / 9.0) <= 1e-12,
           "S4 leaf damage 4/9");

  // Path of five with 1-based ids "1".."5".
  const auto p5 = testing::graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const auto worst = worst_element(p5, ElementKind::node);
  c.expect(worst.indices == std::vector<int>{2}, "P5 worst node is center");
  c.expect(std::abs(worst.damage - 53.0 / 77.0) <= 1e-9,
           "P5 center damage within 1e-9 of 53/77");

  const auto pair =
      worst_subset(p5, ElementKind::node, 2, SubsetStrategy::exhaustive);
  std::vector<std::string> ids;
  for (int ix : pair.indices) ids.push_back(p5.id_of(ix));
  c.expect(ids == std::vector<std::string>{"2", "4"},
           "P5 worst 2-subset is {2,4}");
  // Independent brute force over all 10 pairs.
  double best = -1.0;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      best = std::max(
          best, damage(p5, ElementKind::node, std::vector<int>{a, b}).damage);
  c.expect(std::abs(pair.damage - best) <= 1e-12,
           "exhaustive equals the brute-force maximum");
  CHECK(c.finish());
}

TEST_CASE("criterion 4: protocol determinism and paper-scale runtime") {
  Criterion c(4, "byte-identical reruns and 1-vs-8-worker runs; full "
                 "12-scenario x 10k-trial campaign under 10 minutes");

  testing::TempDir fixture("acc-fx");
  const auto gen = run_cli("gen-fixture --model gnm --n 400 --edges 774 "
                           "--seed 9 --year 2019 --out " +
                           fixture.str());
  c.expect(gen.exit_code == 0, "fixture generation failed");

  testing::TempDir out_a("acc-a"), out_b("acc-b"), out_c("acc-c");
  const std::string determinism_args =
      "attack --data " + fixture.str() +
      " --years 2019 --kind node --k 1,10 --trials 10000 --seed 42 "
      "--format json --out ";
  const auto a = run_cli(determinism_args + out_a.str() + " --threads 8");
  const auto b = run_cli(determinism_args + out_b.str() + " --threads 8");
  const auto cc = run_cli(determinism_args + out_c.str() + " --threads 1");
  c.expect(a.exit_code == 0 && b.exit_code == 0 && cc.exit_code == 0,
           "attack runs failed");
  const auto bytes_a = testing::read_file(out_a.path() / "attack.json");
  const auto bytes_b = testing::read_file(out_b.path() / "attack.json");
  const auto bytes_c = testing::read_file(out_c.path() / "attack.json");
  c.expect(!bytes_a.empty(), "attack output is empty");
  c.expect(bytes_a == bytes_b, "rerun is not byte-identical");
  c.expect(bytes_a == bytes_c, "1-worker vs 8-worker output differs");

  testing::TempDir campaign_out("acc-campaign");
  const auto start = std::chrono::steady_clock::now();
  const auto campaign = run_cli(
      "attack --data " + fixture.str() +
      " --years 2019 --kind node,edge --k 1,2,5,10,15,20 --trials 10000 "
      "--seed 7 --format json --out " +
      campaign_out.str());
  const double elapsed = seconds_since(start);
  c.expect(campaign.exit_code == 0, "campaign run failed");
  c.expect(elapsed < 600.0, "campaign took " + std::to_string(elapsed) +
                                "s (budget 600s)");
  const auto doc = nlohmann::json::parse(
      testing::read_file(campaign_out.path() / "attack.json"));
  c.expect(doc.size() == 13, "campaign should emit 12 records, got " +
                                 std::to_string(doc.size() - 1));
  std::printf("    (campaign wall time: %.1fs)\n", elapsed);
  CHECK(c.finish());
}

TEST_CASE("criterion 5: monotonicity suite") {
  Criterion c(5, "damage(S) <= damage(T) for S subset of T on exhaustive "
                 "subsets; edge damage never negative; worst subset "
                 "non-decreasing in k");

  std::mt19937_64 rng(1848);
  int instances = 0;
  while (instances < 50) {
    std::uniform_int_distribution<int> size(4, 8);
    const auto g = oracle::random_graph(size(rng), 0.4, rng);
    if (g.edge_count() < 2 || g.edge_count() > 12) continue;
    ++instances;

    for (auto kind : {ElementKind::node, ElementKind::edge}) {
      const int count =
          kind == ElementKind::node ? g.node_count() : g.edge_count();
      // Damage of every subset, indexed by bitmask.
      std::vector<double> by_mask(std::size_t{1} << count, 0.0);
      std::vector<int> targets;
      bool defined = true;
      for (std::uint32_t mask = 1; mask < by_mask.size(); ++mask) {
        targets.clear();
        for (int i = 0; i < count; ++i)
          if (mask & (1u << i)) targets.push_back(i);
        by_mask[mask] = damage(g, kind, targets).damage;
        if (kind == ElementKind::edge && by_mask[mask] < 0.0)
          defined = false;
      }
      c.expect(defined, "negative edge-removal damage found");
      bool monotone = true;
      for (std::uint32_t mask = 0; mask < by_mask.size(); ++mask) {
        for (int e = 0; e < count; ++e) {
          if (mask & (1u << e)) continue;
          if (by_mask[mask | (1u << e)] < by_mask[mask] - 1e-12)
            monotone = false;
        }
      }
      c.expect(monotone, "superset monotonicity violated (instance " +
                             std::to_string(instances) + ", " +
                             to_string(kind) + ")");
    }
  }

  std::mt19937_64 rng2(1898);
  for (int i = 0; i < 10; ++i) {
    const auto g = oracle::random_graph(8, 0.45, rng2);
    if (g.edge_count() < 4) continue;
    double prev = -1.0;
    bool nondecreasing = true;
    for (int k = 1; k <= 4; ++k) {
      const auto r =
          worst_subset(g, ElementKind::node, k, SubsetStrategy::exhaustive);
      if (r.damage < prev - 1e-12) nondecreasing = false;
      prev = r.damage;
    }
    c.expect(nondecreasing, "worst-subset damage decreased in k");
  }
  CHECK(c.finish());
}

TEST_CASE("criterion 6: scale-free discrimination") {
  Criterion c(6, "BA(2000,2) classifies power_law and ER(2000,<k>=2.6) "
                 "exponential in >= 95% of 20 seeds; exact curves recover "
                 "parameters with sse < 1e-9");

  int ba_correct = 0, er_correct = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto ba = make_preferential_attachment(2000, 2, 1000 + seed);
    if (classify(ba).verdict == DegreeClass::power_law) ++ba_correct;
    const auto er = make_erdos_renyi(2000, 2.6 / 1999.0, 2000 + seed);
    if (classify(er).verdict == DegreeClass::exponential) ++er_correct;
  }
  c.expect(ba_correct >= 19, "BA power_law rate " +
                                 std::to_string(ba_correct) + "/20");
  c.expect(er_correct >= 19, "ER exponential rate " +
                                 std::to_string(er_correct) + "/20");

  CumulativeDegreeDistribution exp_curve, pow_curve;
  for (int k = 1; k <= 10; ++k) {
    exp_curve.support.push_back(k);
    exp_curve.survival.push_back(std::exp(-0.5 * k));
    pow_curve.support.push_back(k);
    pow_curve.survival.push_back(std::pow(k, -2.0));
  }
  const auto exp_fit = fit(exp_curve, FitModel::exponential);
  c.expect(exp_fit.sse < 1e-9 &&
               std::abs(exp_fit.rate_or_exponent - 0.5) < 1e-9,
           "exact exponential recovery");
  const auto pow_fit = fit(pow_curve, FitModel::power_law);
  c.expect(pow_fit.sse < 1e-9 &&
               std::abs(pow_fit.rate_or_exponent - 2.0) < 1e-9,
           "exact power-law recovery");
  CHECK(c.finish());
}

TEST_CASE("criterion 7: correlation pipeline sign check") {
  Criterion c(7, "normalized maximal damage correlates below -0.5 with "
                 "normalized L and C on the growing-grid fixture");

  GrowingGridParams p;
  p.seed = 1;
  const auto ds = generate_growing_grid(p);
  std::vector<int> years;
  for (int y = 1949; y <= 2019; y += 10) years.push_back(y);
  std::vector<ScenarioSpec> specs;
  for (auto kind : {ElementKind::node, ElementKind::edge})
    for (int k : {1, 2, 5, 10, 15, 20}) specs.push_back({kind, k});

  TimelineOptions opt;
  opt.seed = 2024;
  opt.trials = 400;
  const auto series = build_timeline(ds, years, specs, opt);
  c.expect(series.entries.size() >= 7,
           "fixture yielded fewer than 7 snapshots");

  const std::vector<std::string> metrics{"L", "C"};
  const auto report = damage_metric_report(series, metrics);
  c.expect(report.entries.size() == 4, "expected 4 correlation entries");
  for (const auto& e : report.entries) {
    std::printf("    r(damage_max %s, %s) = %.4f\n",
                to_string(e.kind).c_str(), e.metric.c_str(), e.r);
    c.expect(e.r < -0.5, "r(" + to_string(e.kind) + ", " + e.metric +
                             ") = " + std::to_string(e.r) + " not < -0.5");
  }
  CHECK(c.finish());
}

TEST_CASE("criterion 8: robustness direction for BA vs degree-matched ER") {
  Criterion c(8, "random-removal damage BA <= ER and targeted worst-node "
                 "damage BA >= ER, each in >= 80% of 20 seeds");

  int random_agree = 0, targeted_agree = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto ba = make_preferential_attachment(500, 2, 3000 + seed);
    const auto er = make_gnm(500, ba.edge_count(), 4000 + seed);

    const auto ba_damages = single_element_damages(ba, ElementKind::node);
    const auto er_damages = single_element_damages(er, ElementKind::node);
    double ba_mean = 0.0, er_mean = 0.0, ba_worst = 0.0, er_worst = 0.0;
    for (double d : ba_damages) {
      ba_mean += d;
      ba_worst = std::max(ba_worst, d);
    }
    for (double d : er_damages) {
      er_mean += d;
      er_worst = std::max(er_worst, d);
    }
    ba_mean /= static_cast<double>(ba_damages.size());
    er_mean /= static_cast<double>(er_damages.size());

    if (ba_mean <= er_mean) ++random_agree;
    if (ba_worst >= er_worst) ++targeted_agree;
  }
  std::printf("    random-removal agreement: %d/20, targeted: %d/20\n",
              random_agree, targeted_agree);
  c.expect(random_agree >= 16,
           "random-removal direction held only " +
               std::to_string(random_agree) + "/20 times");
  c.expect(targeted_agree >= 16,
           "targeted direction held only " +
               std::to_string(targeted_agree) + "/20 times");
  CHECK(c.finish());
}
