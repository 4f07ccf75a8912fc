#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "core/mrmr.hpp"
#include "test_util.hpp"

using namespace ecwsa;

namespace {

// Map-based plug-in MI, written independently of the dense-histogram
// implementation it checks.
double mi_oracle(const std::vector<int>& u, const std::vector<int>& v) {
  std::map<std::pair<int, int>, double> joint;
  std::map<int, double> pu, pv;
  const double n = static_cast<double>(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    joint[{u[i], v[i]}] += 1.0 / n;
    pu[u[i]] += 1.0 / n;
    pv[v[i]] += 1.0 / n;
  }
  double mi = 0.0;
  for (const auto& [key, p] : joint) mi += p * std::log(p / (pu[key.first] * pv[key.second]));
  return mi;
}

double entropy_oracle(const std::vector<int>& u) {
  std::map<int, double> pu;
  for (int x : u) pu[x] += 1.0 / static_cast<double>(u.size());
  double h = 0.0;
  for (const auto& [sym, p] : pu) h -= p * std::log(p);
  return h;
}

// Cache-free double-loop scoring of a subset, sharing only the column data
// with the implementation under test.
double mrmr_oracle(const FeatureSet& set, const std::vector<std::vector<int>>& columns,
                   const std::vector<int>& labels) {
  if (set.empty()) return -1e308;
  double rel = 0.0;
  for (int f : set) rel += mi_oracle(columns[static_cast<std::size_t>(f)], labels);
  double red = 0.0;
  for (int i : set)
    for (int j : set)
      red += mi_oracle(columns[static_cast<std::size_t>(i)], columns[static_cast<std::size_t>(j)]);
  const double s = static_cast<double>(set.size());
  return rel / s - red / (s * s);
}

Dataset make_discrete_dataset(const std::string& name, int instances, int features,
                              std::uint64_t seed, int symbols, bool duplicate_first = true) {
  RngStream rng(seed);
  std::vector<std::vector<double>> rows;
  std::vector<std::string> labels;
  for (int i = 0; i < instances; ++i) {
    std::vector<double> row(static_cast<std::size_t>(features));
    // feature 0 follows the class; feature 1 optionally copies it; the rest
    // are noise
    const int label = static_cast<int>(rng.next_below(2));
    row[0] = static_cast<double>(label * (symbols - 1));
    for (int f = 1; f < features; ++f)
      row[static_cast<std::size_t>(f)] =
          static_cast<double>(rng.next_below(static_cast<std::uint64_t>(symbols)));
    if (duplicate_first && features > 1) row[1] = row[0];
    rows.push_back(std::move(row));
    labels.push_back(label ? "y" : "n");
  }
  return load_csv(testutil::write_csv(name, rows, labels));
}

}  // namespace

TEST_CASE("discretize hand cases") {
  CHECK(discretize({3, 3, 3}, 4) == std::vector<int>{0, 0, 0});
  CHECK(discretize({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, 10) ==
        std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(discretize({0, 10}, 2) == std::vector<int>{0, 1});
  CHECK_THROWS_AS(discretize({}, 4), std::invalid_argument);
  CHECK_THROWS_AS(discretize({1.0, 2.0}, 1), std::invalid_argument);
}

TEST_CASE("discretize keeps the maximum in the top bin") {
  RngStream rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> col(30);
    for (auto& v : col) v = rng.next_range(-5.0, 5.0);
    const int bins = 2 + static_cast<int>(rng.next_below(10));
    const auto binned = discretize(col, bins);
    for (int b : binned) {
      CHECK(b >= 0);
      CHECK(b < bins);
    }
    const auto max_at =
        static_cast<std::size_t>(std::max_element(col.begin(), col.end()) - col.begin());
    CHECK(binned[max_at] == bins - 1);
  }
}

TEST_CASE("mutual information hand cases") {
  CHECK(mutual_information({0, 0, 1, 1}, {0, 0, 1, 1}) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(mutual_information({0, 0, 1, 1}, {0, 1, 0, 1}) == doctest::Approx(0.0));
  CHECK_THROWS_AS(mutual_information({0, 1}, {0, 1, 0}), std::invalid_argument);
}

TEST_CASE("MI of a vector with itself is its entropy") {
  RngStream rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> u(40);
    for (auto& v : u) v = static_cast<int>(rng.next_below(5));
    CHECK(mutual_information(u, u) == doctest::Approx(entropy_oracle(u)).epsilon(1e-12));
  }
}

TEST_CASE("MI oracle equivalence, symmetry and bounds on random pairs") {
  RngStream rng(81);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.next_below(49);
    const int symbols = 2 + static_cast<int>(rng.next_below(7));
    std::vector<int> u(n), v(n);
    for (auto& x : u) x = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(symbols)));
    for (auto& x : v) x = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(symbols)));
    const double mi = mutual_information(u, v);
    CHECK(mi == doctest::Approx(mi_oracle(u, v)).epsilon(1e-12));
    CHECK(mutual_information(v, u) == doctest::Approx(mi).epsilon(1e-12));
    CHECK(mi >= -1e-12);
    CHECK(mi <= std::min(entropy_oracle(u), entropy_oracle(v)) + 1e-12);
  }
}

TEST_CASE("mrmr fitness of a singleton is relevance minus entropy") {
  const Dataset ds = make_discrete_dataset("mrmr_single.csv", 60, 4, 5, 4);
  const DiscretizedDataset disc(ds, 4);
  const double expected =
      mutual_information(disc.column(0), disc.labels()) - entropy(disc.column(0));
  CHECK(mrmr_fitness({0}, disc) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("duplicated feature pair scores relevance minus entropy") {
  // features 0 and 1 are identical copies, so all four pair terms equal H(f)
  const Dataset ds = make_discrete_dataset("mrmr_dup.csv", 60, 4, 6, 4);
  const DiscretizedDataset disc(ds, 4);
  const double rho = mutual_information(disc.column(0), disc.labels());
  const double h = entropy(disc.column(0));
  CHECK(mrmr_fitness({0, 1}, disc) == doctest::Approx(rho - h).epsilon(1e-12));
}

TEST_CASE("empty set takes the sentinel worst score") {
  const Dataset ds = make_discrete_dataset("mrmr_empty.csv", 20, 3, 7, 3);
  const DiscretizedDataset disc(ds, 3);
  CHECK(mrmr_fitness({}, disc) == kWorstMrmrScore);
  CHECK(mrmr_fitness({}, disc) < mrmr_fitness({0}, disc));
}

TEST_CASE("mrmr matches the cache-free oracle on every subset of 8 features") {
  const Dataset ds = make_discrete_dataset("mrmr_all.csv", 60, 8, 9, 5);
  const DiscretizedDataset disc(ds, 5);
  std::vector<std::vector<int>> columns;
  for (int f = 0; f < 8; ++f) columns.push_back(disc.column(f));
  for (unsigned subset = 1; subset < 256; ++subset) {
    FeatureSet set;
    for (int f = 0; f < 8; ++f)
      if (subset & (1u << f)) set.push_back(f);
    CHECK(mrmr_fitness(set, disc) ==
          doctest::Approx(mrmr_oracle(set, columns, ds.labels())).epsilon(1e-10));
  }
}

TEST_CASE("cache and cache-free paths agree") {
  const Dataset ds = make_discrete_dataset("mrmr_cache.csv", 40, 6, 11, 4);
  const DiscretizedDataset warm(ds, 4);
  const FeatureSet set{0, 2, 4};
  const double first = mrmr_fitness(set, warm);   // populates the cache
  const double second = mrmr_fitness(set, warm);  // served from the cache
  CHECK(first == second);
  const DiscretizedDataset cold(ds, 4);
  CHECK(mrmr_fitness(set, cold) == first);
}

TEST_CASE("neighbor construction hand cases") {
  const auto [n1, n2] = make_neighbors({1, 3}, {2, 4}, {4});
  CHECK(n1 == FeatureSet{1, 2, 3});
  CHECK(n2 == FeatureSet{1, 3});

  // x_j == x_k: both neighbors equal the whale
  const auto [m1, m2] = make_neighbors({0, 5}, {2, 7}, {2, 7});
  CHECK(m1 == FeatureSet{0, 5});
  CHECK(m2 == FeatureSet{0, 5});

  // empty whale: first neighbor is the difference, second is empty
  const auto [e1, e2] = make_neighbors({}, {1, 2}, {2});
  CHECK(e1 == FeatureSet{1});
  CHECK(e2 == FeatureSet{});
}

namespace {

std::vector<Whale> make_population(const std::vector<FeatureSet>& sets, int num_features) {
  std::vector<Whale> population;
  for (const auto& s : sets) population.push_back(whale_from_features(s, num_features));
  return population;
}

}  // namespace

TEST_CASE("local search never lowers a whale's score and never empties a subset") {
  const Dataset ds = make_discrete_dataset("ls_mono.csv", 60, 6, 13, 4);
  const DiscretizedDataset disc(ds, 4);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto population = make_population(
        {{0, 2}, {1, 3, 5}, {4}, {2, 3}, {0, 1, 2, 3, 4, 5}}, 6);
    std::vector<double> before;
    for (const auto& w : population) before.push_back(mrmr_fitness(mask_to_set(w.bitmask), disc));
    local_search(population, disc, seed, 1);
    for (std::size_t i = 0; i < population.size(); ++i) {
      CHECK(population[i].selected_count() >= 1);
      const double after = mrmr_fitness(mask_to_set(population[i].bitmask), disc);
      CHECK(after >= before[i] - 1e-12);
    }
  }
}

TEST_CASE("replacement events strictly improve the score") {
  const Dataset ds = make_discrete_dataset("ls_improve.csv", 60, 6, 17, 4);
  const DiscretizedDataset disc(ds, 4);
  int replacements = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto population = make_population({{2}, {3, 4}, {0, 5}, {1, 2, 3}}, 6);
    std::vector<double> before;
    for (const auto& w : population) before.push_back(mrmr_fitness(mask_to_set(w.bitmask), disc));
    replacements += local_search(population, disc, seed, 1);
    for (std::size_t i = 0; i < population.size(); ++i) {
      const double after = mrmr_fitness(mask_to_set(population[i].bitmask), disc);
      if (after != before[i]) CHECK(after > before[i]);
    }
  }
  CHECK(replacements > 0);  // the noisy features leave room to improve
}

TEST_CASE("a noise-dropping neighbor replaces the original") {
  // feature 0 tracks the class; 1..3 are noise. The whale holding every
  // feature gets replaced by the noise-free subset once the draw produces
  // dif = {1,2,3}.
  const Dataset ds = make_discrete_dataset("ls_drop.csv", 80, 4, 19, 4, false);
  const DiscretizedDataset disc(ds, 4);
  REQUIRE(mrmr_fitness({0}, disc) > mrmr_fitness({0, 1, 2, 3}, disc));
  bool improved = false;
  for (std::uint64_t seed = 0; seed < 50 && !improved; ++seed) {
    auto population = make_population({{0, 1, 2, 3}, {1, 2, 3}, {0}}, 4);
    const double before = mrmr_fitness(mask_to_set(population[0].bitmask), disc);
    local_search(population, disc, seed, 1);
    const double after = mrmr_fitness(mask_to_set(population[0].bitmask), disc);
    improved = after > before;
  }
  CHECK(improved);
}

TEST_CASE("populations below three whales are left untouched") {
  const Dataset ds = make_discrete_dataset("ls_small.csv", 30, 4, 23, 3);
  const DiscretizedDataset disc(ds, 3);
  auto population = make_population({{0, 1}, {2, 3}}, 4);
  const auto mask0 = population[0].bitmask;
  const auto mask1 = population[1].bitmask;
  CHECK(local_search(population, disc, 1, 1) == 0);
  CHECK(population[0].bitmask == mask0);
  CHECK(population[1].bitmask == mask1);
}

TEST_CASE("identical draw sets leave the whale unchanged") {
  // with three whales, r1 and r2 are the two others; make them identical so
  // dif is empty and both neighbors equal the whale
  const Dataset ds = make_discrete_dataset("ls_same.csv", 30, 4, 29, 3);
  const DiscretizedDataset disc(ds, 3);
  auto population = make_population({{0, 2}, {1, 3}, {1, 3}}, 4);
  const auto mask = population[0].bitmask;
  local_search(population, disc, 5, 1);
  CHECK(population[0].bitmask == mask);
}
