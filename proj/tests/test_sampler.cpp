#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "descents/sampler.hpp"
#include "descents/sawtooth.hpp"
#include "descents/stats.hpp"

using namespace descents;

TEST_CASE("count table frozen values") {
  CHECK(count_class(Composition({1, 2, 1})) == 5);
  CHECK(count_class(Composition({2, 2})) == 5);
  for (int n = 1; n <= 9; ++n) CHECK(count_class(Composition({n})) == 1);
  CHECK(count_class(Composition::parse("{3,5,9}@10")) == 8361);  // brute-forced once
  // zigzag numbers
  long zig[] = {1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521};
  for (int n = 1; n <= 10; ++n)
    CHECK(count_class(Composition::alternating(n)) == BigInt(zig[n - 1]));
}

TEST_CASE("count table structure") {
  CountTable t(Composition({2, 2}));
  CHECK(t.entry(1, 1) == 1);
  CHECK(t.size() == 4);
  BigInt row_sum = 0;
  for (int j = 1; j <= 4; ++j) {
    CHECK(t.entry(4, j) >= 0);
    row_sum += t.entry(4, j);
  }
  CHECK(row_sum == t.total());
  CHECK(t.total() == 5);
  CHECK(t.ascent(1));
  CHECK_FALSE(t.ascent(2));
  CHECK(t.ascent(3));
}

TEST_CASE("count agrees with brute force and the volume identity, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& c : all_compositions(n)) {
      BigInt dp = count_class(c);
      CHECK(dp == BigInt(static_cast<long>(brute_force_class(c).size())));
      CHECK(Rational(factorial(static_cast<unsigned>(n))) *
                volume(model_from_composition(c)) ==
            Rational(dp));
    }
  }
}

TEST_CASE("counting scales to large sizes") {
  // row-by-row table keeps memory flat; value grows like n!
  BigInt large = count_class(Composition::alternating(400));
  CHECK(mpz_sizeinbase(large.get_mpz_t(), 2) > 2000);
  BigInt single = count_class(Composition({400}));
  CHECK(single == 1);
}

TEST_CASE("complement symmetry of the descent statistic") {
  for (int n = 2; n <= 10; ++n) {
    for (const auto& c : all_compositions(n))
      CHECK(count_class(c) == count_class(c.complement()));
  }
}

TEST_CASE("degenerate classes sample deterministically") {
  SplitMix64 rng(123);
  ClassSampler row(Composition({6}));
  for (int i = 0; i < 5; ++i) CHECK(row.sample(rng) == Permutation{1, 2, 3, 4, 5, 6});
  ClassSampler col(Composition({1, 1, 1}));
  for (int i = 0; i < 5; ++i) CHECK(col.sample(rng) == Permutation{3, 2, 1});
}

TEST_CASE("samples always land in the class and repeat per seed") {
  for (const auto& c : {Composition({2, 2}), Composition({3, 1, 2}), Composition({1, 2, 1, 3})}) {
    ClassSampler s(c);
    DescentSet want = c.descent_set();
    SplitMix64 rng = SplitMix64::stream(99, 5);
    for (int i = 0; i < 200; ++i)
      CHECK(descent_set_of(s.sample(rng)).members == want.members);
    SplitMix64 a = SplitMix64::stream(7, 7), b = SplitMix64::stream(7, 7);
    for (int i = 0; i < 20; ++i) CHECK(s.sample(a) == s.sample(b));
  }
}

TEST_CASE("sampler hits every class element with plausible frequencies") {
  Composition c({2, 2});
  auto cls = brute_force_class(c);
  ClassSampler s(c);
  std::map<Permutation, int> counts;
  SplitMix64 rng = SplitMix64::stream(2024, 1);
  const int N = 100000;
  for (int i = 0; i < N; ++i) counts[s.sample(rng)]++;
  CHECK(counts.size() == cls.size());
  double stat = 0;
  const double expected = static_cast<double>(N) / 5.0;
  for (const auto& [p, o] : counts) {
    double d = o - expected;
    stat += d * d / expected;
  }
  CHECK(chi_square_pvalue(stat, 4) > 0.001);
}

TEST_CASE("multi-limb sampling at n = 60 stays in the class") {
  Composition c = Composition::alternating(60);
  ClassSampler s(c);
  CHECK(mpz_sizeinbase(s.class_size().get_mpz_t(), 2) > 128);  // needs several limbs
  SplitMix64 rng = SplitMix64::stream(11, 3);
  DescentSet want = c.descent_set();
  for (int i = 0; i < 20; ++i)
    CHECK(descent_set_of(s.sample(rng)).members == want.members);
}

TEST_CASE("continuous embedding has the pattern of the permutation") {
  SplitMix64 rng = SplitMix64::stream(5, 2);
  for (const auto& c : {Composition({3, 2, 4, 1}), Composition({2, 2}), Composition({1})}) {
    ClassSampler s(c);
    for (int i = 0; i < 50; ++i) {
      Permutation p = s.sample(rng);
      auto x = embed_continuous(p, rng);
      CHECK(inverse_standardization(x) == p);
    }
  }
}

TEST_CASE("embedding coordinate one is Beta(k, n+1-k) in the mean") {
  const int n = 10;
  const int N = 20000;
  for (int k : {1, 4, 10}) {
    Permutation p{k};
    for (int v = 1; v <= n; ++v)
      if (v != k) p.push_back(v);
    SplitMix64 rng = SplitMix64::stream(77, static_cast<uint64_t>(k));
    double sum = 0;
    for (int i = 0; i < N; ++i) sum += embed_continuous(p, rng)[0];
    double mean = sum / N;
    double want = static_cast<double>(k) / (n + 1);
    double sd = std::sqrt(k * (n + 1.0 - k) / ((n + 1.0) * (n + 1.0) * (n + 2.0)));
    CHECK(std::abs(mean - want) < 4 * sd / std::sqrt(static_cast<double>(N)));
  }
}

TEST_CASE("single-element embedding is one uniform draw") {
  SplitMix64 rng(1);
  auto x = embed_continuous(Permutation{1}, rng);
  REQUIRE(x.size() == 1);
  CHECK(x[0] >= 0.0);
  CHECK(x[0] < 1.0);
}

TEST_CASE("dominance checks") {
  // exact: identical CDFs dominate reflexively
  std::vector<Rational> f{rat(0), rat(1, 4), rat(1, 2), rat(1)};
  CHECK(dominance_check(f, f) == Dominance::Dominates);
  // 1-(1-t)^3 vs 1-(1-t)^2 on a grid: the higher power is pointwise larger
  std::vector<Rational> a, b;
  for (int j = 0; j <= 16; ++j) {
    Rational t = rat(j, 16);
    Rational u = rat(1) - t;
    a.push_back(rat(1) - u * u * u);
    b.push_back(rat(1) - u * u);
  }
  CHECK(dominance_check(a, b) == Dominance::Dominates);      // b's law >= a's law
  CHECK(dominance_check(b, a) == Dominance::Incomparable);
  std::vector<Rational> short_grid{rat(0)};
  CHECK_THROWS_AS(dominance_check(a, short_grid), std::invalid_argument);
  // empirical with DKW slack
  std::vector<double> da(a.size()), db(b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    da[i] = to_double(a[i]);
    db[i] = to_double(b[i]);
  }
  CHECK(dominance_check(da, db, 0.0) == Dominance::Dominates);
  CHECK(dominance_check(db, da, 0.5) == Dominance::Dominates);  // huge slack swallows it
  CHECK(dkw_band(10000, 0.05) > 0);
  CHECK(dkw_band(10000, 0.05) < 0.02);
}

TEST_CASE("stochastic domination transfers through independent comparisons") {
  // X1 = U^2 <= U = Y1 in law; Y2 = V^2 <= V = X2 in law
  // P(X1 < X2) = 2/3 and P(Y1 < Y2) = 1/3
  SplitMix64 rng = SplitMix64::stream(31, 4);
  const int N = 100000;
  int x_wins = 0, y_wins = 0;
  for (int i = 0; i < N; ++i) {
    double u = rng.uniform01(), v = rng.uniform01();
    if (u * u < v) ++x_wins;
    if (u < v * v) ++y_wins;
  }
  double slack = 3 * dkw_band(N, 0.05);
  CHECK(static_cast<double>(x_wins) / N >= static_cast<double>(y_wins) / N - slack);
  CHECK(std::abs(static_cast<double>(x_wins) / N - 2.0 / 3.0) < 0.01);
  CHECK(std::abs(static_cast<double>(y_wins) / N - 1.0 / 3.0) < 0.01);
}

TEST_CASE("empirical joint bins and total variation") {
  EmpiricalJoint j(4);
  j.add(0.1, 0.9);
  j.add(0.1, 0.9);
  j.add(0.9, 0.1);
  j.add(1.0, 1.0);  // clamped into the last bin
  CHECK(j.total == 4);
  CHECK(j.count(0, 3) == 2);
  CHECK(j.count(3, 0) == 1);
  CHECK(j.count(3, 3) == 1);
  auto mx = j.marginal_x();
  CHECK(mx[0] == 2);
  CHECK(mx[3] == 2);
  CHECK(j.tv_against_product() > 0);
  auto est = lp_upper_bound(j);
  CHECK(est.delta == 0.25);
  CHECK(est.bound == doctest::Approx(est.delta * std::sqrt(2.0) + est.tv));
}
