#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "descents/analysis.hpp"
#include "descents/io.hpp"

using namespace descents;
using namespace descents::analysis;

TEST_CASE("density bound check on flat and mixed models") {
  CheckReport flat = density_bound_check(Composition({2, 2, 2}), rat(1));
  CHECK(flat.applicable);
  CHECK(flat.pass);
  CHECK(parse_rational(flat.data["observed"].get<std::string>()) <= rat(4));

  CheckReport single = density_bound_check(Composition({6}), rat(6));
  CHECK_FALSE(single.applicable);

  CheckReport mixed = density_bound_check(Composition({3, 2, 4, 1}), rat(3));
  CHECK(mixed.applicable);
  CHECK(mixed.pass);

  // precondition violation: A below the actual kernel sup
  CheckReport bad = density_bound_check(Composition({3, 2, 4, 1}), rat(1));
  CHECK_FALSE(bad.pass);
}

TEST_CASE("derivative bound report") {
  CheckReport rep = derivative_bound_report(Composition::alternating(5), rat(1));
  CHECK(rep.applicable);
  CHECK(rep.pass);
  CheckReport small = derivative_bound_report(Composition({2, 1}), rat(1));
  CHECK_FALSE(small.applicable);
}

TEST_CASE("independence gap on the single-bond chain matches direct computation") {
  GapReport rep = independence_gap(Composition({2}), 4, 21, 5);
  // joint 2*1(x<=y), marginals 2(1-x) and 2y; the largest grid deviation is 2
  CHECK(rep.sup_gap == rat(2));
  CHECK(rep.cdf_gap > 0);
}

TEST_CASE("independence gap shrinks along the alternating family") {
  GapReport small = independence_gap(Composition::alternating(6), 10, 41, 9);
  GapReport large = independence_gap(Composition::alternating(12), 10, 41, 9);
  CHECK(large.sup_gap < small.sup_gap);
  CHECK(large.cdf_gap < small.cdf_gap);
}

TEST_CASE("large run bound") {
  CheckReport rep = large_run_bound_check(Composition::from_run_lengths({2, 5, 2}));
  CHECK(rep.applicable);
  CHECK(rep.pass);
  CheckReport tight = large_run_bound_check(Composition::from_run_lengths({2, 3, 2}));
  CHECK(tight.applicable);
  CHECK(tight.pass);
  CheckReport degenerate = large_run_bound_check(Composition({2, 2}));
  CHECK_FALSE(degenerate.applicable);
}

TEST_CASE("closed form for the three-run chain") {
  // frozen by hand integration of the (2,2) chain
  CHECK(closed_form_db(2, rat(1, 4), rat(1, 2)) == rat(3, 2));
  // y = 0 limit: b (1 - x^(b-1)) / (b-1)
  CHECK(closed_form_db(3, rat(1, 2), rat(0)) == rat(9, 8));
  // the density integrates to one in x for interior y
  for (int b : {2, 5}) {
    Rational acc(0);
    const int k = 2000;
    // midpoit Riemann on a polynomial of low degree is not exact; use the
    // transfer identity instead: compare against the exact conditional
    SawtoothModel m = model_from_composition(Composition::from_run_lengths({2, b, 2}));
    DensityReport cond = conditional_density(m, 1, {Pin{4, rat(1, 3)}});
    for (int j = 0; j <= 10; ++j) {
      Rational x = rat(j, 10);
      CHECK(cond.density(x) == closed_form_db(b, x, rat(1, 3)));
    }
    acc = cond.density.integral01();
    CHECK(acc == rat(1));
  }
  CHECK_THROWS_AS(closed_form_db(1, rat(0), rat(0)), std::invalid_argument);
}

TEST_CASE("closed form check reports and the limit trend") {
  CheckReport b2 = closed_form_db_check(2, 21);
  CHECK(b2.pass);
  CheckReport b5 = closed_form_db_check(5, 21);
  CHECK(b5.pass);
  Rational s2 = parse_rational(b2.data["sup_deviation_from_limit"].get<std::string>());
  Rational s5 = parse_rational(b5.data["sup_deviation_from_limit"].get<std::string>());
  CHECK(s5 < s2);
}

TEST_CASE("alternating asymptotic ratio approaches one") {
  CheckReport rep = alternating_asymptotic_check(16);
  CHECK(rep.pass);
  double prev_err = -1;
  for (const auto& row : rep.data["curve"]) {
    double err = std::abs(row["r"].get<double>() - 1.0);
    if (prev_err >= 0) CHECK(err <= prev_err + 1e-15);
    prev_err = err;
  }
  CHECK_THROWS_AS(alternating_asymptotic_check(4), std::invalid_argument);
}

TEST_CASE("exact joint total variation, frozen (2,2) case") {
  // class {1324, 1423, 2314, 2413, 3412}: hand-counted joint of positions 1, 4
  CHECK(exact_position_tv(Composition({2, 2}), 1, 4) == rat(8, 25));
  // degenerate class: identity permutation only
  CHECK(exact_position_tv(Composition({5}), 1, 5) == rat(0));
  CHECK_THROWS_AS(exact_position_tv(Composition({2, 2}), 0, 4), std::invalid_argument);
}

TEST_CASE("lp experiment basics") {
  Composition c = Composition::alternating(12);
  LPDistanceEstimate est = lp_independence_experiment(c, {4, 6}, 2000, 8, 42);
  CHECK(est.delta == 0.125);
  CHECK(est.bound >= est.tv);
  LPDistanceEstimate again = lp_independence_experiment(c, {4, 6}, 2000, 8, 42);
  CHECK(again.bound == est.bound);  // same seed, same outcome
  LPDistanceEstimate solo = lp_independence_experiment(c, {4}, 500, 8, 1);
  CHECK(solo.tv == 0.0);
  CHECK(solo.bound == doctest::Approx(0.125 * std::sqrt(2.0)));
  CHECK_THROWS_AS(lp_independence_experiment(c, {1, 2, 3, 4}, 10, 8, 1), std::length_error);
  CHECK_THROWS_AS(lp_independence_experiment(c, {0, 5}, 10, 8, 1), std::invalid_argument);
}

TEST_CASE("truncation gap vanishes at full size and shrinks with the cut") {
  Composition c = Composition::alternating(16);
  CheckReport full = truncation_check(c, 16, 41);
  CHECK(full.applicable);
  CHECK(parse_rational(full.data["sup_gap"].get<std::string>()) == rat(0));
  Rational g4 = parse_rational(truncation_check(c, 4, 41).data["sup_gap"].get<std::string>());
  Rational g8 = parse_rational(truncation_check(c, 8, 41).data["sup_gap"].get<std::string>());
  Rational g12 = parse_rational(truncation_check(c, 12, 41).data["sup_gap"].get<std::string>());
  CHECK(g8 <= g4);
  CHECK(g12 <= g8);
  CheckReport bad = truncation_check(Composition({8, 2}), 4, 41);
  CHECK_FALSE(bad.applicable);
}

TEST_CASE("grid and export helpers") {
  auto g = uniform_grid(5);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == rat(0));
  CHECK(g.back() == rat(1));
  CHECK(g[2] == rat(1, 2));
  CHECK_THROWS_AS(uniform_grid(1), std::invalid_argument);

  SawtoothModel m = model_from_composition(Composition({2, 2}));
  DensityReport rep = marginal_first(m);
  nlohmann::json j = density_report_json(rep, g, 10);
  CHECK(j["variable"] == "X_1");
  CHECK(j["table"].size() == 5);
  std::ostringstream os;
  write_density_csv(os, rep, g, 10);
  CHECK(os.str().find("t,density") == 0);
  nlohmann::json pj = poly_json(gamma_density(3));
  CHECK(pj.dump() == "[\"0\",\"2\"]");
}

TEST_CASE("fast suites pass end to end") {
  SuiteParams quick;
  quick.n_max = 6;
  SuiteResult counting = run_criterion(1, quick);
  CHECK(counting.pass);

  SuiteParams part;
  part.n_max = 9;
  SuiteResult partition = run_criterion(2, part);
  CHECK(partition.pass);

  SuiteResult andre = run_criterion(3, {});
  CHECK(andre.pass);

  SuiteParams envp;
  envp.n_max = 6;
  envp.grid = 41;
  SuiteResult envelope = run_criterion(4, envp);
  CHECK(envelope.pass);

  CHECK_THROWS_AS(run_criterion(12, {}), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("nosuch", {}), std::invalid_argument);
  CHECK(suite_names().size() == 11);
}
