#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "descents/composition.hpp"
#include "descents/permutation.hpp"

using namespace descents;

TEST_CASE("descent set <-> composition on the worked example") {
  Composition c = Composition::from_descents(DescentSet{10, {3, 5, 9}});
  CHECK(c.parts() == std::vector<int>{3, 2, 4, 1});
  CHECK(c.descent_set().members == std::vector<int>{3, 5, 9});
  CHECK(c.size() == 10);
}

TEST_CASE("degenerate descent sets") {
  CHECK(Composition::from_descents(DescentSet{5, {}}).parts() == std::vector<int>{5});
  CHECK(Composition::from_descents(DescentSet{4, {1, 2, 3}}).parts() ==
        std::vector<int>{1, 1, 1, 1});
  CHECK_THROWS_AS(Composition::from_descents(DescentSet{4, {4}}), std::invalid_argument);
  CHECK_THROWS_AS(Composition::from_descents(DescentSet{4, {0}}), std::invalid_argument);
}

TEST_CASE("round trip over all compositions up to n = 12") {
  for (int n = 1; n <= 12; ++n) {
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      DescentSet d{n, {}};
      for (int i = 1; i <= n - 1; ++i)
        if (mask & (1u << (i - 1))) d.members.push_back(i);
      Composition c = Composition::from_descents(d);
      CHECK(c.descent_set().members == d.members);
      CHECK(Composition::from_descents(c.descent_set()) == c);
    }
  }
}

TEST_CASE("runs of (3,2,4,1) match the worked list") {
  auto rs = runs(Composition({3, 2, 4, 1}));
  REQUIRE(rs.size() == 6);
  int first[] = {1, 3, 4, 5, 6, 9};
  int last[] = {3, 4, 5, 6, 9, 10};
  Orientation orient[] = {Orientation::Ascending,  Orientation::Descending,
                          Orientation::Ascending,  Orientation::Descending,
                          Orientation::Ascending,  Orientation::Descending};
  for (int i = 0; i < 6; ++i) {
    CHECK(rs[i].index == i + 1);
    CHECK(rs[i].first_cell == first[i]);
    CHECK(rs[i].last_cell == last[i]);
    CHECK(rs[i].orientation == orient[i]);
  }
}

TEST_CASE("single-row and single-column runs") {
  auto row = runs(Composition({6}));
  REQUIRE(row.size() == 1);
  CHECK(row[0].first_cell == 1);
  CHECK(row[0].last_cell == 6);
  CHECK(row[0].orientation == Orientation::Ascending);

  // the 3-cell column is one descending run, not two
  auto col = runs(Composition({1, 1, 1}));
  REQUIRE(col.size() == 1);
  CHECK(col[0].first_cell == 1);
  CHECK(col[0].last_cell == 3);
  CHECK(col[0].orientation == Orientation::Descending);
}

TEST_CASE("run structure invariants for all compositions up to n = 9") {
  for (int n = 2; n <= 9; ++n) {
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      DescentSet d{n, {}};
      for (int i = 1; i <= n - 1; ++i)
        if (mask & (1u << (i - 1))) d.members.push_back(i);
      Composition c = Composition::from_descents(d);
      auto rs = runs(c);
      int cells = 0;
      for (size_t i = 0; i < rs.size(); ++i) {
        CHECK(rs[i].length() >= 2);
        cells += rs[i].length();
        if (i) {
          CHECK(rs[i].first_cell == rs[i - 1].last_cell);  // share exactly one cell
          CHECK(rs[i].orientation != rs[i - 1].orientation);
        }
      }
      CHECK(rs.front().first_cell == 1);
      CHECK(rs.back().last_cell == n);
      CHECK(cells == n + static_cast<int>(rs.size()) - 1);
    }
  }
}

TEST_CASE("model type from first/last cells") {
  CHECK(model_type(Composition({3, 2, 4, 1})).to_string() == "--");
  CHECK(model_type(Composition({6})).to_string() == "-+");
  CHECK(model_type(Composition({1, 1, 1})).to_string() == "+-");
  CHECK(model_type(Composition({1, 5})).to_string() == "++");
}

TEST_CASE("descent set of a permutation") {
  CHECK(descent_set_of({3, 5, 8, 4, 7, 1, 6, 9, 10, 2}).members == std::vector<int>{3, 5, 9});
  CHECK(descent_set_of({1, 2, 3, 4, 5, 6}).members.empty());
  CHECK(descent_set_of({5, 4, 3, 2, 1}).members == std::vector<int>{1, 2, 3, 4});
  CHECK_THROWS_AS(descent_set_of({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(descent_set_of({0, 1, 2}), std::invalid_argument);
}

TEST_CASE("brute force classes, frozen small cases") {
  CHECK(brute_force_class(Composition({1, 1, 1})) ==
        std::vector<Permutation>{{3, 2, 1}});
  auto cls22 = brute_force_class(Composition({2, 2}));
  std::vector<Permutation> want22{
      {1, 3, 2, 4}, {1, 4, 2, 3}, {2, 3, 1, 4}, {2, 4, 1, 3}, {3, 4, 1, 2}};
  CHECK(cls22 == want22);
  auto cls121 = brute_force_class(Composition({1, 2, 1}));
  CHECK(cls121.size() == 5);
  for (const auto& p : cls121) CHECK(descent_set_of(p).members == std::vector<int>{1, 3});
  CHECK_THROWS_AS(brute_force_class(Composition({11}), 10), std::length_error);
}

TEST_CASE("brute force classes partition S_n") {
  for (int n = 2; n <= 6; ++n) {
    size_t total = 0;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      DescentSet d{n, {}};
      for (int i = 1; i <= n - 1; ++i)
        if (mask & (1u << (i - 1))) d.members.push_back(i);
      auto cls = brute_force_class(Composition::from_descents(d));
      total += cls.size();
      for (const auto& p : cls) CHECK(descent_set_of(p).members == d.members);
    }
    size_t fact = 1;
    for (int k = 2; k <= n; ++k) fact *= static_cast<size_t>(k);
    CHECK(total == fact);
  }
}

TEST_CASE("parsing both composition spellings") {
  CHECK(Composition::parse("3,2,4,1") == Composition({3, 2, 4, 1}));
  CHECK(Composition::parse("{3,5,9}@10") == Composition({3, 2, 4, 1}));
  CHECK(Composition::parse("{}@5") == Composition({5}));
  CHECK_THROWS(Composition::parse(""));
  CHECK_THROWS(Composition::parse("{3,5}"));
  CHECK_THROWS(Composition::parse("0,2"));
}

TEST_CASE("helpers: alternating, run lengths, truncation, complement") {
  CHECK(Composition::alternating(6).descent_set().members == std::vector<int>{2, 4});
  Composition c = Composition::from_run_lengths({2, 4, 2});
  auto rs = runs(c);
  REQUIRE(rs.size() == 3);
  CHECK(rs[0].length() == 2);
  CHECK(rs[1].length() == 4);
  CHECK(rs[2].length() == 2);
  CHECK(c.size() == 2 + 3 + 1);

  CHECK(Composition({3, 2, 4, 1}).truncated(7) == Composition({3, 2, 2}));
  CHECK(Composition({3, 2, 4, 1}).truncated(10) == Composition({3, 2, 4, 1}));

  Composition comp = Composition({2, 2}).complement();
  CHECK(comp.descent_set().members == std::vector<int>{1, 3});
}
