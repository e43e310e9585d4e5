#pragma once

#include <vector>

#include "descents/composition.hpp"
#include "descents/rational.hpp"

namespace descents {

// Rank-propagation table: a(i, j) counts standard fillings of the first i
// cells in which cell i has relative rank j among cells 1..i. Row n sums to
// the descent statistic beta(D).
class CountTable {
 public:
  explicit CountTable(const Composition& c);

  int size() const { return n_; }
  const BigInt& total() const { return total_; }
  // 1-based; i in 1..n, j in 1..i.
  const BigInt& entry(int i, int j) const;
  // Whether the comparison between cells i and i+1 is an ascent, i in 1..n-1.
  bool ascent(int i) const { return ascent_[static_cast<size_t>(i) - 1]; }

 private:
  int n_;
  std::vector<bool> ascent_;
  std::vector<std::vector<BigInt>> rows_;
  BigInt total_;
};

BigInt count_class(const Composition& c);

}  // namespace descents
