#include "descents/count_table.hpp"

#include <stdexcept>

namespace descents {

CountTable::CountTable(const Composition& c) : n_(c.size()) {
  DescentSet d = c.descent_set();
  ascent_.resize(static_cast<size_t>(n_ > 0 ? n_ - 1 : 0));
  for (int i = 1; i <= n_ - 1; ++i) ascent_[static_cast<size_t>(i) - 1] = !d.contains(i);

  rows_.reserve(static_cast<size_t>(n_));
  rows_.push_back({BigInt(1)});
  for (int i = 2; i <= n_; ++i) {
    const auto& prev = rows_.back();
    std::vector<BigInt> row(static_cast<size_t>(i));
    if (ascent_[static_cast<size_t>(i) - 2]) {
      // a(i,j) = sum_{k < j} a(i-1,k)
      BigInt acc = 0;
      for (int j = 1; j <= i; ++j) {
        row[static_cast<size_t>(j) - 1] = acc;
        if (j <= i - 1) acc += prev[static_cast<size_t>(j) - 1];
      }
    } else {
      // a(i,j) = sum_{k >= j} a(i-1,k)
      BigInt acc = 0;
      for (int j = i; j >= 1; --j) {
        if (j <= i - 1) acc += prev[static_cast<size_t>(j) - 1];
        row[static_cast<size_t>(j) - 1] = acc;
      }
    }
    rows_.push_back(std::move(row));
  }
  total_ = 0;
  for (const auto& v : rows_.back()) total_ += v;
}

const BigInt& CountTable::entry(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > i) throw std::out_of_range("count table entry");
  return rows_[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1];
}

BigInt count_class(const Composition& c) {
  // row-by-row, keeping only the previous row
  const int n = c.size();
  DescentSet d = c.descent_set();
  std::vector<BigInt> prev{BigInt(1)}, row;
  for (int i = 2; i <= n; ++i) {
    row.assign(static_cast<size_t>(i), BigInt(0));
    if (!d.contains(i - 1)) {
      BigInt acc = 0;
      for (int j = 1; j <= i; ++j) {
        row[static_cast<size_t>(j) - 1] = acc;
        if (j <= i - 1) acc += prev[static_cast<size_t>(j) - 1];
      }
    } else {
      BigInt acc = 0;
      for (int j = i; j >= 1; --j) {
        if (j <= i - 1) acc += prev[static_cast<size_t>(j) - 1];
        row[static_cast<size_t>(j) - 1] = acc;
      }
    }
    prev.swap(row);
  }
  BigInt total = 0;
  for (const auto& v : prev) total += v;
  return total;
}

}  // namespace descents
