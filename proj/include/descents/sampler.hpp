#pragma once

#include <vector>

#include "descents/count_table.hpp"
#include "descents/permutation.hpp"
#include "descents/rng.hpp"

namespace descents {

// Exactly uniform sampling over the descent class via backward rank selection
// against the count table. Prefix sums are flattened into fixed-width limb
// arrays so the per-sample hot path never allocates GMP objects.
class ClassSampler {
 public:
  explicit ClassSampler(const Composition& c);

  const BigInt& class_size() const { return total_; }
  int size() const { return n_; }
  Permutation sample(SplitMix64& rng) const;

 private:
  // S(i, j) = sum_{k <= j} a(i, k), stored at prefix_[offset_[i-1] + j * limbs_].
  const uint64_t* level(int i, int j) const {
    return prefix_.data() + offset_[static_cast<size_t>(i) - 1] +
           static_cast<size_t>(j) * limbs_;
  }
  int pick(int i, int lo, int hi, SplitMix64& rng, std::vector<uint64_t>& scratch) const;

  int n_ = 0;
  size_t limbs_ = 1;
  std::vector<bool> ascent_;
  std::vector<size_t> offset_;
  std::vector<uint64_t> prefix_;
  BigInt total_;
};

// Positions in [0,1]^n with the pattern of p: cell i receives the p(i)-th
// smallest of n iid uniforms.
std::vector<double> embed_continuous(const Permutation& p, SplitMix64& rng);

// Permutation recovered from distinct positions (inverse standardization).
Permutation inverse_standardization(const std::vector<double>& x);

}  // namespace descents
