#include "descents/sampler.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace descents {

namespace {

// little-endian fixed-width limb helpers
int limb_cmp(const uint64_t* a, const uint64_t* b, size_t limbs) {
  for (size_t k = limbs; k-- > 0;) {
    if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
  }
  return 0;
}

void limb_sub(const uint64_t* a, const uint64_t* b, uint64_t* out, size_t limbs) {
  unsigned long long borrow = 0;
  for (size_t k = 0; k < limbs; ++k) {
    uint64_t bk = b[k] + borrow;
    borrow = (bk < borrow) || (a[k] < bk) ? 1 : 0;
    out[k] = a[k] - bk;
  }
}

void limb_add(const uint64_t* a, const uint64_t* b, uint64_t* out, size_t limbs) {
  unsigned long long carry = 0;
  for (size_t k = 0; k < limbs; ++k) {
    uint64_t s = a[k] + carry;
    carry = s < carry ? 1 : 0;
    out[k] = s + b[k];
    carry += out[k] < b[k] ? 1 : 0;
  }
}

bool limb_zero(const uint64_t* a, size_t limbs) {
  for (size_t k = 0; k < limbs; ++k)
    if (a[k]) return false;
  return true;
}

// uniform in [0, bound) for a positive limb value
void limb_uniform_below(const uint64_t* bound, uint64_t* out, size_t limbs, SplitMix64& rng) {
  size_t top = limbs;
  while (top > 1 && bound[top - 1] == 0) --top;
  uint64_t mask = ~0ull;
  uint64_t hi = bound[top - 1];
  unsigned bits = 64;
  while (bits > 1 && (hi >> (bits - 1)) == 0) {
    --bits;
    mask >>= 1;
  }
  for (;;) {
    for (size_t k = 0; k < limbs; ++k) out[k] = k < top ? rng.next() : 0;
    out[top - 1] &= mask;
    if (limb_cmp(out, bound, limbs) < 0) return;
  }
}

struct Fenwick {
  explicit Fenwick(int n) : n(n), tree(static_cast<size_t>(n) + 1, 0) {
    for (int i = 1; i <= n; ++i) {
      tree[static_cast<size_t>(i)] += 1;
      int j = i + (i & -i);
      if (j <= n) tree[static_cast<size_t>(j)] += tree[static_cast<size_t>(i)];
    }
  }
  // smallest value v with rank k (1-based) among present values, then remove it
  int take_kth(int k) {
    int pos = 0;
    int log = 1;
    while ((log << 1) <= n) log <<= 1;
    for (int step = log; step > 0; step >>= 1) {
      int next = pos + step;
      if (next <= n && tree[static_cast<size_t>(next)] < k) {
        pos = next;
        k -= tree[static_cast<size_t>(pos)];
      }
    }
    int value = pos + 1;
    for (int i = value; i <= n; i += i & -i) tree[static_cast<size_t>(i)] -= 1;
    return value;
  }
  int n;
  std::vector<int> tree;
};

}  // namespace

ClassSampler::ClassSampler(const Composition& c) : n_(c.size()) {
  CountTable table(c);
  total_ = table.total();
  ascent_.resize(static_cast<size_t>(n_ > 0 ? n_ - 1 : 0));
  for (int i = 1; i <= n_ - 1; ++i) ascent_[static_cast<size_t>(i) - 1] = table.ascent(i);
  limbs_ = std::max<size_t>(1, (mpz_sizeinbase(total_.get_mpz_t(), 2) + 63) / 64);

  offset_.resize(static_cast<size_t>(n_));
  size_t words = 0;
  for (int i = 1; i <= n_; ++i) {
    offset_[static_cast<size_t>(i) - 1] = words;
    words += static_cast<size_t>(i + 1) * limbs_;
  }
  prefix_.assign(words, 0);
  BigInt acc;
  for (int i = 1; i <= n_; ++i) {
    acc = 0;
    for (int j = 1; j <= i; ++j) {
      acc += table.entry(i, j);
      uint64_t* dst = prefix_.data() + offset_[static_cast<size_t>(i) - 1] +
                      static_cast<size_t>(j) * limbs_;
      size_t count = 0;
      mpz_export(dst, &count, -1, sizeof(uint64_t), 0, 0, acc.get_mpz_t());
    }
  }
}

int ClassSampler::pick(int i, int lo, int hi, SplitMix64& rng,
                       std::vector<uint64_t>& scratch) const {
  // scratch: 3 limb registers
  uint64_t* w = scratch.data();
  uint64_t* u = scratch.data() + limbs_;
  uint64_t* t = scratch.data() + 2 * limbs_;
  const uint64_t* base = level(i, lo - 1);
  limb_sub(level(i, hi), base, w, limbs_);
  if (limb_zero(w, limbs_)) throw std::logic_error("empty weight window in sampler");
  limb_uniform_below(w, u, limbs_, rng);
  limb_add(base, u, t, limbs_);
  // smallest k in [lo, hi] with S(i,k) > t
  int a = lo, b = hi;
  while (a < b) {
    int mid = (a + b) / 2;
    if (limb_cmp(level(i, mid), t, limbs_) > 0)
      b = mid;
    else
      a = mid + 1;
  }
  return a;
}

Permutation ClassSampler::sample(SplitMix64& rng) const {
  std::vector<uint64_t> scratch(3 * limbs_);
  std::vector<int> rank(static_cast<size_t>(n_));
  rank[static_cast<size_t>(n_) - 1] = pick(n_, 1, n_, rng, scratch);
  for (int i = n_; i >= 2; --i) {
    int j = rank[static_cast<size_t>(i) - 1];
    int lo, hi;
    if (ascent_[static_cast<size_t>(i) - 2]) {
      lo = 1;
      hi = j - 1;
    } else {
      lo = j;
      hi = i - 1;
    }
    rank[static_cast<size_t>(i) - 2] = pick(i - 1, lo, hi, rng, scratch);
  }
  Fenwick avail(n_);
  Permutation p(static_cast<size_t>(n_));
  for (int i = n_; i >= 1; --i)
    p[static_cast<size_t>(i) - 1] = avail.take_kth(rank[static_cast<size_t>(i) - 1]);
  return p;
}

std::vector<double> embed_continuous(const Permutation& p, SplitMix64& rng) {
  if (!is_permutation(p)) throw std::invalid_argument("not a permutation");
  const size_t n = p.size();
  std::vector<double> u(n);
  for (auto& v : u) v = rng.uniform01();
  std::vector<double> sorted = u;
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = sorted[static_cast<size_t>(p[i]) - 1];
  return x;
}

Permutation inverse_standardization(const std::vector<double>& x) {
  const size_t n = x.size();
  std::vector<size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return x[a] < x[b]; });
  Permutation p(n);
  for (size_t r = 0; r < n; ++r) p[idx[r]] = static_cast<int>(r) + 1;
  return p;
}

}  // namespace descents
