#include "descents/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace descents {

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[static_cast<size_t>(v) - 1]) return false;
    seen[static_cast<size_t>(v) - 1] = true;
  }
  return !p.empty();
}

DescentSet descent_set_of(const Permutation& p) {
  if (!is_permutation(p)) throw std::invalid_argument("not a permutation of {1..n}");
  DescentSet d{static_cast<int>(p.size()), {}};
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] > p[i + 1]) d.members.push_back(static_cast<int>(i) + 1);
  return d;
}

std::vector<Permutation> brute_force_class(const Composition& c, int cap) {
  const int n = c.size();
  if (n > cap) throw std::length_error("brute-force enumeration above cap");
  const DescentSet want = c.descent_set();
  Permutation p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do {
    bool ok = true;
    size_t j = 0;
    for (int i = 1; i <= n - 1 && ok; ++i) {
      bool desc = p[static_cast<size_t>(i) - 1] > p[static_cast<size_t>(i)];
      bool should = j < want.members.size() && want.members[j] == i;
      if (desc != should) ok = false;
      if (should) ++j;
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace descents
