#pragma once

#include <vector>

#include "descents/composition.hpp"

namespace descents {

// One-line notation, 1-based values: p[i-1] = sigma(i).
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p);

// Throws std::invalid_argument if p is not a bijection on {1..n}.
DescentSet descent_set_of(const Permutation& p);

// All permutations with descent set exactly D_c, in lexicographic order.
// Exhaustive; refuses sizes above the cap.
std::vector<Permutation> brute_force_class(const Composition& c, int cap = 10);

}  // namespace descents
