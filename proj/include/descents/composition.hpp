#pragma once

#include <string>
#include <vector>

namespace descents {

// Descent positions of permutations of {1..n}: a subset of {1..n-1}.
struct DescentSet {
  int n = 0;
  std::vector<int> members;  // strictly increasing

  bool contains(int i) const;
  std::string to_string() const;  // "{3,5,9}@10"
};

enum class Orientation { Ascending, Descending };

// Maximal monotone segment of cells in the ribbon diagram. Consecutive runs
// share exactly one cell and alternate orientation.
struct Run {
  int index = 0;       // 1-based position in reading order
  int first_cell = 0;  // inclusive
  int last_cell = 0;   // inclusive
  Orientation orientation = Orientation::Ascending;

  int length() const { return last_cell - first_cell + 1; }
};

// Whether the first/last cell of the ribbon is a peak (shared top cell) or a
// valley. '+' = peak, '-' = valley.
struct ModelType {
  bool first_is_peak = false;
  bool last_is_peak = false;

  std::string to_string() const;
};

class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  static Composition from_descents(const DescentSet& d);
  // Kernel chain written by run lengths, e.g. {2, b, 2}; first run ascending
  // unless told otherwise.
  static Composition from_run_lengths(const std::vector<int>& lengths,
                                      bool first_ascending = true);
  // All runs of length 2 (descents at 2, 4, ...).
  static Composition alternating(int n);
  // Accepts "3,2,4,1" and "{3,5,9}@10".
  static Composition parse(const std::string& text);

  int size() const { return n_; }
  const std::vector<int>& parts() const { return parts_; }
  DescentSet descent_set() const;
  // Composition of the first n cells.
  Composition truncated(int n) const;
  // Descent-set complement (value-complement bijection sigma -> n+1-sigma).
  Composition complement() const;
  std::string to_string() const;

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_;
};

std::vector<Run> runs(const Composition& c);
ModelType model_type(const Composition& c);
// Largest run length.
int amplitude(const Composition& c);

// All 2^(n-1) compositions of n, ordered by descent-set bitmask.
std::vector<Composition> all_compositions(int n);

}  // namespace descents
