#include "descents/composition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace descents {

bool DescentSet::contains(int i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

std::string DescentSet::to_string() const {
  std::string out = "{";
  for (size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members[i]);
  }
  out += "}@" + std::to_string(n);
  return out;
}

std::string ModelType::to_string() const {
  std::string out;
  out += first_is_peak ? '+' : '-';
  out += last_is_peak ? '+' : '-';
  return out;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)), n_(0) {
  if (parts_.empty()) throw std::invalid_argument("composition needs at least one part");
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
    n_ += p;
  }
}

Composition Composition::from_descents(const DescentSet& d) {
  if (d.n < 1) throw std::invalid_argument("descent set size must be positive");
  std::vector<int> parts;
  int prev = 0;
  for (int m : d.members) {
    if (m <= prev || m >= d.n) throw std::invalid_argument("descent outside {1..n-1} or not increasing");
    parts.push_back(m - prev);
    prev = m;
  }
  parts.push_back(d.n - prev);
  return Composition(std::move(parts));
}

Composition Composition::from_run_lengths(const std::vector<int>& lengths, bool first_ascending) {
  if (lengths.empty()) throw std::invalid_argument("need at least one run");
  for (int l : lengths)
    if (l < 2 && lengths.size() > 1) throw std::invalid_argument("run lengths must be >= 2");
  int n = 1;
  for (int l : lengths) n += l - 1;  // consecutive runs share a cell
  std::vector<int> members;
  int cell = 1;
  bool ascending = first_ascending;
  for (int l : lengths) {
    if (!ascending)
      for (int i = 0; i < l - 1; ++i) members.push_back(cell + i);
    cell += l - 1;
    ascending = !ascending;
  }
  std::sort(members.begin(), members.end());
  return from_descents(DescentSet{n, std::move(members)});
}

Composition Composition::alternating(int n) {
  if (n < 1) throw std::invalid_argument("size must be positive");
  std::vector<int> members;
  for (int i = 2; i <= n - 1; i += 2) members.push_back(i);
  return from_descents(DescentSet{n, std::move(members)});
}

Composition Composition::parse(const std::string& text) {
  auto parse_int = [&](const std::string& tok) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed composition spec: " + text);
    }
    if (used != tok.size()) throw std::invalid_argument("malformed composition spec: " + text);
    return v;
  };
  auto at = text.find('@');
  if (!text.empty() && text[0] == '{') {
    auto close = text.find('}');
    if (close == std::string::npos || at == std::string::npos || at < close)
      throw std::invalid_argument("malformed descent-set spec: " + text);
    int n = parse_int(text.substr(at + 1));
    std::vector<int> members;
    std::string inner = text.substr(1, close - 1);
    std::stringstream ss(inner);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      members.push_back(parse_int(tok));
    }
    std::sort(members.begin(), members.end());
    return from_descents(DescentSet{n, std::move(members)});
  }
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    parts.push_back(parse_int(tok));
  }
  if (parts.empty()) throw std::invalid_argument("empty composition spec: " + text);
  return Composition(std::move(parts));
}

DescentSet Composition::descent_set() const {
  DescentSet d{n_, {}};
  int acc = 0;
  for (size_t i = 0; i + 1 < parts_.size(); ++i) {
    acc += parts_[i];
    d.members.push_back(acc);
  }
  return d;
}

Composition Composition::truncated(int n) const {
  if (n < 1 || n > n_) throw std::invalid_argument("truncation size out of range");
  std::vector<int> parts;
  int remaining = n;
  for (int p : parts_) {
    if (remaining <= 0) break;
    parts.push_back(std::min(p, remaining));
    remaining -= p;
  }
  return Composition(std::move(parts));
}

Composition Composition::complement() const {
  DescentSet d = descent_set();
  std::vector<int> comp;
  size_t j = 0;
  for (int i = 1; i <= n_ - 1; ++i) {
    if (j < d.members.size() && d.members[j] == i) {
      ++j;
    } else {
      comp.push_back(i);
    }
  }
  return from_descents(DescentSet{n_, std::move(comp)});
}

std::string Composition::to_string() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Run> runs(const Composition& c) {
  const int n = c.size();
  std::vector<Run> out;
  if (n == 1) {
    out.push_back(Run{1, 1, 1, Orientation::Ascending});
    return out;
  }
  DescentSet d = c.descent_set();
  // direction of the comparison between cells i and i+1, for i = 1..n-1
  auto dir = [&](int i) {
    return d.contains(i) ? Orientation::Descending : Orientation::Ascending;
  };
  int start = 1;
  Orientation cur = dir(1);
  for (int i = 2; i <= n - 1; ++i) {
    if (dir(i) != cur) {
      out.push_back(Run{static_cast<int>(out.size()) + 1, start, i, cur});
      start = i;
      cur = dir(i);
    }
  }
  out.push_back(Run{static_cast<int>(out.size()) + 1, start, n, cur});
  return out;
}

ModelType model_type(const Composition& c) {
  auto rs = runs(c);
  ModelType t;
  t.first_is_peak = rs.front().orientation == Orientation::Descending;
  t.last_is_peak = rs.back().orientation == Orientation::Ascending;
  return t;
}

int amplitude(const Composition& c) {
  int best = 0;
  for (const auto& r : runs(c)) best = std::max(best, r.length());
  return best;
}

std::vector<Composition> all_compositions(int n) {
  if (n < 1 || n > 30) throw std::invalid_argument("composition enumeration size out of range");
  std::vector<Composition> out;
  out.reserve(1u << (n - 1));
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    DescentSet d{n, {}};
    for (int i = 1; i <= n - 1; ++i)
      if (mask & (1u << (i - 1))) d.members.push_back(i);
    out.push_back(Composition::from_descents(d));
  }
  return out;
}

}  // namespace descents
