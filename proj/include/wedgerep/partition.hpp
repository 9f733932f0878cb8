#pragma once

// Integer partitions, stored trimmed (no trailing zeros). The canonical
// enumeration order everywhere is graded-lex: by weight, then lexicographic
// with larger first parts first.

#include <stdexcept>
#include <string>
#include <vector>

namespace wedgerep {

using Partition = std::vector<int>;

inline void validate_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && p[i] > p[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

inline int length(const Partition& p) { return static_cast<int>(p.size()); }

inline int weight(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

// Part at 1-based slot j, treating missing parts as 0.
inline int part(const Partition& p, int j) {
  return (j >= 1 && j <= length(p)) ? p[j - 1] : 0;
}

// All partitions with length <= r and weight <= W, in graded-lex order.
inline std::vector<Partition> enumerate_partitions(int r, int W) {
  if (r < 0 || W < 0) throw std::invalid_argument("enumerate_partitions: negative bound");
  std::vector<Partition> out;
  out.push_back({});
  for (int d = 1; d <= W; ++d) {
    Partition cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
      if (remaining == 0) {
        out.push_back(cur);
        return;
      }
      if (length(cur) == r) return;
      for (int m = std::min(remaining, max_part); m >= 1; --m) {
        cur.push_back(m);
        self(self, remaining - m, m);
        cur.pop_back();
      }
    };
    rec(rec, d, d);
  }
  return out;
}

// Deletes 1-based slot j (slots beyond the trimmed length hold zeros) and
// re-normalizes.
inline Partition remove_part(const Partition& p, int j, int slots) {
  if (j < 1 || j > slots) throw std::out_of_range("remove_part: slot out of range");
  Partition q;
  for (int i = 1; i <= slots; ++i) {
    if (i == j) continue;
    if (int v = part(p, i); v > 0) q.push_back(v);
  }
  return q;
}

inline Partition remove_part(const Partition& p, int j) {
  return remove_part(p, j, std::max(j, length(p)));
}

// lambda -> lambda + (1^{r-1}): adds 1 to each of the first r-1 slots.
// Defined only when length(lambda) <= r-1.
inline Partition pad_shift(const Partition& p, int r) {
  if (length(p) > r - 1)
    throw std::invalid_argument("pad_shift: requires length(p) <= r-1");
  Partition q;
  for (int i = 1; i <= r - 1; ++i) q.push_back(part(p, i) + 1);
  return q;
}

inline std::string partition_str(const Partition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

inline Partition parse_partition(const std::string& s) {
  Partition p;
  size_t i = 0;
  while (i < s.size()) {
    size_t j = s.find(',', i);
    if (j == std::string::npos) j = s.size();
    std::string tok = s.substr(i, j - i);
    if (!tok.empty()) p.push_back(std::stoi(tok));
    i = j + 1;
  }
  validate_partition(p);
  return p;
}

}  // namespace wedgerep
