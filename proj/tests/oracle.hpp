#pragma once

// Brute-force reference computations used by the tests. Nothing here calls
// into the library's own marginalization, entropy or elimination code.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ingms/pmf.hpp"

namespace oracle {

// Marginal over `names` by walking every cell of the joint with mixed-radix
// decoding. Aliases are looked up through the joint's alias map.
inline std::map<std::vector<std::size_t>, double> marginal(const ingms::JointPMF& j,
                                                          const std::vector<std::string>& names) {
  const auto& vars = j.vars();
  std::vector<std::size_t> idx;
  for (const auto& n : names) {
    std::string canon = n;
    while (j.aliases().count(canon)) canon = j.aliases().at(canon);
    for (std::size_t k = 0; k < vars.size(); ++k)
      if (vars[k].name == canon) idx.push_back(k);
  }
  std::map<std::vector<std::size_t>, double> out;
  std::vector<std::size_t> digit(vars.size(), 0);
  for (std::size_t c = 0; c < j.probs().size(); ++c) {
    std::size_t rem = c;
    for (std::size_t k = vars.size(); k-- > 0;) {
      digit[k] = rem % vars[k].size;
      rem /= vars[k].size;
    }
    std::vector<std::size_t> key;
    for (auto k : idx) key.push_back(digit[k]);
    out[key] += j.probs()[c];
  }
  return out;
}

inline double H(const ingms::JointPMF& j, const std::vector<std::string>& names) {
  double h = 0.0;
  for (const auto& [k, p] : marginal(j, names))
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

inline std::vector<std::string> cat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline double Hc(const ingms::JointPMF& j, const std::vector<std::string>& a, const std::vector<std::string>& g) {
  return H(j, cat(a, g)) - H(j, g);
}

inline double I(const ingms::JointPMF& j, const std::vector<std::string>& a, const std::vector<std::string>& b,
                const std::vector<std::string>& g = {}) {
  return H(j, cat(a, g)) + H(j, cat(b, g)) - H(j, cat(cat(a, b), g)) - H(j, g);
}

// Letter typicality of the sequences `seqs` (one per name) against the
// marginal of `names`, by counting joint symbols directly.
inline bool letter_typical(const ingms::JointPMF& j, const std::vector<std::string>& names,
                           const std::vector<std::vector<std::uint32_t>>& seqs, double eps) {
  const auto law = marginal(j, names);
  const std::size_t n = seqs.at(0).size();
  std::map<std::vector<std::size_t>, std::size_t> count;
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<std::size_t> key;
    for (const auto& s : seqs) key.push_back(s[t]);
    ++count[key];
  }
  const double nd = static_cast<double>(n);
  for (const auto& [key, c] : count) {
    auto it = law.find(key);
    if (it == law.end() || it->second <= 0.0) return false;
  }
  for (const auto& [key, p] : law) {
    if (p <= 0.0) continue;
    const auto it = count.find(key);
    const double c = it == count.end() ? 0.0 : static_cast<double>(it->second);
    if (std::abs(c / nd - p) > eps * p + 1e-12) return false;
  }
  return true;
}

inline double h2(double p) { return p <= 0.0 || p >= 1.0 ? 0.0 : -p * std::log2(p) - (1 - p) * std::log2(1 - p); }

// Integer system sum_k a[r][k] x_k <= b[r].
struct IntSystem {
  std::size_t vars = 0;
  std::vector<std::vector<int>> a;
  std::vector<double> b;
};

// True iff some point of the grid {-10, -10 + 1/8, ..., 10}^vars satisfies
// every row. Depth-first; at each depth only the grid values allowed by every
// row, given the assigned prefix and the least the tail can add, are tried.
inline bool grid_feasible(const IntSystem& s, double lo = -10.0, double hi = 10.0, int per_unit = 8) {
  const int steps = static_cast<int>(std::lround((hi - lo) * per_unit));
  for (std::size_t r = 0; r < s.a.size(); ++r)
    if (s.vars == 0 && s.b[r] < -1e-12) return false;
  std::vector<std::vector<double>> tail(s.a.size(), std::vector<double>(s.vars + 1, 0.0));
  for (std::size_t r = 0; r < s.a.size(); ++r)
    for (std::size_t k = s.vars; k-- > 0;) {
      const double c = s.a[r][k];
      tail[r][k] = tail[r][k + 1] + std::min(c * lo, c * hi);
    }
  std::vector<double> partial(s.a.size(), 0.0);
  auto rec = [&](auto&& self, std::size_t d) -> bool {
    if (d == s.vars) return true;
    int first = 0, last = steps;
    for (std::size_t r = 0; r < s.a.size() && first <= last; ++r) {
      const double c = s.a[r][d];
      const double room = s.b[r] + 1e-12 - partial[r] - tail[r][d + 1];
      if (c == 0) {
        if (room < 0) return false;
        continue;
      }
      // c * (lo + i / per_unit) <= room
      const double bound = (room / c - lo) * per_unit;
      if (c > 0)
        last = std::min(last, static_cast<int>(std::floor(bound + 1e-9)));
      else
        first = std::max(first, static_cast<int>(std::ceil(bound - 1e-9)));
    }
    for (int i = first; i <= last; ++i) {
      const double v = lo + static_cast<double>(i) / per_unit;
      for (std::size_t r = 0; r < s.a.size(); ++r) partial[r] += s.a[r][d] * v;
      const bool found = self(self, d + 1);
      for (std::size_t r = 0; r < s.a.size(); ++r) partial[r] -= s.a[r][d] * v;
      if (found) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace oracle
