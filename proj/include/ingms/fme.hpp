#pragma once

// Linear inequality systems with integer coefficients and real right-hand
// sides, and exact Fourier-Motzkin projection over them.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ingms/error.hpp"

namespace ingms {

inline constexpr double kFeasibilityTolerance = 1e-9;
inline constexpr double kImplicationSlack = 1e-7;

/// sum_k coeffs[k] * k <= rhs
struct LinIneq {
  std::map<std::string, std::int64_t> coeffs;
  double rhs = 0.0;
  std::string label;
};

/// Formats a real with 12 significant digits.
inline std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

class LinSys {
 public:
  struct Row {
    std::vector<std::int64_t> a;
    double rhs = 0.0;
    std::string label;
    std::vector<std::uint64_t> origins;  // bitset of the input rows this one was combined from
    std::uint64_t eliminated = 0;        // variables cancelled while combining it
    std::uint64_t touched = 0;           // variables present in any of its origins
  };

  LinSys() = default;
  explicit LinSys(std::vector<std::string> variables) {
    for (auto& v : variables) add_variable(std::move(v));
  }

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::vector<Row>& mutable_rows() { return rows_; }
  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
  }

  std::size_t require(const std::string& name) const {
    if (auto i = index_of(name)) return *i;
    throw Error(ErrorKind::UnknownVariable, name);
  }

  /// Declares a variable (no-op when already present); returns its index.
  std::size_t add_variable(std::string name) {
    if (auto i = index_of(name)) return *i;
    vars_.push_back(std::move(name));
    for (auto& r : rows_) r.a.push_back(0);
    return vars_.size() - 1;
  }

  LinSys& add(const LinIneq& q) {
    Row r{std::vector<std::int64_t>(vars_.size(), 0), q.rhs, q.label, {}};
    for (const auto& [name, c] : q.coeffs) r.a[require(name)] += c;
    rows_.push_back(std::move(r));
    return *this;
  }

  LinSys& add(std::map<std::string, std::int64_t> coeffs, double rhs, std::string label = {}) {
    return add(LinIneq{std::move(coeffs), rhs, std::move(label)});
  }

  /// lower <= sum coeffs, i.e. -sum coeffs <= -lower.
  LinSys& add_at_least(const std::map<std::string, std::int64_t>& coeffs, double lower, std::string label = {}) {
    std::map<std::string, std::int64_t> neg;
    for (const auto& [n, c] : coeffs) neg[n] = -c;
    return add(LinIneq{std::move(neg), -lower, std::move(label)});
  }

  LinSys& add_nonnegativity(const std::vector<std::string>& names) {
    for (const auto& n : names) add({{n, -1}}, 0.0, n + ">=0");
    return *this;
  }

  void add_row(Row r) {
    if (r.a.size() != vars_.size()) throw Error(ErrorKind::InvalidArgument, "row width mismatch");
    rows_.push_back(std::move(r));
  }

  LinSys& append(const LinSys& other) {
    for (const auto& v : other.vars_) add_variable(v);
    for (const auto& r : other.rows_) {
      LinIneq q = other.row(&r - other.rows_.data());
      add(q);
    }
    return *this;
  }

  LinIneq row(std::size_t i) const {
    LinIneq q{{}, rows_.at(i).rhs, rows_[i].label};
    for (std::size_t k = 0; k < vars_.size(); ++k)
      if (rows_[i].a[k] != 0) q.coeffs[vars_[k]] = rows_[i].a[k];
    return q;
  }

  static bool is_constant(const Row& r) {
    return std::all_of(r.a.begin(), r.a.end(), [](std::int64_t c) { return c == 0; });
  }

  /// Left-hand side at a point given for every variable of the system.
  double lhs(const Row& r, const std::map<std::string, double>& point) const {
    double s = 0.0;
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      if (r.a[k] == 0) continue;
      auto it = point.find(vars_[k]);
      if (it == point.end()) throw Error(ErrorKind::UnknownVariable, "no value for " + vars_[k]);
      s += static_cast<double>(r.a[k]) * it->second;
    }
    return s;
  }

  /// Index of the first row the point violates by more than `tol`.
  std::optional<std::size_t> first_violated(const std::map<std::string, double>& point,
                                            double tol = kFeasibilityTolerance) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (lhs(rows_[i], point) > rows_[i].rhs + tol) return i;
    return std::nullopt;
  }

  bool contains(const std::map<std::string, double>& point, double tol = kFeasibilityTolerance) const {
    return !first_violated(point, tol).has_value();
  }

  /// Replaces `name` by `expr + constant` and drops it from the variable list.
  LinSys substitute(const std::string& name, const std::map<std::string, std::int64_t>& expr,
                    double constant = 0.0) const {
    const std::size_t v = require(name);
    LinSys out;
    for (std::size_t k = 0; k < vars_.size(); ++k)
      if (k != v) out.add_variable(vars_[k]);
    for (const auto& [n, c] : expr)
      if (n != name) out.add_variable(n);
    for (const auto& r : rows_) {
      Row nr{std::vector<std::int64_t>(out.vars_.size(), 0), r.rhs, r.label, {}};
      for (std::size_t k = 0; k < vars_.size(); ++k)
        if (k != v) nr.a[*out.index_of(vars_[k])] += r.a[k];
      if (r.a[v] != 0) {
        for (const auto& [n, c] : expr) {
          if (n == name) throw Error(ErrorKind::InvalidArgument, "self-referential substitution of " + name);
          nr.a[*out.index_of(n)] += r.a[v] * c;
        }
        nr.rhs -= static_cast<double>(r.a[v]) * constant;
      }
      out.rows_.push_back(std::move(nr));
    }
    return out;
  }

  /// Pins a variable to a value.
  LinSys fix(const std::string& name, double value) const { return substitute(name, {}, value); }

  LinSys fix(const std::map<std::string, double>& values) const {
    LinSys s = *this;
    for (const auto& [n, v] : values) s = s.fix(n, v);
    return s;
  }

  /// Drops every row whose label is in `labels`.
  LinSys without(const std::vector<std::string>& labels) const {
    LinSys out = *this;
    std::erase_if(out.rows_, [&](const Row& r) {
      return std::find(labels.begin(), labels.end(), r.label) != labels.end();
    });
    return out;
  }

  /// One row per line: `+1*R10 -2*B01 <= 0.5  # label`.
  std::string to_text() const {
    std::ostringstream os;
    for (const auto& r : rows_) {
      bool first = true;
      for (std::size_t k = 0; k < vars_.size(); ++k) {
        if (r.a[k] == 0) continue;
        if (!first) os << ' ';
        os << (r.a[k] > 0 ? "+" : "-") << (r.a[k] > 0 ? r.a[k] : -r.a[k]) << '*' << vars_[k];
        first = false;
      }
      if (first) os << '0';
      os << " <= " << format_real(r.rhs);
      if (!r.label.empty()) os << "  # " << r.label;
      os << '\n';
    }
    return os.str();
  }

  static LinSys from_text(const std::string& text) {
    LinSys s;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
      ++lineno;
      std::string label;
      if (auto h = line.find('#'); h != std::string::npos) {
        label = line.substr(h + 1);
        label.erase(0, label.find_first_not_of(' '));
        line.erase(h);
      }
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      const auto le = line.find("<=");
      if (le == std::string::npos)
        throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": missing '<='");
      LinIneq q;
      q.label = label;
      try {
        q.rhs = std::stod(line.substr(le + 2));
      } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad right-hand side");
      }
      std::istringstream terms(line.substr(0, le));
      std::string tok;
      while (terms >> tok) {
        if (tok == "0") continue;
        const auto star = tok.find('*');
        if (star == std::string::npos || star == 0)
          throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad term '" + tok + "'");
        std::int64_t c = 0;
        try {
          c = std::stoll(tok.substr(0, star));
        } catch (const std::exception&) {
          throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad coefficient '" + tok + "'");
        }
        const std::string name = tok.substr(star + 1);
        s.add_variable(name);
        q.coeffs[name] += c;
      }
      s.add(q);
    }
    return s;
  }

 private:
  std::vector<std::string> vars_;
  std::vector<Row> rows_;
};

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::InternalConsistency, "coefficient overflow");
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::InternalConsistency, "coefficient overflow");
  return r;
}

inline std::vector<std::uint64_t> merge_origins(const std::vector<std::uint64_t>& a,
                                                const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] |= a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] |= b[i];
  return out;
}

inline std::size_t origin_count(const std::vector<std::uint64_t>& h) {
  std::size_t n = 0;
  for (auto w : h) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

// True iff every origin of `sub` is an origin of `super`.
inline bool origins_within(const std::vector<std::uint64_t>& sub, const std::vector<std::uint64_t>& super) {
  for (std::size_t i = 0; i < sub.size(); ++i)
    if (sub[i] & ~(i < super.size() ? super[i] : 0)) return false;
  return true;
}

inline std::string merge_labels(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty() || a == b) return a;
  std::vector<std::string> parts;
  for (const std::string* s : {&a, &b}) {
    std::size_t start = 0;
    while (start <= s->size()) {
      auto end = s->find(" + ", start);
      if (end == std::string::npos) end = s->size();
      parts.push_back(s->substr(start, end - start));
      start = end + 3;
    }
  }
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " + ") + p;
  return out;
}

struct KeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

// Coefficients divided by their gcd, and the divisor (0 for a constant row).
inline std::pair<std::vector<std::int64_t>, std::int64_t> direction(const LinSys::Row& r) {
  std::int64_t g = 0;
  for (auto c : r.a) g = std::gcd(g, c < 0 ? -c : c);
  if (g <= 1) return {r.a, g};
  std::vector<std::int64_t> d(r.a.size());
  for (std::size_t k = 0; k < r.a.size(); ++k) d[k] = r.a[k] / g;
  return {d, g};
}

// Removes trivially true constant rows, and among rows with proportional
// coefficients those implied by another one. With `respect_history`, a row
// is only dropped in favour of one whose origin set is a subset of its own,
// which keeps the origin-count pruning of eliminate_all sound.
inline void prune(LinSys& sys, bool respect_history) {
  auto& rows = sys.mutable_rows();
  std::vector<LinSys::Row> kept_constant;
  std::unordered_map<std::vector<std::int64_t>, std::vector<std::size_t>, KeyHash> groups;
  std::vector<double> scaled_rhs(rows.size());
  std::vector<bool> keep(rows.size(), true);
  std::optional<std::size_t> worst_constant;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto [dir, g] = direction(rows[i]);
    if (g == 0) {
      if (rows[i].rhs >= -kFeasibilityTolerance) {
        keep[i] = false;
      } else if (!worst_constant || rows[i].rhs < rows[*worst_constant].rhs) {
        if (worst_constant) keep[*worst_constant] = false;
        worst_constant = i;
      } else {
        keep[i] = false;
      }
      continue;
    }
    scaled_rhs[i] = rows[i].rhs / static_cast<double>(g);
    groups[std::move(dir)].push_back(i);
  }
  std::vector<std::size_t> count(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) count[i] = origin_count(rows[i].origins);
  for (auto& [dir, members] : groups) {
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end(), [&](std::size_t x, std::size_t y) {
      if (scaled_rhs[x] != scaled_rhs[y]) return scaled_rhs[x] < scaled_rhs[y];
      return count[x] < count[y];
    });
    if (!respect_history) {
      for (std::size_t m = 1; m < members.size(); ++m) keep[members[m]] = false;
      continue;
    }
    std::vector<std::size_t> kept{members.front()};
    for (std::size_t m = 1; m < members.size(); ++m) {
      const auto& mine = rows[members[m]].origins;
      const bool dominated = std::any_of(kept.begin(), kept.end(), [&](std::size_t k) {
        return origins_within(rows[k].origins, mine);
      });
      if (dominated) {
        keep[members[m]] = false;
      } else {
        kept.push_back(members[m]);
      }
    }
  }
  std::vector<LinSys::Row> out;
  out.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (keep[i]) out.push_back(std::move(rows[i]));
  rows = std::move(out);
}

// Plain Fourier-Motzkin step on variable index v; the variable is removed.
// `vbit` is recorded in the eliminated set of every combined row. Labels of
// combined rows are joined only when `join_labels` is set.
inline LinSys eliminate_index(const LinSys& sys, std::size_t v, std::uint64_t vbit = 0, bool join_labels = true) {
  std::vector<std::string> vars;
  for (std::size_t k = 0; k < sys.variables().size(); ++k)
    if (k != v) vars.push_back(sys.variables()[k]);
  LinSys out(vars);
  auto drop = [&](const std::vector<std::int64_t>& a) {
    std::vector<std::int64_t> r;
    r.reserve(a.size() - 1);
    for (std::size_t k = 0; k < a.size(); ++k)
      if (k != v) r.push_back(a[k]);
    return r;
  };
  std::vector<const LinSys::Row*> pos, neg;
  for (const auto& r : sys.rows()) {
    if (r.a[v] > 0) {
      pos.push_back(&r);
    } else if (r.a[v] < 0) {
      neg.push_back(&r);
    } else {
      out.add_row({drop(r.a), r.rhs, r.label, r.origins, r.eliminated, r.touched});
    }
  }
  for (const auto* p : pos) {
    for (const auto* q : neg) {
      const std::int64_t cp = p->a[v];
      const std::int64_t cq = -q->a[v];
      const std::int64_t g = std::gcd(cp, cq);
      const std::int64_t mp = cq / g;
      const std::int64_t mq = cp / g;
      LinSys::Row r;
      r.a.reserve(p->a.size() - 1);
      for (std::size_t k = 0; k < p->a.size(); ++k)
        if (k != v) r.a.push_back(checked_add(checked_mul(mp, p->a[k]), checked_mul(mq, q->a[k])));
      r.rhs = static_cast<double>(mp) * p->rhs + static_cast<double>(mq) * q->rhs;
      if (join_labels) r.label = merge_labels(p->label, q->label);
      r.origins = merge_origins(p->origins, q->origins);
      r.eliminated = p->eliminated | q->eliminated | vbit;
      r.touched = p->touched | q->touched;
      out.add_row(std::move(r));
    }
  }
  return out;
}

}  // namespace detail

/// Projects `v` out of the system by standard Fourier-Motzkin elimination.
/// Trivially true constant rows are dropped; violated ones are kept as an
/// infeasibility witness.
inline LinSys eliminate(const LinSys& sys, const std::string& v) {
  LinSys out = detail::eliminate_index(sys, sys.require(v));
  std::erase_if(out.mutable_rows(), [](const LinSys::Row& r) {
    return LinSys::is_constant(r) && r.rhs >= -kFeasibilityTolerance;
  });
  return out;
}

namespace detail {

// Dense two-phase simplex for min c.y subject to M y = r, y >= 0, with
// Bland's rule. Stops early once the objective reaches `stop_at`.
class Simplex {
 public:
  enum class Outcome { Optimal, ReachedStop, Infeasible, Unbounded };

  Simplex(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), t_(rows * (cols + rows + 1), 0.0) {}

  double& at(std::size_t i, std::size_t j) { return t_[i * width() + j]; }
  double& rhs(std::size_t i) { return t_[i * width() + width() - 1]; }

  Outcome minimize(const std::vector<double>& cost, double stop_at) {
    for (std::size_t i = 0; i < m_; ++i) {
      if (rhs(i) < 0.0)
        for (std::size_t j = 0; j < width(); ++j) at(i, j) = -at(i, j);
      at(i, n_ + i) = 1.0;
    }
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) basis_[i] = n_ + i;
    std::vector<double> phase1(n_ + m_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) phase1[n_ + i] = 1.0;
    run(phase1, n_ + m_, -std::numeric_limits<double>::infinity());
    if (objective(phase1) > 1e-9) return Outcome::Infeasible;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (std::abs(at(i, j)) > kPivot) {
          pivot(i, j);
          break;
        }
    }
    std::vector<double> full(cost);
    full.resize(n_ + m_, 0.0);
    return run(full, n_, stop_at);
  }

  double objective(const std::vector<double>& cost) {
    double v = 0.0;
    for (std::size_t i = 0; i < m_; ++i) v += cost[basis_[i]] * rhs(i);
    return v;
  }

 private:
  static constexpr double kPivot = 1e-9;

  std::size_t width() const { return n_ + m_ + 1; }

  void pivot(std::size_t r, std::size_t c) {
    const double p = at(r, c);
    for (std::size_t j = 0; j < width(); ++j) at(r, j) /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width(); ++j) at(i, j) -= f * at(r, j);
    }
    basis_[r] = c;
  }

  // Columns >= `enter_limit` never enter the basis.
  Outcome run(const std::vector<double>& cost, std::size_t enter_limit, double stop_at) {
    std::vector<bool> basic(n_ + m_, false);
    for (;;) {
      if (objective(cost) <= stop_at) return Outcome::ReachedStop;
      std::fill(basic.begin(), basic.end(), false);
      for (auto b : basis_) basic[b] = true;
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < enter_limit && !enter; ++j) {
        if (basic[j]) continue;
        double reduced = cost[j];
        for (std::size_t i = 0; i < m_; ++i) reduced -= cost[basis_[i]] * at(i, j);
        if (reduced < -kPivot) enter = j;
      }
      if (!enter) return Outcome::Optimal;
      std::optional<std::size_t> leave;
      double best = 0.0;
      for (std::size_t i = 0; i < m_; ++i) {
        const double a = at(i, *enter);
        if (a <= kPivot) continue;
        const double ratio = rhs(i) / a;
        if (!leave || ratio < best - 1e-12 || (ratio <= best + 1e-12 && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return Outcome::Unbounded;
      pivot(*leave, *enter);
    }
  }

  std::size_t m_, n_;
  std::vector<double> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Drops every row implied by the remaining ones, deciding each row by a
/// linear program. An infeasible system collapses to the single row 0 <= -1.
inline LinSys remove_redundant(const LinSys& sys) {
  LinSys out(sys.variables());
  const auto& rows = sys.rows();
  const std::size_t n = sys.variables().size();
  std::vector<bool> keep(rows.size(), true);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (LinSys::is_constant(rows[i])) {
      if (rows[i].rhs >= -kFeasibilityTolerance) keep[i] = false;
      continue;
    }
    // Dual of max a_i.x over the kept rows, with row i itself loosened by 1:
    // min sum b_j y_j subject to sum y_j a_j = a_i, y >= 0.
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (keep[j] && !LinSys::is_constant(rows[j])) cols.push_back(j);
    detail::Simplex lp(n, cols.size());
    std::vector<double> cost(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto& r = rows[cols[c]];
      for (std::size_t k = 0; k < n; ++k) lp.at(k, c) = static_cast<double>(r.a[k]);
      cost[c] = cols[c] == i ? r.rhs + 1.0 : r.rhs;
    }
    for (std::size_t k = 0; k < n; ++k) lp.rhs(k) = static_cast<double>(rows[i].a[k]);
    const auto outcome = lp.minimize(cost, rows[i].rhs + kFeasibilityTolerance);
    if (outcome == detail::Simplex::Outcome::Unbounded) {
      out.add_row({std::vector<std::int64_t>(n, 0), -1.0, "infeasible", {}, 0, 0});
      return out;
    }
    if (outcome == detail::Simplex::Outcome::ReachedStop ||
        (outcome == detail::Simplex::Outcome::Optimal && lp.objective(cost) <= rows[i].rhs + kFeasibilityTolerance))
      keep[i] = false;
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (keep[i]) out.add_row(rows[i]);
  return out;
}

namespace detail {

// Intermediate systems larger than this are cut down by LP before the next
// elimination step.
#ifndef INGMS_LP_PRUNE_ROWS
#define INGMS_LP_PRUNE_ROWS 200
#endif
inline constexpr std::size_t kLpPruneRows = INGMS_LP_PRUNE_ROWS;

// Sequential elimination that discards rows proven redundant by their
// history: a row combined from |H| input rows is dropped when |H| exceeds
// 1 + (variables cancelled in its derivation) + (variables that vanished
// from it without being cancelled).
class Projection {
 public:
  explicit Projection(const LinSys& sys) : cur_(sys), track_(sys.variables().size() <= 64) {
    for (std::size_t k = 0; k < cur_.variables().size(); ++k) ids_.push_back(static_cast<std::uint32_t>(k));
    start_histories();
    prune(cur_, true);
  }

  const LinSys& current() const { return cur_; }

  void eliminate(std::size_t col) {
    const std::uint64_t vbit = track_ ? std::uint64_t{1} << ids_[col] : 0;
    cur_ = eliminate_index(cur_, col, vbit, false);
    ids_.erase(ids_.begin() + static_cast<std::ptrdiff_t>(col));
    ++steps_;
    std::erase_if(cur_.mutable_rows(), [&](const LinSys::Row& r) {
      const std::size_t n = origin_count(r.origins);
      if (!track_) return n > steps_ + 1;
      const std::uint64_t implicit = r.touched & ~r.eliminated & ~support(r);
      return n > static_cast<std::size_t>(1 + std::popcount(r.eliminated) + std::popcount(implicit));
    });
    prune(cur_, true);
    // Histories only certify redundancy among rows derived from one starting
    // system, so after an LP pass the survivors become the new start.
    if (cur_.size() > kLpPruneRows) {
      settle_labels();
      cur_ = remove_redundant(cur_);
      start_histories();
      steps_ = 0;
    }
  }

  LinSys finish() {
    prune(cur_, false);
    settle_labels();
    for (auto& r : cur_.mutable_rows()) {
      r.origins.clear();
      r.eliminated = r.touched = 0;
    }
    return remove_redundant(cur_);
  }

 private:
  void start_histories() {
    labels_.clear();
    auto& rows = cur_.mutable_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      labels_.push_back(rows[i].label);
      rows[i].origins.assign(i / 64 + 1, 0);
      rows[i].origins[i / 64] = std::uint64_t{1} << (i % 64);
      rows[i].eliminated = 0;
      rows[i].touched = track_ ? support(rows[i]) : 0;
    }
  }

  void settle_labels() {
    for (auto& r : cur_.mutable_rows()) {
      if (origin_count(r.origins) <= 1) continue;
      r.label.clear();
      for (std::size_t i = 0; i < labels_.size(); ++i)
        if (i / 64 < r.origins.size() && (r.origins[i / 64] >> (i % 64) & 1)) r.label = merge_labels(r.label, labels_[i]);
    }
  }

  std::uint64_t support(const LinSys::Row& r) const {
    std::uint64_t m = 0;
    for (std::size_t k = 0; k < r.a.size(); ++k)
      if (r.a[k] != 0) m |= std::uint64_t{1} << ids_[k];
    return m;
  }

  LinSys cur_;
  bool track_;
  std::vector<std::uint32_t> ids_;
  std::vector<std::string> labels_;
  std::size_t steps_ = 0;
};

}  // namespace detail

/// Eliminates `vs` in order, dropping duplicate, dominated and
/// history-redundant rows along the way.
inline LinSys eliminate_all(const LinSys& sys, const std::vector<std::string>& vs) {
  for (const auto& v : vs) sys.require(v);
  detail::Projection p(sys);
  for (const auto& v : vs) p.eliminate(p.current().require(v));
  return p.finish();
}

/// Projects out every variable not listed in `keep`, choosing the next
/// variable greedily (fewest generated rows) at each step.
inline LinSys project_onto(const LinSys& sys, const std::vector<std::string>& keep) {
  detail::Projection p(sys);
  for (;;) {
    const LinSys& cur = p.current();
    std::optional<std::size_t> best;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t k = 0; k < cur.variables().size(); ++k) {
      if (std::find(keep.begin(), keep.end(), cur.variables()[k]) != keep.end()) continue;
      std::size_t pos = 0, neg = 0;
      for (const auto& r : cur.rows()) {
        pos += r.a[k] > 0;
        neg += r.a[k] < 0;
      }
      const std::size_t cost = pos * neg;
      if (cost < best_cost) {
        best_cost = cost;
        best = k;
      }
    }
    if (!best) break;
    p.eliminate(*best);
  }
  return p.finish();
}

/// True iff no constant row of the fully projected system is violated.
inline bool is_feasible(const LinSys& sys) {
  const LinSys done = project_onto(sys, {});
  return std::none_of(done.rows().begin(), done.rows().end(), [](const LinSys::Row& r) {
    return LinSys::is_constant(r) && r.rhs < -kFeasibilityTolerance;
  });
}

/// True iff every point of `sys` satisfies `row` (up to a small slack).
inline bool implies(const LinSys& sys, const LinIneq& row) {
  LinSys probe = sys;
  for (const auto& [n, c] : row.coeffs) probe.add_variable(n);
  LinIneq reversed{{}, -row.rhs - kImplicationSlack, "negated"};
  for (const auto& [n, c] : row.coeffs) reversed.coeffs[n] = -c;
  probe.add(reversed);
  return !is_feasible(probe);
}

/// True iff each system implies every row of the other.
inline bool equivalent(const LinSys& a, const LinSys& b) {
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!implies(a, b.row(i))) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!implies(b, a.row(i))) return false;
  return true;
}

}  // namespace ingms
