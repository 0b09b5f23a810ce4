#pragma once

// Dense discrete joint distributions over named variables, built from
// chains of conditional probability tables, with entropy and conditional
// mutual information in bits.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ingms/channel.hpp"
#include "ingms/error.hpp"

namespace ingms {

inline constexpr std::size_t kMaxJointCells = std::size_t{1} << 24;
inline constexpr double kPmfTotalTolerance = 1e-10;
inline constexpr double kFactorRowTolerance = 1e-9;
inline constexpr double kClipTolerance = 1e-9;

struct Variable {
  std::string name;
  std::size_t size = 1;
  friend bool operator==(const Variable&, const Variable&) = default;
};

using VarList = std::vector<std::string>;

/// A probability table over the product alphabet of an ordered variable list.
/// The last variable varies fastest. Aliases name a variable by another name;
/// they carry no storage and resolve to the variable they were identified with.
class JointPMF {
 public:
  JointPMF() : probs_{1.0} {}

  JointPMF(std::vector<Variable> vars, std::vector<double> probs)
      : vars_(std::move(vars)), probs_(std::move(probs)) {
    std::size_t cells = 1;
    std::set<std::string> seen;
    for (const auto& v : vars_) {
      if (v.size == 0) throw Error(ErrorKind::InvalidArgument, "variable " + v.name + " has empty alphabet");
      if (!seen.insert(v.name).second)
        throw Error(ErrorKind::InvalidArgument, "duplicate variable " + v.name);
      cells *= v.size;
      if (cells > kMaxJointCells)
        throw Error(ErrorKind::TooLarge, "joint exceeds " + std::to_string(kMaxJointCells) + " cells");
    }
    if (probs_.size() != cells)
      throw Error(ErrorKind::InvalidArgument, "probability table has " + std::to_string(probs_.size()) +
                                                  " cells, expected " + std::to_string(cells));
    double total = 0.0;
    for (double p : probs_) {
      if (!(p >= 0.0)) throw Error(ErrorKind::NegativeProbability, "joint entry " + std::to_string(p));
      total += p;
    }
    if (std::abs(total - 1.0) > kPmfTotalTolerance)
      throw Error(ErrorKind::RowSumNotOne, "joint sums to " + std::to_string(total));
  }

  const std::vector<Variable>& vars() const { return vars_; }
  const std::vector<double>& probs() const { return probs_; }
  const std::map<std::string, std::string>& aliases() const { return aliases_; }
  std::size_t cells() const { return probs_.size(); }

  bool has(std::string_view name) const {
    return aliases_.count(std::string(name)) || find(name).has_value();
  }

  /// Canonical variable name behind `name`.
  std::string resolve(std::string_view name) const {
    std::string n(name);
    for (std::size_t hops = 0; hops <= aliases_.size(); ++hops) {
      auto it = aliases_.find(n);
      if (it == aliases_.end()) break;
      n = it->second;
    }
    if (!find(n)) throw Error(ErrorKind::UnknownVariable, std::string(name));
    return n;
  }

  std::size_t position(std::string_view name) const { return *find(resolve(name)); }
  std::size_t alphabet(std::string_view name) const { return vars_[position(name)].size; }

  void add_alias(std::string alias, std::string target) {
    if (find(alias)) throw Error(ErrorKind::BadFactorization, "alias " + alias + " is already a variable");
    resolve(target);
    aliases_[std::move(alias)] = std::move(target);
  }

  /// Sorted, de-duplicated storage positions of the named variables.
  std::vector<std::size_t> positions(const VarList& names) const {
    std::vector<std::size_t> pos;
    pos.reserve(names.size());
    for (const auto& n : names) pos.push_back(position(n));
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    return pos;
  }

  /// Marginal table over the variables at `pos` (sorted ascending).
  std::vector<double> marginal_table(const std::vector<std::size_t>& pos) const {
    std::size_t out_cells = 1;
    std::vector<std::size_t> out_stride(vars_.size(), 0);
    for (std::size_t k = pos.size(); k-- > 0;) {
      out_stride[pos[k]] = out_cells;
      out_cells *= vars_[pos[k]].size;
    }
    std::vector<double> out(out_cells, 0.0);
    if (pos.size() == vars_.size()) {
      out = probs_;
      return out;
    }
    std::vector<std::size_t> digit(vars_.size(), 0);
    std::size_t oi = 0;
    for (std::size_t c = 0; c < probs_.size(); ++c) {
      out[oi] += probs_[c];
      for (std::size_t k = vars_.size(); k-- > 0;) {
        if (++digit[k] < vars_[k].size) {
          oi += out_stride[k];
          break;
        }
        digit[k] = 0;
        oi -= out_stride[k] * (vars_[k].size - 1);
      }
    }
    return out;
  }

 private:
  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].name == name) return i;
    return std::nullopt;
  }

  std::vector<Variable> vars_;
  std::vector<double> probs_;
  std::map<std::string, std::string> aliases_;
};

namespace detail {

inline double entropy_of(const std::vector<double>& t) {
  double h = 0.0;
  for (double p : t)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

inline double clip(double v, const char* what) {
  if (v < -kClipTolerance)
    throw Error(ErrorKind::InternalConsistency, std::string(what) + " = " + std::to_string(v));
  return v < 0.0 ? 0.0 : v;
}

inline VarList concat(VarList a, const VarList& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace detail

/// Joint entropy H(names) in bits; repeated or aliased names count once.
inline double joint_entropy(const JointPMF& j, const VarList& names) {
  return detail::entropy_of(j.marginal_table(j.positions(names)));
}

/// H(A | G) = H(A, G) - H(G), with 0 log 0 = 0.
inline double entropy(const JointPMF& j, const VarList& a, const VarList& given = {}) {
  const double h = joint_entropy(j, detail::concat(a, given)) - joint_entropy(j, given);
  return detail::clip(h, "conditional entropy");
}

/// I(A; B | G) in bits.
inline double mutual_information(const JointPMF& j, const VarList& a, const VarList& b,
                                 const VarList& given = {}) {
  const VarList ag = detail::concat(a, given);
  const VarList bg = detail::concat(b, given);
  const double v = joint_entropy(j, ag) + joint_entropy(j, bg) -
                   joint_entropy(j, detail::concat(ag, b)) - joint_entropy(j, given);
  return detail::clip(v, "mutual information");
}

/// Sums out every variable not in `keep`. Aliases of kept variables survive.
inline JointPMF marginalize(const JointPMF& j, const VarList& keep) {
  const auto pos = j.positions(keep);
  std::vector<Variable> vars;
  for (auto p : pos) vars.push_back(j.vars()[p]);
  JointPMF out(std::move(vars), j.marginal_table(pos));
  for (const auto& [alias, target] : j.aliases()) {
    const std::string canon = j.resolve(target);
    if (std::binary_search(pos.begin(), pos.end(), j.position(canon))) out.add_alias(alias, canon);
  }
  return out;
}

/// Probabilities of the listed tuple (names may repeat or alias each other;
/// inconsistent assignments get zero mass). Layout: last name fastest.
struct TupleLaw {
  std::vector<std::size_t> sizes;
  std::vector<double> p;
};

inline TupleLaw tuple_law(const JointPMF& j, const VarList& names) {
  const auto pos = j.positions(names);
  const auto table = j.marginal_table(pos);
  std::vector<std::size_t> canon_stride(pos.size(), 1);
  for (std::size_t k = pos.size(); k-- > 1;) canon_stride[k - 1] = canon_stride[k] * j.vars()[pos[k]].size;
  std::vector<std::size_t> slot(names.size());
  TupleLaw out;
  std::size_t cells = 1;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto p = j.position(names[i]);
    slot[i] = static_cast<std::size_t>(std::lower_bound(pos.begin(), pos.end(), p) - pos.begin());
    out.sizes.push_back(j.vars()[p].size);
    cells *= out.sizes.back();
  }
  out.p.assign(cells, 0.0);
  std::vector<std::size_t> digit(names.size(), 0);
  std::vector<long> canon_val(pos.size());
  for (std::size_t c = 0; c < cells; ++c) {
    std::fill(canon_val.begin(), canon_val.end(), -1);
    bool consistent = true;
    std::size_t ci = 0;
    for (std::size_t i = 0; i < names.size() && consistent; ++i) {
      auto& v = canon_val[slot[i]];
      if (v < 0) {
        v = static_cast<long>(digit[i]);
        ci += digit[i] * canon_stride[slot[i]];
      } else if (static_cast<std::size_t>(v) != digit[i]) {
        consistent = false;
      }
    }
    if (consistent) out.p[c] = table[ci];
    for (std::size_t k = names.size(); k-- > 0;) {
      if (++digit[k] < out.sizes[k]) break;
      digit[k] = 0;
    }
  }
  return out;
}

/// Row-stochastic table P(targets | given). Rows whose conditioning event has
/// zero mass fall back to the unconditional law of the targets.
struct ConditionalTable {
  std::size_t rows = 1;
  std::size_t cols = 1;
  std::vector<std::size_t> given_sizes;
  std::vector<std::size_t> target_sizes;
  std::vector<double> p;

  const double* row(std::size_t r) const { return p.data() + r * cols; }
};

inline ConditionalTable conditional(const JointPMF& j, const VarList& targets, const VarList& given) {
  const auto law = tuple_law(j, detail::concat(given, targets));
  const auto fallback = tuple_law(j, targets);
  ConditionalTable t;
  for (std::size_t i = 0; i < given.size(); ++i) {
    t.given_sizes.push_back(law.sizes[i]);
    t.rows *= law.sizes[i];
  }
  for (std::size_t i = given.size(); i < law.sizes.size(); ++i) {
    t.target_sizes.push_back(law.sizes[i]);
    t.cols *= law.sizes[i];
  }
  t.p.assign(t.rows * t.cols, 0.0);
  for (std::size_t r = 0; r < t.rows; ++r) {
    double mass = 0.0;
    for (std::size_t c = 0; c < t.cols; ++c) mass += law.p[r * t.cols + c];
    for (std::size_t c = 0; c < t.cols; ++c)
      t.p[r * t.cols + c] = mass > 0.0 ? law.p[r * t.cols + c] / mass : fallback.p[c];
  }
  return t;
}

/// One conditional factor P(targets | given). `table` holds one row per
/// assignment of `given` (last fastest), each row listing the assignments of
/// `targets` (last fastest).
struct Factor {
  std::vector<Variable> targets;
  VarList given;
  std::vector<double> table;
};

/// Ordered chain of factors plus identifications (alias -> variable) and
/// constants (variables pinned to a one-symbol alphabet).
struct FactorizationSpec {
  std::vector<Factor> factors;
  std::vector<std::pair<std::string, std::string>> identify;
  std::vector<std::string> constants;

  FactorizationSpec& add(std::vector<Variable> targets, VarList given, std::vector<double> table) {
    factors.push_back({std::move(targets), std::move(given), std::move(table)});
    return *this;
  }
  FactorizationSpec& add(Variable target, VarList given, std::vector<double> table) {
    return add(std::vector<Variable>{std::move(target)}, std::move(given), std::move(table));
  }
  FactorizationSpec& constant(std::string name) {
    constants.push_back(std::move(name));
    return *this;
  }
  FactorizationSpec& alias(std::string name, std::string target) {
    identify.emplace_back(std::move(name), std::move(target));
    return *this;
  }
};

namespace detail {

// Appends `f` to the joint (vars, probs), conditioning on already-present
// variables. `resolve` maps aliases onto canonical names.
template <class Resolve>
void extend(std::vector<Variable>& vars, std::vector<double>& probs, const Factor& f, Resolve&& resolve) {
  std::vector<std::size_t> given_pos;
  std::size_t rows = 1;
  for (const auto& g : f.given) {
    const std::string canon = resolve(g);
    auto it = std::find_if(vars.begin(), vars.end(), [&](const Variable& v) { return v.name == canon; });
    if (it == vars.end())
      throw Error(ErrorKind::BadTopologicalOrder, "conditioning variable " + g + " is not defined earlier");
    given_pos.push_back(static_cast<std::size_t>(it - vars.begin()));
    rows *= it->size;
  }
  std::size_t cols = 1;
  for (const auto& t : f.targets) {
    if (t.size == 0) throw Error(ErrorKind::InvalidArgument, "variable " + t.name + " has empty alphabet");
    if (std::any_of(vars.begin(), vars.end(), [&](const Variable& v) { return v.name == t.name; }))
      throw Error(ErrorKind::BadFactorization, "variable " + t.name + " defined twice");
    cols *= t.size;
  }
  if (f.table.size() != rows * cols)
    throw Error(ErrorKind::BadFactorization, "factor for " + f.targets.front().name + " has " +
                                                 std::to_string(f.table.size()) + " entries, expected " +
                                                 std::to_string(rows * cols));
  for (std::size_t r = 0; r < rows; ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < cols; ++c) {
      const double p = f.table[r * cols + c];
      if (!(p >= 0.0))
        throw Error(ErrorKind::FactorNotNormalized, "negative entry in factor for " + f.targets.front().name);
      sum += p;
    }
    if (std::abs(sum - 1.0) > kFactorRowTolerance)
      throw Error(ErrorKind::FactorNotNormalized, "row " + std::to_string(r) + " of factor for " +
                                                      f.targets.front().name + " sums to " + std::to_string(sum));
  }
  if (probs.size() * cols > kMaxJointCells)
    throw Error(ErrorKind::TooLarge, "joint exceeds " + std::to_string(kMaxJointCells) + " cells");

  std::vector<std::size_t> stride(vars.size(), 1);
  for (std::size_t k = vars.size(); k-- > 1;) stride[k - 1] = stride[k] * vars[k].size;
  std::vector<double> next(probs.size() * cols, 0.0);
  for (std::size_t c = 0; c < probs.size(); ++c) {
    if (probs[c] == 0.0) continue;
    std::size_t r = 0;
    for (auto gp : given_pos) r = r * vars[gp].size + (c / stride[gp]) % vars[gp].size;
    for (std::size_t t = 0; t < cols; ++t) next[c * cols + t] = probs[c] * f.table[r * cols + t];
  }
  probs = std::move(next);
  vars.insert(vars.end(), f.targets.begin(), f.targets.end());
}

}  // namespace detail

/// Joint law of every factor's variables; when a channel is given, X1 and X2
/// must be defined and the outputs Y1, Y2 are appended.
inline JointPMF build_joint(const FactorizationSpec& f, const ChannelSpec* ch = nullptr) {
  std::map<std::string, std::string> alias;
  for (const auto& [a, t] : f.identify) {
    if (a == t || alias.count(a)) throw Error(ErrorKind::BadFactorization, "bad identification of " + a);
    alias[a] = t;
  }
  auto resolve = [&](const std::string& n) {
    std::string cur = n;
    for (std::size_t hops = 0; hops <= alias.size(); ++hops) {
      auto it = alias.find(cur);
      if (it == alias.end()) return cur;
      cur = it->second;
    }
    throw Error(ErrorKind::BadFactorization, "identification cycle through " + n);
  };

  std::vector<Variable> vars;
  std::vector<double> probs{1.0};
  for (const auto& c : f.constants) detail::extend(vars, probs, Factor{{{c, 1}}, {}, {1.0}}, resolve);
  for (const auto& factor : f.factors) {
    for (const auto& t : factor.targets)
      if (alias.count(t.name))
        throw Error(ErrorKind::BadFactorization, t.name + " is both identified and generated");
    detail::extend(vars, probs, factor, resolve);
  }
  if (ch) {
    require_valid(*ch);
    auto size_of = [&](const char* name) -> std::size_t {
      const std::string canon = resolve(name);
      for (const auto& v : vars)
        if (v.name == canon) return v.size;
      throw Error(ErrorKind::MissingVariable, std::string(name) + " is required to drive the channel");
    };
    if (size_of("X1") != ch->x1.size || size_of("X2") != ch->x2.size)
      throw Error(ErrorKind::AlphabetMismatch, "input alphabets do not match the channel");
    detail::extend(vars, probs, Factor{{{"Y1", ch->y1.size}, {"Y2", ch->y2.size}}, {"X1", "X2"}, ch->law},
                   resolve);
  }
  JointPMF j(std::move(vars), std::move(probs));
  for (const auto& [a, t] : alias) {
    const std::string canon = resolve(t);
    if (!j.has(canon)) throw Error(ErrorKind::UnknownVariable, "identification target " + t);
    j.add_alias(a, canon);
  }
  return j;
}

inline JointPMF build_joint(const FactorizationSpec& f, const ChannelSpec& ch) { return build_joint(f, &ch); }

}  // namespace ingms
