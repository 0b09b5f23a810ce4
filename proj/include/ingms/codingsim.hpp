#pragma once

// Monte Carlo realization of the superposition/binning random code at small
// blocklength: codebook forests, minimum-index bin selection, joint-typicality
// decoding with error-event attribution, and a covering-lemma experiment.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ingms/channel.hpp"
#include "ingms/error.hpp"
#include "ingms/pmf.hpp"
#include "ingms/random.hpp"
#include "ingms/region.hpp"

namespace ingms {

inline constexpr double kTypicalitySlack = 1e-12;

using Symbol = std::uint32_t;
using Sequence = std::vector<Symbol>;

struct TypicalityParams {
  double epsilon = 0.25;
  std::size_t n = 8;

  void validate() const {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw Error(ErrorKind::InvalidArgument, "epsilon must lie in (0, 1)");
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "blocklength must be positive");
  }
};

/// Smallest nonzero probability of the joint.
inline double p_min(const JointPMF& j) {
  double m = 1.0;
  for (double p : j.probs())
    if (p > 0.0) m = std::min(m, p);
  return m;
}

/// Letter-typical set of a tuple law: every joint symbol a must satisfy
/// |N(a)/n - P(a)| <= eps P(a).
class TypicalSet {
 public:
  TypicalSet() = default;

  TypicalSet(TupleLaw law, TypicalityParams typ) : law_(std::move(law)), typ_(typ) {
    typ_.validate();
    stride_.assign(law_.sizes.size(), 1);
    for (std::size_t k = law_.sizes.size(); k-- > 1;) stride_[k - 1] = stride_[k] * law_.sizes[k];
    for (double p : law_.p)
      if ((1.0 - typ_.epsilon) * p * static_cast<double>(typ_.n) > kTypicalitySlack * static_cast<double>(typ_.n))
        ++required_;
  }

  TypicalSet(const JointPMF& j, const VarList& names, TypicalityParams typ) : TypicalSet(tuple_law(j, names), typ) {}

  std::size_t arity() const { return law_.sizes.size(); }

  /// `seqs[k]` points at n symbols of the k-th variable.
  bool contains(const Symbol* const* seqs) const {
    thread_local std::vector<std::size_t> cells;
    const std::size_t n = typ_.n;
    cells.resize(n);
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t c = 0;
      for (std::size_t k = 0; k < stride_.size(); ++k) c += seqs[k][t] * stride_[k];
      cells[t] = c;
    }
    std::sort(cells.begin(), cells.end());
    const double nd = static_cast<double>(n);
    std::size_t hit = 0;
    for (std::size_t t = 0; t < n;) {
      std::size_t u = t;
      while (u < n && cells[u] == cells[t]) ++u;
      const double p = law_.p[cells[t]];
      if (p <= 0.0) return false;
      if (std::abs(static_cast<double>(u - t) - nd * p) > typ_.epsilon * nd * p + kTypicalitySlack * nd) return false;
      if ((1.0 - typ_.epsilon) * p * nd > kTypicalitySlack * nd) ++hit;
      t = u;
    }
    return hit == required_;
  }

  bool contains(const std::vector<const Symbol*>& seqs) const {
    if (seqs.size() != arity()) throw Error(ErrorKind::InvalidArgument, "wrong number of sequences");
    return contains(seqs.data());
  }

 private:
  TupleLaw law_;
  TypicalityParams typ_;
  std::vector<std::size_t> stride_;
  std::size_t required_ = 0;
};

/// Joint typicality of sequences listed in the variable order of `ref`.
inline bool is_typical(const std::vector<Sequence>& seqs, const JointPMF& ref, const TypicalityParams& typ) {
  typ.validate();
  if (seqs.size() != ref.vars().size())
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(ref.vars().size()) + " sequences");
  std::vector<const Symbol*> ptr;
  VarList names;
  for (std::size_t k = 0; k < seqs.size(); ++k) {
    if (seqs[k].size() != typ.n)
      throw Error(ErrorKind::LengthMismatch, ref.vars()[k].name + " has length " + std::to_string(seqs[k].size()) +
                                                 ", expected " + std::to_string(typ.n));
    for (Symbol s : seqs[k])
      if (s >= ref.vars()[k].size) throw Error(ErrorKind::InvalidArgument, "symbol outside alphabet of " + ref.vars()[k].name);
    ptr.push_back(seqs[k].data());
    names.push_back(ref.vars()[k].name);
  }
  return TypicalSet(ref, names, typ).contains(ptr);
}

/// Total orders on index tuples used to pick the minimum typical bin tuple.
struct LambdaOrder {
  enum class Kind { Lexicographic, Colexicographic };
  Kind kind = Kind::Lexicographic;
  std::size_t arity = 2;

  /// Rank of a 0-based tuple within the box `sizes`.
  std::size_t rank(const std::vector<std::size_t>& t, const std::vector<std::size_t>& sizes) const {
    check(t.size(), sizes.size());
    std::size_t r = 0;
    if (kind == Kind::Lexicographic)
      for (std::size_t k = 0; k < arity; ++k) r = r * sizes[k] + t[k];
    else
      for (std::size_t k = arity; k-- > 0;) r = r * sizes[k] + t[k];
    return r;
  }

  std::vector<std::size_t> unrank(std::size_t r, const std::vector<std::size_t>& sizes) const {
    check(arity, sizes.size());
    std::vector<std::size_t> t(arity);
    if (kind == Kind::Lexicographic)
      for (std::size_t k = arity; k-- > 0;) {
        t[k] = r % sizes[k];
        r /= sizes[k];
      }
    else
      for (std::size_t k = 0; k < arity; ++k) {
        t[k] = r % sizes[k];
        r /= sizes[k];
      }
    return t;
  }

  static LambdaOrder parse(const std::string& name, std::size_t arity) {
    if (name == "lex") return {Kind::Lexicographic, arity};
    if (name == "colex") return {Kind::Colexicographic, arity};
    throw Error(ErrorKind::Parse, "unknown order '" + name + "' (lex|colex)");
  }

 private:
  void check(std::size_t a, std::size_t b) const {
    if (arity < 2 || arity > 3 || a != arity || b != arity)
      throw Error(ErrorKind::InvalidArgument, "order arity mismatch");
  }
};

struct Budget {
  std::size_t codewords = std::size_t{1} << 16;  // per layer
  std::size_t scan = std::size_t{1} << 22;       // decoder tuples

  /// INGMS_BUDGET="N" sets both caps, "N,M" sets codewords and scan.
  static Budget from_env() {
    Budget b;
    const char* env = std::getenv("INGMS_BUDGET");
    if (!env || !*env) return b;
    const std::string s(env);
    try {
      const auto comma = s.find(',');
      if (comma == std::string::npos) {
        b.codewords = b.scan = std::stoull(s);
      } else {
        b.codewords = std::stoull(s.substr(0, comma));
        b.scan = std::stoull(s.substr(comma + 1));
      }
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "INGMS_BUDGET must be N or N,M");
    }
    return b;
  }
};

/// ceil(2^{n r}) indices.
inline std::size_t index_count(double r, std::size_t n) {
  const double e = r * static_cast<double>(n);
  if (e > 62.0) throw Error(ErrorKind::BudgetExceeded, "2^" + std::to_string(e) + " indices");
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::exp2(e) - 1e-9)));
}

/// Codeword layers in message order: layer l carries message kRateNames[l].
enum Layer : std::size_t { LW0, LU0, LV0, LW1, LU1, LV1, LW2, LU2, LV2 };
inline constexpr std::size_t kLayers = 9;
inline const std::array<std::string, kLayers> kLayerNames = {"W0", "U0", "V0", "W1", "U1", "V1", "W2", "U2", "V2"};

namespace detail {

// Layers whose local indices address a codeword of layer l, ancestors first.
inline const std::array<std::vector<std::size_t>, kLayers> kKeyLayers = {{
    {LW0},
    {LW0, LU0},
    {LW0, LV0},
    {LW0, LW1},
    {LW0, LU0, LW1, LU1},
    {LW0, LV0, LW1, LV1},
    {LW0, LW2},
    {LW0, LU0, LW2, LU2},
    {LW0, LV0, LW2, LV2},
}};

// Cloud centers that condition the generation of layer l.
inline const std::array<std::vector<std::size_t>, kLayers> kCenters = {{
    {},
    {LW0},
    {LW0},
    {LW0},
    {LW0, LU0, LW1},
    {LW0, LV0, LW1},
    {LW0},
    {LW0, LU0, LW2},
    {LW0, LV0, LW2},
}};

inline const std::array<std::string, 8> kLayerBins = {"B01", "B02", "B10", "B11", "B12", "B20", "B21", "B22"};

}  // namespace detail

/// Local index of a layer: message m and bin b packed as m * bins + b.
using Indices = std::array<std::size_t, kLayers>;

/// All codewords of one random code. Layer l holds one n-sequence per
/// assignment of the local indices of its key layers.
struct CodebookForest {
  std::size_t n = 0;
  std::array<std::size_t, kLayers> messages{};
  std::array<std::size_t, kLayers> bins{};
  std::array<std::vector<Symbol>, kLayers> words;

  std::size_t local(std::size_t l) const { return messages[l] * bins[l]; }

  std::size_t layer_size(std::size_t l) const {
    std::size_t s = 1;
    for (auto k : detail::kKeyLayers[l]) s *= local(k);
    return s;
  }

  std::size_t flat(std::size_t l, const Indices& k) const {
    std::size_t f = 0;
    for (auto key : detail::kKeyLayers[l]) f = f * local(key) + k[key];
    return f;
  }

  const Symbol* word(std::size_t l, const Indices& k) const { return words[l].data() + flat(l, k) * n; }
  Symbol* word(std::size_t l, const Indices& k) { return words[l].data() + flat(l, k) * n; }
};

/// Designated codewords and channel inputs for one message tuple.
struct Encoding {
  Indices k{};
  Sequence x1, x2;
  std::array<bool, 4> events{};  // E1e..E4e
};

struct DecodeResult {
  enum class Status { Unique, Ambiguous, None };
  Status status = Status::None;
  std::array<std::size_t, 6> tuple{};  // local indices by role W0, P0, W1, P1, W2, P2
  std::size_t matches = 0;
  bool transmitted_typical = false;
  int event = 0;  // smallest table row among wrong typical tuples
};

/// Table row of a wrong-role set; rejects sets that are not closed under
/// the superposition order.
inline int attribute(RoleSet wrong) {
  if (!is_dag_closed(wrong)) throw Error(ErrorKind::NotDagClosed, "wrong-role set is not closed under satellites");
  const int k = error_event_index(wrong);
  if (k == 0) throw Error(ErrorKind::InternalConsistency, "wrong-role set matches no error event");
  return k;
}

inline std::size_t role_layer(Role r, int rx) {
  switch (r) {
    case Role::W0: return LW0;
    case Role::P0: return rx == 1 ? LU0 : LV0;
    case Role::W1: return LW1;
    case Role::P1: return rx == 1 ? LU1 : LV1;
    case Role::W2: return LW2;
    case Role::P2: return rx == 1 ? LU2 : LV2;
  }
  return LW0;
}

/// Everything fixed by the joint law, the channel and the typicality
/// parameters: generation conditionals and typical sets.
class Scheme {
 public:
  Scheme(const FactorizationSpec& f, const ChannelSpec& ch, TypicalityParams typ, Budget budget = Budget::from_env())
      : Scheme(build_joint(f, ch), ch, typ, budget) {}

  Scheme(JointPMF j, ChannelSpec ch, TypicalityParams typ, Budget budget = Budget::from_env())
      : joint_(std::move(j)), ch_(std::move(ch)), typ_(typ), budget_(budget) {
    typ_.validate();
    require_valid(ch_);
    for (const char* v : {"W0", "U0", "V0", "W1", "U1", "V1", "W2", "U2", "V2", "X1", "X2", "Y1", "Y2"})
      if (!joint_.has(v)) throw Error(ErrorKind::MissingVariable, v);
    if (joint_.alphabet("X1") != ch_.x1.size || joint_.alphabet("X2") != ch_.x2.size)
      throw Error(ErrorKind::AlphabetMismatch, "channel inputs do not match X1, X2");
    const double pm = p_min(joint_);
    if (typ_.epsilon >= pm)
      throw Error(ErrorKind::InvalidArgument,
                  "epsilon " + format_real(typ_.epsilon) + " must be below p_min " + format_real(pm));
    for (std::size_t l = 0; l < kLayers; ++l) {
      VarList given;
      for (auto c : detail::kCenters[l]) given.push_back(kLayerNames[c]);
      gen_[l] = conditional(joint_, {kLayerNames[l]}, given);
    }
    x_[0] = conditional(joint_, {"X1"}, {"W0", "U0", "V0", "W1", "U1", "V1"});
    x_[1] = conditional(joint_, {"X2"}, {"W0", "U0", "V0", "W2", "U2", "V2"});
    step_[0] = TypicalSet(joint_, {"W0", "U0", "V0"}, typ_);
    step_[1] = TypicalSet(joint_, {"W0", "U0", "V0", "W1", "U1", "V1"}, typ_);
    step_[2] = TypicalSet(joint_, {"W0", "U0", "V0", "W2", "U2", "V2"}, typ_);
    full_ = TypicalSet(joint_, {"W0", "U0", "V0", "W1", "U1", "V1", "W2", "U2", "V2", "X1", "X2"}, typ_);
    for (int rx : {1, 2}) {
      VarList names;
      for (Role r : kRoles) {
        names.push_back(role_variable(r, rx));
        VarList with_y = names;
        with_y.push_back(rx == 1 ? "Y1" : "Y2");
        prefix_[rx - 1][static_cast<std::size_t>(r)] = TypicalSet(joint_, with_y, typ_);
      }
    }
  }

  const JointPMF& joint() const { return joint_; }
  const ChannelSpec& channel() const { return ch_; }
  const TypicalityParams& typicality() const { return typ_; }
  const Budget& budget() const { return budget_; }

  CodebookForest generate(const RatePoint& rates, const BinRates& bins, Rng& rng) const {
    CodebookForest f;
    f.n = typ_.n;
    for (std::size_t l = 0; l < kLayers; ++l) {
      f.messages[l] = index_count(rates[kRateNames[l]], typ_.n);
      f.bins[l] = l == LW0 ? 1 : index_count(bins[detail::kLayerBins[l - 1]], typ_.n);
    }
    for (std::size_t l = 0; l < kLayers; ++l) {
      double size = 1.0;
      for (auto k : detail::kKeyLayers[l]) size *= static_cast<double>(f.local(k));
      if (size > static_cast<double>(budget_.codewords))
        throw Error(ErrorKind::BudgetExceeded, "layer " + kLayerNames[l] + " needs " + format_real(size) +
                                                   " codewords, cap " + std::to_string(budget_.codewords));
    }
    const std::size_t n = typ_.n;
    for (std::size_t l = 0; l < kLayers; ++l) {
      const auto& keys = detail::kKeyLayers[l];
      const auto& cond = gen_[l];
      f.words[l].assign(f.layer_size(l) * n, 0);
      Indices k{};
      std::vector<const Symbol*> centers(detail::kCenters[l].size());
      for (std::size_t w = 0; w < f.layer_size(l); ++w) {
        std::size_t rem = w;
        for (std::size_t q = keys.size(); q-- > 0;) {
          k[keys[q]] = rem % f.local(keys[q]);
          rem /= f.local(keys[q]);
        }
        for (std::size_t c = 0; c < centers.size(); ++c) centers[c] = f.word(detail::kCenters[l][c], k);
        Symbol* out = f.words[l].data() + w * n;
        for (std::size_t t = 0; t < n; ++t) {
          std::size_t row = 0;
          for (std::size_t c = 0; c < centers.size(); ++c) row = row * cond.given_sizes[c] + centers[c][t];
          out[t] = static_cast<Symbol>(rng.sample(cond.row(row), cond.cols));
        }
      }
    }
    return f;
  }

  /// `messages` are 0-based message indices in rate order.
  Encoding encode(const CodebookForest& f, const std::array<std::size_t, kLayers>& messages, LambdaOrder ord2,
                  LambdaOrder ord3, Rng& rng) const {
    for (std::size_t l = 0; l < kLayers; ++l)
      if (messages[l] >= f.messages[l])
        throw Error(ErrorKind::InvalidArgument, "message " + kRateNames[l] + " out of range");
    Encoding e;
    for (std::size_t l = 0; l < kLayers; ++l) e.k[l] = messages[l] * f.bins[l];
    auto set_bin = [&](std::size_t l, std::size_t b) { e.k[l] = messages[l] * f.bins[l] + b; };

    {
      const std::vector<std::size_t> sizes = {f.bins[LU0], f.bins[LV0]};
      const std::size_t total = sizes[0] * sizes[1];
      bool found = false;
      for (std::size_t r = 0; r < total && !found; ++r) {
        const auto b = ord2.unrank(r, sizes);
        set_bin(LU0, b[0]);
        set_bin(LV0, b[1]);
        const Symbol* s[] = {f.word(LW0, e.k), f.word(LU0, e.k), f.word(LV0, e.k)};
        found = step_[0].contains(s);
      }
      if (!found) {
        set_bin(LU0, 0);
        set_bin(LV0, 0);
        e.events[0] = true;
      }
    }
    for (int tx : {1, 2}) {
      const std::size_t lw = tx == 1 ? LW1 : LW2, lu = lw + 1, lv = lw + 2;
      const std::vector<std::size_t> sizes = {f.bins[lw], f.bins[lu], f.bins[lv]};
      const std::size_t total = sizes[0] * sizes[1] * sizes[2];
      bool found = false;
      for (std::size_t r = 0; r < total && !found; ++r) {
        const auto b = ord3.unrank(r, sizes);
        set_bin(lw, b[0]);
        set_bin(lu, b[1]);
        set_bin(lv, b[2]);
        const Symbol* s[] = {f.word(LW0, e.k), f.word(LU0, e.k), f.word(LV0, e.k),
                             f.word(lw, e.k),  f.word(lu, e.k),  f.word(lv, e.k)};
        found = step_[tx].contains(s);
      }
      if (!found) {
        set_bin(lw, 0);
        set_bin(lu, 0);
        set_bin(lv, 0);
        e.events[static_cast<std::size_t>(tx)] = true;
      }
    }
    std::array<const Symbol*, kLayers> w{};
    for (std::size_t l = 0; l < kLayers; ++l) w[l] = f.word(l, e.k);
    const std::size_t n = typ_.n;
    e.x1.resize(n);
    e.x2.resize(n);
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t r1 = 0, r2 = 0;
      const std::size_t l1[] = {LW0, LU0, LV0, LW1, LU1, LV1};
      const std::size_t l2[] = {LW0, LU0, LV0, LW2, LU2, LV2};
      for (std::size_t c = 0; c < 6; ++c) {
        r1 = r1 * x_[0].given_sizes[c] + w[l1[c]][t];
        r2 = r2 * x_[1].given_sizes[c] + w[l2[c]][t];
      }
      e.x1[t] = static_cast<Symbol>(rng.sample(x_[0].row(r1), x_[0].cols));
      e.x2[t] = static_cast<Symbol>(rng.sample(x_[1].row(r2), x_[1].cols));
    }
    const Symbol* all[] = {w[0], w[1], w[2], w[3], w[4], w[5], w[6], w[7], w[8], e.x1.data(), e.x2.data()};
    e.events[3] = !full_.contains(all);
    return e;
  }

  /// Passes the inputs through the channel.
  std::pair<Sequence, Sequence> transmit(const Sequence& x1, const Sequence& x2, Rng& rng) const {
    if (x1.size() != typ_.n || x2.size() != typ_.n) throw Error(ErrorKind::LengthMismatch, "channel inputs");
    Sequence y1(typ_.n), y2(typ_.n);
    const std::size_t cols = ch_.y1.size * ch_.y2.size;
    for (std::size_t t = 0; t < typ_.n; ++t) {
      const std::size_t c = rng.sample(ch_.law.data() + ch_.index(x1[t], x2[t], 0, 0), cols);
      y1[t] = static_cast<Symbol>(c / ch_.y2.size);
      y2[t] = static_cast<Symbol>(c % ch_.y2.size);
    }
    return {y1, y2};
  }

  /// Exhaustive search for typical role tuples. With `sent`, also reports
  /// whether the transmitted tuple is typical and the smallest error event
  /// among the other typical tuples.
  DecodeResult decode(const CodebookForest& f, const Sequence& y, int rx, const Indices* sent = nullptr) const {
    if (rx != 1 && rx != 2) throw Error(ErrorKind::InvalidArgument, "receiver must be 1 or 2");
    if (y.size() != f.n || f.n != typ_.n) throw Error(ErrorKind::LengthMismatch, "received sequence length");
    std::array<std::size_t, 6> size{}, layer{};
    double space = 1.0;
    for (Role r : kRoles) {
      const auto i = static_cast<std::size_t>(r);
      layer[i] = role_layer(r, rx);
      size[i] = f.local(layer[i]);
      space *= static_cast<double>(size[i]);
    }
    if (space > static_cast<double>(budget_.scan))
      throw Error(ErrorKind::BudgetExceeded, "receiver " + std::to_string(rx) + " scan of " + format_real(space) +
                                                 " tuples, cap " + std::to_string(budget_.scan));
    const auto& pre = prefix_[rx - 1];
    DecodeResult out;
    std::array<std::size_t, 6> truth{};
    if (sent)
      for (std::size_t i = 0; i < 6; ++i) truth[i] = (*sent)[layer[i]];
    Indices k{};
    std::array<const Symbol*, 7> s{};
    std::array<std::size_t, 6> cur{};

    auto visit = [&](auto&& self, std::size_t depth) -> void {
      if (depth == 6) {
        ++out.matches;
        if (out.matches == 1) out.tuple = cur;
        if (!sent) return;
        RoleSet wrong = 0;
        for (Role r : kRoles) {
          const auto i = static_cast<std::size_t>(r);
          bool bad = cur[i] != truth[i];
          for (Role c : kRoles)
            if (cloud_centers(r) & bit(c)) bad = bad || (wrong & bit(c));
          if (bad) wrong |= bit(r);
        }
        if (wrong == 0) {
          out.transmitted_typical = true;
        } else {
          const int ev = attribute(wrong);
          if (out.event == 0 || ev < out.event) out.event = ev;
        }
        return;
      }
      for (std::size_t v = 0; v < size[depth]; ++v) {
        cur[depth] = v;
        k[layer[depth]] = v;
        s[depth] = f.word(layer[depth], k);
        s[depth + 1] = y.data();
        if (pre[depth].contains(s.data())) self(self, depth + 1);
      }
    };
    visit(visit, 0);
    out.status = out.matches == 0   ? DecodeResult::Status::None
                 : out.matches == 1 ? DecodeResult::Status::Unique
                                    : DecodeResult::Status::Ambiguous;
    return out;
  }

 private:
  JointPMF joint_;
  ChannelSpec ch_;
  TypicalityParams typ_;
  Budget budget_;
  std::array<ConditionalTable, kLayers> gen_;
  std::array<ConditionalTable, 2> x_;
  std::array<TypicalSet, 3> step_;
  TypicalSet full_;
  std::array<std::array<TypicalSet, 6>, 2> prefix_;
};

/// Message indices decoded by each receiver, in rate order.
inline constexpr std::array<std::array<std::size_t, 6>, 2> kReceiverMessages = {{
    {LW0, LU0, LW1, LU1, LW2, LU2},
    {LW0, LV0, LW1, LV1, LW2, LV2},
}};

struct SimConfig {
  RatePoint rates;
  BinRates bins;
  TypicalityParams typ;
  FactorizationSpec factorization;
  ChannelSpec channel;
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  LambdaOrder ord2{LambdaOrder::Kind::Lexicographic, 2};
  LambdaOrder ord3{LambdaOrder::Kind::Lexicographic, 3};
  Budget budget = Budget::from_env();
};

struct TrialOutcome {
  std::size_t trial = 0;
  std::array<bool, 4> encoding{};
  std::string rx1 = "ok";
  std::string rx2 = "ok";

  bool rx1_error() const { return rx1 != "ok"; }
  bool rx2_error() const { return rx2 != "ok"; }
  bool error() const { return rx1_error() || rx2_error(); }
};

/// Histogram slot 0 is E0d, slot k is Ekd.
struct SimReport {
  std::size_t trials = 0;
  std::size_t rx1_errors = 0, rx2_errors = 0, errors = 0;
  std::array<std::size_t, 4> encoding{};
  std::array<std::size_t, 14> rx1_events{}, rx2_events{};
  std::vector<TrialOutcome> outcomes;

  static double rate(std::size_t k, std::size_t trials) {
    return trials == 0 ? 0.0 : static_cast<double>(k) / static_cast<double>(trials);
  }
  static double stderr_of(std::size_t k, std::size_t trials) {
    if (trials == 0) return 0.0;
    const double p = rate(k, trials);
    return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  }
  double error_rate() const { return rate(errors, trials); }
  double rx1_rate() const { return rate(rx1_errors, trials); }
  double rx2_rate() const { return rate(rx2_errors, trials); }
};

inline std::string event_label(int k) { return "E" + std::to_string(k) + "d"; }

/// Receiver label: "ok" when a unique typical tuple carries the right
/// messages; otherwise E0d if the transmitted tuple is atypical, else the
/// smallest error event among competing typical tuples.
inline std::string receiver_label(const DecodeResult& d, const Indices& sent, const CodebookForest& f, int rx) {
  if (d.status == DecodeResult::Status::Unique) {
    bool same = true;
    for (std::size_t i = 0; i < 6; ++i) {
      const std::size_t l = kReceiverMessages[rx - 1][i];
      same = same && d.tuple[i] / f.bins[l] == sent[l] / f.bins[l];
    }
    if (same) return "ok";
  }
  if (!d.transmitted_typical) return event_label(0);
  return event_label(d.event);
}

inline TrialOutcome run_trial(const Scheme& scheme, const SimConfig& cfg, std::size_t trial) {
  const std::uint64_t ts = derive_seed(cfg.seed, trial);
  Rng code_rng(derive_seed(ts, 0)), msg_rng(derive_seed(ts, 1)), tx_rng(derive_seed(ts, 2));
  const auto forest = scheme.generate(cfg.rates, cfg.bins, code_rng);
  std::array<std::size_t, kLayers> m{};
  for (std::size_t l = 0; l < kLayers; ++l) m[l] = msg_rng.index(forest.messages[l]);
  const auto enc = scheme.encode(forest, m, cfg.ord2, cfg.ord3, tx_rng);
  const auto [y1, y2] = scheme.transmit(enc.x1, enc.x2, tx_rng);
  TrialOutcome o;
  o.trial = trial;
  o.encoding = enc.events;
  o.rx1 = receiver_label(scheme.decode(forest, y1, 1, &enc.k), enc.k, forest, 1);
  o.rx2 = receiver_label(scheme.decode(forest, y2, 2, &enc.k), enc.k, forest, 2);
  return o;
}

inline int label_slot(const std::string& label) { return std::stoi(label.substr(1, label.size() - 2)); }

inline SimReport run_trials(const SimConfig& cfg) {
  cfg.rates.validate();
  cfg.bins.validate();
  const Scheme scheme(cfg.factorization, cfg.channel, cfg.typ, cfg.budget);
  SimReport rep;
  rep.trials = cfg.trials;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    auto o = run_trial(scheme, cfg, t);
    for (std::size_t e = 0; e < 4; ++e) rep.encoding[e] += o.encoding[e];
    if (o.rx1_error()) {
      ++rep.rx1_errors;
      ++rep.rx1_events[static_cast<std::size_t>(label_slot(o.rx1))];
    }
    if (o.rx2_error()) {
      ++rep.rx2_errors;
      ++rep.rx2_events[static_cast<std::size_t>(label_slot(o.rx2))];
    }
    if (o.error()) ++rep.errors;
    rep.outcomes.push_back(std::move(o));
  }
  return rep;
}

/// Bin-rate thresholds of the covering lemma conditioned on W0, cumulative:
/// B0, B0+B1, B0+B2, B0+B1+B2.
inline std::array<double, 4> covering_thresholds(const JointPMF& j) {
  const double t0 = mutual_information(j, {"U0", "V0"}, {"W1"}, {"W0"});
  const double t1 = mutual_information(j, {"V0"}, {"U1"}, {"W0", "U0", "W1"});
  const double t2 = mutual_information(j, {"U0"}, {"V1"}, {"W0", "V0", "W1"});
  const double t3 = mutual_information(j, {"U0", "U1"}, {"V1"}, {"W0", "V0", "W1"});
  return {t0, t0 + t1, t0 + t2, t0 + t1 + t3};
}

struct CoveringReport {
  std::size_t trials = 0;
  std::size_t uncovered = 0;
  std::array<double, 4> thresholds{};
  double rate() const { return SimReport::rate(uncovered, trials); }
  double standard_error() const { return SimReport::stderr_of(uncovered, trials); }
};

/// Fraction of trials in which no (W1, U1, V1) triple among 2^{nB0} x
/// 2^{nB1} x 2^{nB2} superimposed codewords is jointly typical with a
/// typical premise (w0, u0, v0). U1 and V1 codewords are drawn only under
/// W1 codewords that are typical with the premise.
inline CoveringReport covering_experiment(const JointPMF& j, std::array<double, 3> bins, TypicalityParams typ,
                                          std::size_t trials, std::uint64_t seed,
                                          Budget budget = Budget::from_env()) {
  typ.validate();
  for (const char* v : {"W0", "U0", "V0", "W1", "U1", "V1"})
    if (!j.has(v)) throw Error(ErrorKind::MissingVariable, v);
  for (double b : bins)
    if (!(b >= 0.0)) throw Error(ErrorKind::InvalidArgument, "bin rates must be >= 0");
  const double pm = p_min(marginalize(j, {"W0", "U0", "V0", "W1", "U1", "V1"}));
  if (typ.epsilon >= pm)
    throw Error(ErrorKind::InvalidArgument,
                "epsilon " + format_real(typ.epsilon) + " must be below p_min " + format_real(pm));
  const std::size_t n = typ.n;
  std::array<std::size_t, 3> cnt{};
  for (std::size_t i = 0; i < 3; ++i) {
    cnt[i] = index_count(bins[i], n);
    if (cnt[i] > budget.codewords)
      throw Error(ErrorKind::BudgetExceeded, "bin " + std::to_string(i) + " has " + std::to_string(cnt[i]) +
                                                 " codewords, cap " + std::to_string(budget.codewords));
  }
  const auto premise = conditional(j, {"W0", "U0", "V0"}, {});
  const auto g_w1 = conditional(j, {"W1"}, {"W0"});
  const auto g_u1 = conditional(j, {"U1"}, {"W0", "U0", "W1"});
  const auto g_v1 = conditional(j, {"V1"}, {"W0", "V0", "W1"});
  const TypicalSet t_premise(j, {"W0", "U0", "V0"}, typ);
  const TypicalSet t_w(j, {"W0", "U0", "V0", "W1"}, typ);
  const TypicalSet t_u(j, {"W0", "U0", "V0", "W1", "U1"}, typ);
  const TypicalSet t_v(j, {"W0", "U0", "V0", "W1", "V1"}, typ);
  const TypicalSet t_all(j, {"W0", "U0", "V0", "W1", "U1", "V1"}, typ);
  const std::size_t su = premise.target_sizes[1], sv = premise.target_sizes[2];

  CoveringReport rep;
  rep.trials = trials;
  rep.thresholds = covering_thresholds(j);
  Sequence w0(n), u0(n), v0(n), w1(n);
  std::vector<Symbol> us, vs;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(seed, trial));
    const Symbol* base[3] = {w0.data(), u0.data(), v0.data()};
    for (std::size_t attempt = 0;; ++attempt) {
      if (attempt == 100000) throw Error(ErrorKind::InvalidArgument, "no typical premise found");
      for (std::size_t t = 0; t < n; ++t) {
        const std::size_t c = rng.sample(premise.row(0), premise.cols);
        w0[t] = static_cast<Symbol>(c / (su * sv));
        u0[t] = static_cast<Symbol>(c / sv % su);
        v0[t] = static_cast<Symbol>(c % sv);
      }
      if (t_premise.contains(base)) break;
    }
    bool covered = false;
    for (std::size_t b0 = 0; b0 < cnt[0] && !covered; ++b0) {
      for (std::size_t t = 0; t < n; ++t) w1[t] = static_cast<Symbol>(rng.sample(g_w1.row(w0[t]), g_w1.cols));
      const Symbol* sw[4] = {w0.data(), u0.data(), v0.data(), w1.data()};
      if (!t_w.contains(sw)) continue;
      auto draw = [&](const ConditionalTable& g, const Sequence& mid, std::size_t count, const TypicalSet& ts,
                      std::vector<Symbol>& keep) {
        keep.clear();
        Sequence s(n);
        for (std::size_t b = 0; b < count; ++b) {
          for (std::size_t t = 0; t < n; ++t) {
            const std::size_t row = (w0[t] * g.given_sizes[1] + mid[t]) * g.given_sizes[2] + w1[t];
            s[t] = static_cast<Symbol>(rng.sample(g.row(row), g.cols));
          }
          const Symbol* q[5] = {w0.data(), u0.data(), v0.data(), w1.data(), s.data()};
          if (ts.contains(q)) keep.insert(keep.end(), s.begin(), s.end());
        }
      };
      draw(g_u1, u0, cnt[1], t_u, us);
      if (us.empty()) continue;
      draw(g_v1, v0, cnt[2], t_v, vs);
      if (vs.empty()) continue;
      const std::size_t nu = us.size() / n, nv = vs.size() / n;
      if (static_cast<double>(nu) * static_cast<double>(nv) > static_cast<double>(budget.scan))
        throw Error(ErrorKind::BudgetExceeded, "covering scan exceeds cap " + std::to_string(budget.scan));
      for (std::size_t a = 0; a < nu && !covered; ++a)
        for (std::size_t b = 0; b < nv && !covered; ++b) {
          const Symbol* q[6] = {w0.data(), u0.data(), v0.data(), w1.data(), us.data() + a * n, vs.data() + b * n};
          covered = t_all.contains(q);
        }
    }
    if (!covered) ++rep.uncovered;
  }
  return rep;
}

}  // namespace ingms
