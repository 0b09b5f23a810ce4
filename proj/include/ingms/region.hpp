#pragma once

// Rate regions of the two-transmitter/two-receiver interference network with
// general message sets, and its classical specializations.

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ingms/channel.hpp"
#include "ingms/error.hpp"
#include "ingms/fme.hpp"
#include "ingms/pmf.hpp"

namespace ingms {

inline const std::array<std::string, 9> kRateNames = {"R00", "R01", "R02", "R10", "R11",
                                                      "R12", "R20", "R21", "R22"};
inline const std::array<std::string, 8> kBinNames = {"B01", "B02", "B10", "B11", "B12", "B20", "B21", "B22"};

namespace detail {

inline std::map<std::string, double> parse_assignments(const std::string& text, const std::string& prefix) {
  std::map<std::string, double> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::Parse, "expected NAME=VALUE, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    if (name.rfind(prefix, 0) != 0) throw Error(ErrorKind::UnknownVariable, name);
    try {
      std::size_t used = 0;
      const std::string rest = item.substr(eq + 1);
      out[name] = std::stod(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(rest);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "bad value in '" + item + "'");
    }
  }
  return out;
}

}  // namespace detail

/// Nine message rates in bits per channel use; absent entries are 0.
struct RatePoint {
  std::map<std::string, double> r;

  double operator[](const std::string& name) const {
    auto it = r.find(name);
    return it == r.end() ? 0.0 : it->second;
  }

  std::map<std::string, double> full() const {
    std::map<std::string, double> out;
    for (const auto& n : kRateNames) out[n] = (*this)[n];
    return out;
  }

  void validate() const {
    for (const auto& [n, v] : r) {
      if (std::find(kRateNames.begin(), kRateNames.end(), n) == kRateNames.end())
        throw Error(ErrorKind::UnknownVariable, n);
      if (!(v >= 0.0)) throw Error(ErrorKind::InvalidArgument, n + " must be >= 0");
    }
  }

  /// Parses "R00=0.1,R11=0.5".
  static RatePoint parse(const std::string& text) {
    RatePoint p{detail::parse_assignments(text, "R")};
    p.validate();
    return p;
  }
};

/// Eight bin rates; absent entries are 0.
struct BinRates {
  std::map<std::string, double> b;

  double operator[](const std::string& name) const {
    auto it = b.find(name);
    return it == b.end() ? 0.0 : it->second;
  }

  void validate() const {
    for (const auto& [n, v] : b) {
      if (std::find(kBinNames.begin(), kBinNames.end(), n) == kBinNames.end())
        throw Error(ErrorKind::UnknownVariable, n);
      if (!(v >= 0.0)) throw Error(ErrorKind::InvalidArgument, n + " must be >= 0");
    }
  }

  static BinRates parse(const std::string& text) {
    BinRates p{detail::parse_assignments(text, "B")};
    p.validate();
    return p;
  }
};

/// Codeword roles seen by one receiver. P0, P1, P2 stand for U0, U1, U2 at
/// receiver 1 and for V0, V1, V2 at receiver 2.
enum class Role : std::uint8_t { W0, P0, W1, P1, W2, P2 };
inline constexpr std::array<Role, 6> kRoles = {Role::W0, Role::P0, Role::W1, Role::P1, Role::W2, Role::P2};

using RoleSet = std::uint8_t;
inline constexpr RoleSet bit(Role r) { return static_cast<RoleSet>(1u << static_cast<unsigned>(r)); }
inline constexpr RoleSet kAllRoles = 0x3F;

inline std::string role_variable(Role r, int rx) {
  const char p = rx == 1 ? 'U' : 'V';
  switch (r) {
    case Role::W0: return "W0";
    case Role::P0: return std::string(1, p) + "0";
    case Role::W1: return "W1";
    case Role::P1: return std::string(1, p) + "1";
    case Role::W2: return "W2";
    case Role::P2: return std::string(1, p) + "2";
  }
  return {};
}

inline std::string output_variable(int rx) { return rx == 1 ? "Y1" : "Y2"; }

/// Rate carried by the codeword of a role at a receiver ("R00", "R01", ...).
inline std::string role_rate(Role r, int rx) {
  const char j = rx == 1 ? '1' : '2';
  switch (r) {
    case Role::W0: return "R00";
    case Role::P0: return std::string("R0") + j;
    case Role::W1: return "R10";
    case Role::P1: return std::string("R1") + j;
    case Role::W2: return "R20";
    case Role::P2: return std::string("R2") + j;
  }
  return {};
}

/// Matching bin rate, empty for W0 which is not binned.
inline std::string role_bin(Role r, int rx) {
  const std::string rate = role_rate(r, rx);
  return rate == "R00" ? std::string{} : "B" + rate.substr(1);
}

/// Cloud centres of each role in the superposition graph.
inline RoleSet cloud_centers(Role r) {
  switch (r) {
    case Role::W0: return 0;
    case Role::P0: return bit(Role::W0);
    case Role::W1: return bit(Role::W0);
    case Role::P1: return bit(Role::W0) | bit(Role::P0) | bit(Role::W1);
    case Role::W2: return bit(Role::W0);
    case Role::P2: return bit(Role::W0) | bit(Role::P0) | bit(Role::W2);
  }
  return 0;
}

/// A set of wrongly decoded roles is admissible iff every satellite of a
/// wrong codeword is wrong as well.
inline bool is_dag_closed(RoleSet s) {
  for (Role r : kRoles)
    if (!(s & bit(r)))
      for (Role c : kRoles)
        if ((cloud_centers(r) & bit(c)) && (s & bit(c))) return false;
  return true;
}

/// Wrong-role sets of the thirteen decoding error events, in table order.
inline constexpr std::array<RoleSet, 13> kErrorEvents = {
    bit(Role::P1),
    bit(Role::P2),
    bit(Role::P1) | bit(Role::P2),
    bit(Role::W1) | bit(Role::P1),
    bit(Role::W2) | bit(Role::P2),
    bit(Role::W1) | bit(Role::P1) | bit(Role::P2),
    bit(Role::P1) | bit(Role::W2) | bit(Role::P2),
    bit(Role::P0) | bit(Role::P1) | bit(Role::P2),
    bit(Role::W1) | bit(Role::P1) | bit(Role::W2) | bit(Role::P2),
    bit(Role::P0) | bit(Role::W1) | bit(Role::P1) | bit(Role::P2),
    bit(Role::P0) | bit(Role::P1) | bit(Role::W2) | bit(Role::P2),
    bit(Role::P0) | bit(Role::W1) | bit(Role::P1) | bit(Role::W2) | bit(Role::P2),
    kAllRoles,
};

/// 1-based event index of a wrong-role set, 0 if it is not one of the thirteen.
inline int error_event_index(RoleSet s) {
  for (std::size_t k = 0; k < kErrorEvents.size(); ++k)
    if (kErrorEvents[k] == s) return static_cast<int>(k) + 1;
  return 0;
}

inline VarList role_names(RoleSet s, int rx) {
  VarList out;
  for (Role r : kRoles)
    if (s & bit(r)) out.push_back(role_variable(r, rx));
  return out;
}

struct ThetaTerms {
  std::array<double, 7> theta{};
  double operator()(int k) const { return theta.at(static_cast<std::size_t>(k - 1)); }
};

struct DecodingBounds {
  std::array<double, 13> iE{};
  double operator()(int k) const { return iE.at(static_cast<std::size_t>(k - 1)); }
};

namespace detail {

inline void require_roles(const JointPMF& j, int rx) {
  if (rx != 1 && rx != 2) throw Error(ErrorKind::InvalidArgument, "receiver must be 1 or 2");
  for (Role r : kRoles)
    if (!j.has(role_variable(r, rx)))
      throw Error(ErrorKind::MissingVariable, role_variable(r, rx));
  if (!j.has(output_variable(rx))) throw Error(ErrorKind::MissingVariable, output_variable(rx));
}

struct ThetaDef {
  VarList a, b, given;
};

inline std::array<ThetaDef, 7> theta_defs(int rx) {
  auto v = [&](Role r) { return role_variable(r, rx); };
  return {{
      {{v(Role::P0)}, {v(Role::W1)}, {v(Role::W0)}},
      {{v(Role::P0)}, {v(Role::W2)}, {v(Role::W0)}},
      {{v(Role::W1)}, {v(Role::W2)}, {v(Role::W0), v(Role::P0)}},
      {{v(Role::P0)}, {v(Role::W1), v(Role::W2)}, {v(Role::W0)}},
      {{v(Role::P1)}, {v(Role::W2)}, {v(Role::W0), v(Role::P0), v(Role::W1)}},
      {{v(Role::P2)}, {v(Role::W1)}, {v(Role::W0), v(Role::P0), v(Role::W2)}},
      {{v(Role::P1)}, {v(Role::P2)}, {v(Role::W0), v(Role::P0), v(Role::W1), v(Role::W2)}},
  }};
}

// Theta indices added to each decoding bound.
inline const std::array<std::vector<int>, 13> kThetaSums = {{
    {5, 7},
    {6, 7},
    {5, 6, 7},
    {1, 3, 5, 6, 7},
    {2, 3, 5, 6, 7},
    {1, 3, 5, 6, 7},
    {2, 3, 5, 6, 7},
    {4, 5, 6, 7},
    {1, 2, 3, 5, 6, 7},
    {1, 2, 3, 5, 6, 7},
    {1, 2, 3, 5, 6, 7},
    {1, 2, 3, 5, 6, 7},
    {1, 2, 3, 5, 6, 7},
}};

inline std::string list_string(const VarList& v) {
  std::string s;
  for (const auto& n : v) s += (s.empty() ? "" : ",") + n;
  return s;
}

inline std::string mi_string(const VarList& a, const VarList& b, const VarList& g) {
  return "I(" + list_string(a) + ";" + list_string(b) + (g.empty() ? "" : "|" + list_string(g)) + ")";
}

}  // namespace detail

inline ThetaTerms theta_terms(const JointPMF& j, int rx) {
  detail::require_roles(j, rx);
  ThetaTerms t;
  const auto defs = detail::theta_defs(rx);
  for (std::size_t k = 0; k < 7; ++k) t.theta[k] = mutual_information(j, defs[k].a, defs[k].b, defs[k].given);
  return t;
}

/// Mutual-information part of decoding bound k: I(wrong; Y | correct).
inline double decoding_information(const JointPMF& j, int rx, int k) {
  const RoleSet s = kErrorEvents.at(static_cast<std::size_t>(k - 1));
  return mutual_information(j, role_names(s, rx), {output_variable(rx)},
                            role_names(static_cast<RoleSet>(kAllRoles & ~s), rx));
}

inline DecodingBounds decoding_bounds(const JointPMF& j, int rx) {
  const ThetaTerms t = theta_terms(j, rx);
  DecodingBounds d;
  for (int k = 1; k <= 13; ++k) {
    double v = decoding_information(j, rx, k);
    for (int i : detail::kThetaSums[static_cast<std::size_t>(k - 1)]) v += t(i);
    d.iE[static_cast<std::size_t>(k - 1)] = v;
  }
  return d;
}

/// Bound for an arbitrary admissible wrong-role set: the sum over wrong roles
/// of H(role | its cloud centres) minus H(wrong | correct, Y).
inline double decoding_bounds_general(const JointPMF& j, int rx, RoleSet wrong) {
  detail::require_roles(j, rx);
  if (wrong == 0 || (wrong & ~kAllRoles)) throw Error(ErrorKind::InvalidArgument, "empty or invalid role set");
  if (!is_dag_closed(wrong)) throw Error(ErrorKind::NotDagClosed, "wrong-role set is not closed under superposition");
  double v = 0.0;
  for (Role r : kRoles)
    if (wrong & bit(r)) v += entropy(j, {role_variable(r, rx)}, role_names(cloud_centers(r), rx));
  VarList given = role_names(static_cast<RoleSet>(kAllRoles & ~wrong), rx);
  given.push_back(output_variable(rx));
  v -= entropy(j, role_names(wrong, rx), given);
  return detail::clip(v, "general decoding bound");
}

struct BoundDelta {
  int rx;
  int event;
  double listed;
  double general;
  double delta() const { return listed - general; }
};

/// The fixed per-event bound table against the general rule, one entry per
/// event and receiver.
inline std::vector<BoundDelta> compare_decoding_bounds(const JointPMF& j) {
  std::vector<BoundDelta> out;
  for (int rx : {1, 2}) {
    const auto d = decoding_bounds(j, rx);
    for (int k = 1; k <= 13; ++k)
      out.push_back({rx, k, d(k), decoding_bounds_general(j, rx, kErrorEvents[static_cast<std::size_t>(k - 1)])});
  }
  return out;
}

/// A named information quantity with the expression that defines it.
struct NamedConstant {
  std::string name;
  std::string expression;
  double value;
};

/// Every constant appearing in the full region: bin thresholds, theta terms
/// and decoding bounds for both receivers.
inline std::vector<NamedConstant> ingms_constants(const JointPMF& j) {
  std::vector<NamedConstant> out;
  auto mi = [&](const std::string& name, const VarList& a, const VarList& b, const VarList& g) {
    out.push_back({name, detail::mi_string(a, b, g), mutual_information(j, a, b, g)});
    return out.back().value;
  };
  mi("I.U0V0", {"U0"}, {"V0"}, {"W0"});
  for (const std::string i : {"1", "2"}) {
    const std::string w = "W" + i, u = "U" + i, v = "V" + i;
    mi("I.W" + i, {"U0", "V0"}, {w}, {"W0"});
    mi("I.U" + i, {"V0"}, {u}, {"W0", "U0", w});
    mi("I.V" + i, {"U0"}, {v}, {"W0", "V0", w});
    mi("I.UV" + i, {"U0", u}, {v}, {"W0", "V0", w});
  }
  for (int rx : {1, 2}) {
    const std::string y = output_variable(rx);
    const auto defs = detail::theta_defs(rx);
    const auto t = theta_terms(j, rx);
    for (int k = 1; k <= 7; ++k) {
      const auto& d = defs[static_cast<std::size_t>(k - 1)];
      out.push_back({"theta" + std::to_string(k) + "." + y, detail::mi_string(d.a, d.b, d.given), t(k)});
    }
    const auto b = decoding_bounds(j, rx);
    for (int k = 1; k <= 13; ++k) {
      const RoleSet s = kErrorEvents[static_cast<std::size_t>(k - 1)];
      std::string expr = detail::mi_string(role_names(s, rx), {y}, role_names(static_cast<RoleSet>(kAllRoles & ~s), rx));
      for (int i : detail::kThetaSums[static_cast<std::size_t>(k - 1)])
        expr += "+theta" + std::to_string(i) + "." + y;
      out.push_back({"iE" + std::to_string(k) + "." + y, expr, b(k)});
    }
  }
  return out;
}

inline double constant_value(const std::vector<NamedConstant>& cs, const std::string& name) {
  for (const auto& c : cs)
    if (c.name == name) return c.value;
  throw Error(ErrorKind::UnknownVariable, name);
}

inline std::vector<std::string> rate_names() { return {kRateNames.begin(), kRateNames.end()}; }
inline std::vector<std::string> bin_names() { return {kBinNames.begin(), kBinNames.end()}; }

/// The full constraint block: nine bin rows followed by thirteen decoding rows
/// per receiver. Nonnegativity of rates and bins is not included.
inline LinSys ingms_system(const JointPMF& j) {
  detail::require_roles(j, 1);
  detail::require_roles(j, 2);
  const auto c = ingms_constants(j);
  auto val = [&](const std::string& n) { return constant_value(c, n); };
  std::vector<std::string> vars = rate_names();
  for (const auto& b : kBinNames) vars.push_back(b);
  LinSys s(vars);
  s.add_at_least({{"B01", 1}, {"B02", 1}}, val("I.U0V0"), "bin.0");
  for (const std::string i : {"1", "2"}) {
    const std::string b0 = "B" + i + "0", b1 = "B" + i + "1", b2 = "B" + i + "2";
    const double t1 = val("I.W" + i), tu = val("I.U" + i), tv = val("I.V" + i), tuv = val("I.UV" + i);
    s.add_at_least({{b0, 1}}, t1, "bin." + i + ".W");
    s.add_at_least({{b0, 1}, {b1, 1}}, t1 + tu, "bin." + i + ".U");
    s.add_at_least({{b0, 1}, {b2, 1}}, t1 + tv, "bin." + i + ".V");
    s.add_at_least({{b0, 1}, {b1, 1}, {b2, 1}}, t1 + tu + tuv, "bin." + i + ".UV");
  }
  for (int rx : {1, 2}) {
    const auto bounds = decoding_bounds(j, rx);
    for (int k = 1; k <= 13; ++k) {
      std::map<std::string, std::int64_t> row;
      for (Role r : kRoles) {
        if (!(kErrorEvents[static_cast<std::size_t>(k - 1)] & bit(r))) continue;
        row[role_rate(r, rx)] += 1;
        if (const auto b = role_bin(r, rx); !b.empty()) row[b] += 1;
      }
      s.add(row, bounds(k), "dec." + output_variable(rx) + ".E" + std::to_string(k));
    }
  }
  return s;
}

/// ingms_system with nonnegativity of every rate and bin.
inline LinSys ingms_closed_system(const JointPMF& j) {
  LinSys s = ingms_system(j);
  s.add_nonnegativity(rate_names());
  s.add_nonnegativity(bin_names());
  return s;
}

inline bool ingms_membership(const JointPMF& j, const RatePoint& p) {
  p.validate();
  return is_feasible(ingms_closed_system(j).fix(p.full()));
}

/// Region over the nine rates with the bin rates projected out. Rates listed
/// in `pinned` are fixed to the given values first and leave the system.
inline LinSys ingms_project(const JointPMF& j, const std::map<std::string, double>& pinned = {}) {
  std::vector<std::string> keep;
  for (const auto& r : kRateNames)
    if (!pinned.count(r)) keep.push_back(r);
  return project_onto(ingms_closed_system(j).fix(pinned), keep);
}

/// A message triple whose common part may hand rate to its two private parts.
struct Transfer {
  std::string from, to1, to2;
};

inline std::vector<Transfer> default_transfers() {
  return {{"R00", "R01", "R02"}, {"R10", "R11", "R12"}, {"R20", "R21", "R22"}};
}

/// Adds every point reachable by moving rate from a common message to the
/// private messages of the same triple. Rates absent from `sys` are taken to
/// be pinned at zero; they neither give nor receive.
inline LinSys enlarge(const LinSys& sys, const std::vector<Transfer>& sets = default_transfers()) {
  LinSys s = sys;
  struct Move {
    std::string from, to, pi;
  };
  std::vector<Move> moves;
  for (const auto& t : sets) {
    if (!s.index_of(t.from)) continue;
    for (const auto* to : {&t.to1, &t.to2})
      if (s.index_of(*to)) moves.push_back({t.from, *to, "pi." + *to});
  }
  for (const auto& m : moves) s.add_variable(m.pi);
  // The original point is the new one with every transfer undone.
  for (auto& row : s.mutable_rows())
    for (const auto& m : moves)
      row.a[s.require(m.pi)] += row.a[s.require(m.from)] - row.a[s.require(m.to)];
  std::vector<std::string> pis;
  for (const auto& m : moves) {
    pis.push_back(m.pi);
    s.add_nonnegativity({m.pi, m.from, m.to});
    s.add_at_least({{m.to, 1}, {m.pi, -1}}, 0.0, m.to + "-" + m.pi + ">=0");
  }
  for (const auto& t : sets) {
    if (!s.index_of(t.from)) continue;
    std::map<std::string, std::int64_t> shifted{{t.from, 1}};
    for (const auto& m : moves)
      if (m.from == t.from) shifted[m.pi] = 1;
    s.add_at_least(shifted, 0.0, t.from + "+pi>=0");
  }
  std::vector<std::string> keep;
  for (const auto& v : s.variables())
    if (std::find(pis.begin(), pis.end(), v) == pis.end()) keep.push_back(v);
  return project_onto(s, keep);
}

/// Rows over (R0, R1, R2) of the multiple-access channel with a common
/// message. Needs W, X1, X2 and the output `y`.
inline LinSys mac_common_region(const JointPMF& j, const std::string& y = "Y1") {
  LinSys s({"R0", "R1", "R2"});
  s.add({{"R1", 1}}, mutual_information(j, {"X1"}, {y}, {"X2", "W"}), "mac.1");
  s.add({{"R2", 1}}, mutual_information(j, {"X2"}, {y}, {"X1", "W"}), "mac.2");
  s.add({{"R1", 1}, {"R2", 1}}, mutual_information(j, {"X1", "X2"}, {y}, {"W"}), "mac.12");
  s.add({{"R0", 1}, {"R1", 1}, {"R2", 1}}, mutual_information(j, {"X1", "X2"}, {y}, {}), "mac.012");
  s.add_nonnegativity({"R0", "R1", "R2"});
  return s;
}

/// Rows over (R0, R1, R2) of the broadcast channel inner bound. Needs W, U, V, Y1, Y2.
inline LinSys marton_region(const JointPMF& j) {
  const double a1 = mutual_information(j, {"W", "U"}, {"Y1"}, {});
  const double a2 = mutual_information(j, {"W", "V"}, {"Y2"}, {});
  const double u1 = mutual_information(j, {"U"}, {"Y1"}, {"W"});
  const double v2 = mutual_information(j, {"V"}, {"Y2"}, {"W"});
  const double uv = mutual_information(j, {"U"}, {"V"}, {"W"});
  LinSys s({"R0", "R1", "R2"});
  s.add({{"R0", 1}, {"R1", 1}}, a1, "marton.1");
  s.add({{"R0", 1}, {"R2", 1}}, a2, "marton.2");
  s.add({{"R0", 1}, {"R1", 1}, {"R2", 1}}, a1 + v2 - uv, "marton.3");
  s.add({{"R0", 1}, {"R1", 1}, {"R2", 1}}, u1 + a2 - uv, "marton.4");
  s.add({{"R0", 2}, {"R1", 1}, {"R2", 1}}, a1 + a2 - uv, "marton.5");
  s.add_nonnegativity({"R0", "R1", "R2"});
  return s;
}

/// Capacity region of the orthogonal network over the nine rates. Needs W,
/// XA1, XA2, XB1, XB2, Y1, Y2.
inline LinSys orthogonal_capacity(const JointPMF& j) {
  LinSys s(rate_names());
  const std::array<std::array<std::string, 3>, 2> side = {{{"XA1", "XA2", "Y1"}, {"XB1", "XB2", "Y2"}}};
  for (int rx : {1, 2}) {
    const auto& [a, b, y] = side[static_cast<std::size_t>(rx - 1)];
    const std::string p = rx == 1 ? "1" : "2";
    s.add({{"R10", 1}, {"R1" + p, 1}}, mutual_information(j, {a}, {y}, {b, "W"}), "orth." + y + ".1");
    s.add({{"R20", 1}, {"R2" + p, 1}}, mutual_information(j, {b}, {y}, {a, "W"}), "orth." + y + ".2");
    s.add({{"R10", 1}, {"R1" + p, 1}, {"R20", 1}, {"R2" + p, 1}}, mutual_information(j, {a, b}, {y}, {"W"}),
          "orth." + y + ".12");
    s.add({{"R00", 1}, {"R0" + p, 1}, {"R10", 1}, {"R1" + p, 1}, {"R20", 1}, {"R2" + p, 1}},
          mutual_information(j, {a, b}, {y}, {}), "orth." + y + ".012");
  }
  return s;
}

/// The ten-row two-receiver system of the rate-split interference channel over
/// (R10, R11, R20, R22). Needs Q, W1, U1, W2, V2, Y1, Y2.
inline LinSys hk_system(const JointPMF& j) {
  auto I = [&](const VarList& a, const std::string& y, const VarList& g) { return mutual_information(j, a, {y}, g); };
  LinSys s({"R10", "R11", "R20", "R22"});
  s.add({{"R11", 1}}, I({"U1"}, "Y1", {"W1", "W2", "Q"}), "hk.1");
  s.add({{"R10", 1}, {"R11", 1}}, I({"W1", "U1"}, "Y1", {"W2", "Q"}), "hk.2");
  s.add({{"R20", 1}}, I({"W2"}, "Y1", {"W1", "U1", "Q"}), "hk.3");
  s.add({{"R11", 1}, {"R20", 1}}, I({"U1", "W2"}, "Y1", {"W1", "Q"}), "hk.4");
  s.add({{"R10", 1}, {"R11", 1}, {"R20", 1}}, I({"W1", "U1", "W2"}, "Y1", {"Q"}), "hk.5");
  s.add({{"R22", 1}}, I({"V2"}, "Y2", {"W1", "W2", "Q"}), "hk.6");
  s.add({{"R20", 1}, {"R22", 1}}, I({"W2", "V2"}, "Y2", {"W1", "Q"}), "hk.7");
  s.add({{"R10", 1}}, I({"W1"}, "Y2", {"W2", "V2", "Q"}), "hk.8");
  s.add({{"R10", 1}, {"R22", 1}}, I({"W1", "V2"}, "Y2", {"W2", "Q"}), "hk.9");
  s.add({{"R10", 1}, {"R20", 1}, {"R22", 1}}, I({"W1", "W2", "V2"}, "Y2", {"Q"}), "hk.10");
  return s;
}

namespace detail {

// Adds R_i = split parts, nonnegativity of the parts, and projects the parts out.
inline LinSys resum_split_rates(LinSys s) {
  s.add_variable("R1");
  s.add_variable("R2");
  s.add_nonnegativity({"R10", "R11", "R20", "R22"});
  s.add({{"R1", 1}, {"R10", -1}, {"R11", -1}}, 0.0, "R1=R10+R11");
  s.add({{"R1", -1}, {"R10", 1}, {"R11", 1}}, 0.0, "R1=R10+R11");
  s.add({{"R2", 1}, {"R20", -1}, {"R22", -1}}, 0.0, "R2=R20+R22");
  s.add({{"R2", -1}, {"R20", 1}, {"R22", 1}}, 0.0, "R2=R20+R22");
  return eliminate_all(s, {"R10", "R11", "R20", "R22"});
}

}  // namespace detail

/// Interference-channel region over (R1, R2): the ten-row system without the
/// two cross-decoding rows, split rates summed and projected out.
inline LinSys hk_region(const JointPMF& j) { return detail::resum_split_rates(hk_system(j).without({"hk.3", "hk.8"})); }

/// The same region obtained from the full network system: unused messages
/// are zeroed, bins projected out and the matching decoding rows dropped.
inline LinSys hk_region_from_ingms(const JointPMF& j) {
  LinSys s = ingms_closed_system(j).fix({{"R00", 0.0}, {"R01", 0.0}, {"R02", 0.0}, {"R12", 0.0}, {"R21", 0.0}});
  s = s.without({"dec.Y1.E5", "dec.Y2.E4", "R10>=0", "R11>=0", "R20>=0", "R22>=0"});
  s = project_onto(s, {"R10", "R11", "R20", "R22"});
  return detail::resum_split_rates(s);
}

/// The network region reduced to the multiple-access channel with a common
/// message: messages of the V branch are pinned to zero, bins projected out,
/// and common rates may be handed to private ones.
inline LinSys mac_from_ingms(const JointPMF& j) {
  return enlarge(ingms_project(j, {{"R02", 0.0}, {"R12", 0.0}, {"R22", 0.0}}));
}

/// Network point carrying a MAC rate triple: common rate on M01, private
/// rates on M11 and M21.
inline std::map<std::string, double> mac_point(double r0, double r1, double r2) {
  return {{"R00", 0.0}, {"R01", r0}, {"R10", 0.0}, {"R11", r1}, {"R20", 0.0}, {"R21", r2}};
}

/// The network region reduced to the broadcast channel: only M00, M01, M02 are sent.
inline LinSys marton_from_ingms(const JointPMF& j) {
  return enlarge(ingms_project(
      j, {{"R10", 0.0}, {"R11", 0.0}, {"R12", 0.0}, {"R20", 0.0}, {"R21", 0.0}, {"R22", 0.0}}));
}

inline std::map<std::string, double> marton_point(double r0, double r1, double r2) {
  return {{"R00", r0}, {"R01", r1}, {"R02", r2}};
}

}  // namespace ingms
