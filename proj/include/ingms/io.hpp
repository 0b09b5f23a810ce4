#pragma once

// File formats: JSON channel and factorization files, region and constant
// listings, simulation CSV and summaries.

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ingms/channel.hpp"
#include "ingms/codingsim.hpp"
#include "ingms/error.hpp"
#include "ingms/pmf.hpp"
#include "ingms/region.hpp"

namespace ingms {

using Json = nlohmann::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path);
}

inline Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, what + ": " + e.what());
  }
}

/// Value rounded to 12 significant digits, so JSON output prints at most that many.
inline double round12(double v) { return std::strtod(format_real(v).c_str(), nullptr); }

namespace detail {

// Flattens a rectangular nested array of numbers, recording its shape.
inline void flatten(const Json& j, std::size_t depth, std::vector<std::size_t>& shape, std::vector<double>& out,
                    const std::string& what) {
  if (j.is_number()) {
    if (depth != shape.size() && !shape.empty()) throw Error(ErrorKind::Parse, what + ": ragged array");
    out.push_back(j.get<double>());
    return;
  }
  if (!j.is_array()) throw Error(ErrorKind::Parse, what + ": expected numbers or arrays");
  if (depth == shape.size()) {
    if (!out.empty()) throw Error(ErrorKind::Parse, what + ": ragged array");
    shape.push_back(j.size());
  } else if (shape[depth] != j.size()) {
    throw Error(ErrorKind::Parse, what + ": ragged array");
  }
  for (const auto& e : j) flatten(e, depth + 1, shape, out, what);
}

inline std::vector<double> flat_table(const Json& j, std::vector<std::size_t>& shape, const std::string& what) {
  std::vector<double> out;
  shape.clear();
  flatten(j, 0, shape, out, what);
  return out;
}

inline std::size_t size_field(const Json& obj, const char* key, std::size_t inferred, const std::string& what) {
  if (!obj.contains(key)) return inferred;
  const auto v = obj.at(key).get<std::size_t>();
  if (v != inferred)
    throw Error(ErrorKind::AlphabetMismatch, what + ": " + key + "=" + std::to_string(v) + " but table has " +
                                                 std::to_string(inferred));
  return v;
}

inline Json nest(const std::vector<double>& flat, const std::vector<std::size_t>& shape, std::size_t depth = 0,
                 std::size_t offset = 0) {
  Json a = Json::array();
  std::size_t block = 1;
  for (std::size_t k = depth + 1; k < shape.size(); ++k) block *= shape[k];
  for (std::size_t i = 0; i < shape[depth]; ++i) {
    if (depth + 1 == shape.size())
      a.push_back(flat[offset + i]);
    else
      a.push_back(nest(flat, shape, depth + 1, offset + i * block));
  }
  return a;
}

}  // namespace detail

/// A channel file holds either a general two-output channel or an
/// orthogonal one; `channel` is always the composed general form.
struct ChannelFile {
  ChannelSpec channel;
  std::optional<OrthogonalChannelSpec> orthogonal;
};

inline ChannelFile parse_channel(const Json& j) {
  try {
    ChannelFile f;
    if (j.contains("orthogonal")) {
      const auto& o = j.at("orthogonal");
      std::vector<std::size_t> sa, sb;
      auto la = detail::flat_table(o.at("lawA"), sa, "lawA");
      auto lb = detail::flat_table(o.at("lawB"), sb, "lawB");
      if (sa.size() != 3 || sb.size() != 3) throw Error(ErrorKind::Parse, "lawA and lawB must be 3-dimensional");
      OrthogonalChannelSpec spec{Alphabet(detail::size_field(o, "xA1", sa[0], "lawA")),
                                 Alphabet(detail::size_field(o, "xA2", sa[1], "lawA")),
                                 Alphabet(detail::size_field(o, "xB1", sb[0], "lawB")),
                                 Alphabet(detail::size_field(o, "xB2", sb[1], "lawB")),
                                 Alphabet(detail::size_field(o, "y1", sa[2], "lawA")),
                                 Alphabet(detail::size_field(o, "y2", sb[2], "lawB")),
                                 std::move(la),
                                 std::move(lb)};
      require_valid(spec);
      f.channel = compose_orthogonal(spec);
      f.orthogonal = std::move(spec);
      return f;
    }
    std::vector<std::size_t> s;
    auto law = detail::flat_table(j.at("law"), s, "law");
    if (s.size() != 4) throw Error(ErrorKind::Parse, "law must be 4-dimensional [x1][x2][y1][y2]");
    f.channel = ChannelSpec{Alphabet(detail::size_field(j, "x1", s[0], "law")),
                            Alphabet(detail::size_field(j, "x2", s[1], "law")),
                            Alphabet(detail::size_field(j, "y1", s[2], "law")),
                            Alphabet(detail::size_field(j, "y2", s[3], "law")), std::move(law), nullptr};
    require_valid(f.channel);
    return f;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("channel: ") + e.what());
  }
}

inline ChannelFile load_channel(const std::string& path) {
  return parse_channel(parse_json(read_file(path), path));
}

inline Json channel_to_json(const ChannelSpec& c) {
  return Json{{"x1", c.x1.size},
              {"x2", c.x2.size},
              {"y1", c.y1.size},
              {"y2", c.y2.size},
              {"law", detail::nest(c.law, {c.x1.size, c.x2.size, c.y1.size, c.y2.size})}};
}

inline Json channel_to_json(const OrthogonalChannelSpec& o) {
  return Json{{"orthogonal",
               {{"xA1", o.xA1.size},
                {"xA2", o.xA2.size},
                {"xB1", o.xB1.size},
                {"xB2", o.xB2.size},
                {"y1", o.y1.size},
                {"y2", o.y2.size},
                {"lawA", detail::nest(o.lawA, {o.xA1.size, o.xA2.size, o.y1.size})},
                {"lawB", detail::nest(o.lawB, {o.xB1.size, o.xB2.size, o.y2.size})}}}};
}

/// Factorization file:
///   {"factors": [{"targets": ["X1", "W1"], "sizes": [2, 2], "given": ["Q"],
///                 "table": [[...], [...]]}, ...],
///    "identify": {"U1": "X1"}, "constant": ["W1"]}
/// Targets may also be objects {"name": .., "size": ..}; tables may be flat.
/// "identify" and "constant" accept objects or arrays of string pairs.
inline FactorizationSpec parse_factorization(const Json& j) {
  try {
    FactorizationSpec f;
    if (j.contains("constant")) {
      const auto& c = j.at("constant");
      if (c.is_object())
        for (auto it = c.begin(); it != c.end(); ++it) f.constant(it.key());
      else
        for (const auto& e : c) f.constant(e.is_array() ? e.at(0).get<std::string>() : e.get<std::string>());
    }
    for (const auto& fj : j.at("factors")) {
      std::vector<Variable> targets;
      const auto& tj = fj.at("targets");
      for (std::size_t i = 0; i < tj.size(); ++i) {
        if (tj[i].is_object()) {
          targets.push_back({tj[i].at("name").get<std::string>(), tj[i].at("size").get<std::size_t>()});
        } else {
          if (!fj.contains("sizes") || fj.at("sizes").size() != tj.size())
            throw Error(ErrorKind::Parse, "factor needs one size per target");
          targets.push_back({tj[i].get<std::string>(), fj.at("sizes")[i].get<std::size_t>()});
        }
      }
      VarList given = fj.value("given", VarList{});
      std::vector<std::size_t> shape;
      auto table = detail::flat_table(fj.at("table"), shape, "factor table");
      f.add(std::move(targets), std::move(given), std::move(table));
    }
    if (j.contains("identify")) {
      const auto& id = j.at("identify");
      if (id.is_object())
        for (auto it = id.begin(); it != id.end(); ++it) f.alias(it.key(), it.value().get<std::string>());
      else
        for (const auto& p : id) f.alias(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    }
    return f;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("factorization: ") + e.what());
  }
}

inline FactorizationSpec load_factorization(const std::string& path) {
  return parse_factorization(parse_json(read_file(path), path));
}

inline Json factorization_to_json(const FactorizationSpec& f) {
  Json out;
  out["constant"] = f.constants;
  out["factors"] = Json::array();
  for (const auto& fa : f.factors) {
    Json t = Json::array();
    for (const auto& v : fa.targets) t.push_back({{"name", v.name}, {"size", v.size}});
    out["factors"].push_back({{"targets", t}, {"given", fa.given}, {"table", fa.table}});
  }
  Json id = Json::object();
  for (const auto& [a, t] : f.identify) id[a] = t;
  out["identify"] = id;
  return out;
}

inline Json constants_to_json(const std::vector<NamedConstant>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back({{"name", c.name}, {"expression", c.expression}, {"value", round12(c.value)}});
  return a;
}

/// RFC 4180 field quoting.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string simulation_csv(const SimReport& r) {
  std::string out = "trial,E1e,E2e,E3e,E4e,rx1_label,rx2_label\r\n";
  for (const auto& o : r.outcomes) {
    out += std::to_string(o.trial);
    for (bool e : o.encoding) out += e ? ",1" : ",0";
    out += "," + csv_field(o.rx1) + "," + csv_field(o.rx2) + "\r\n";
  }
  return out;
}

inline Json simulation_summary(const SimReport& r, const SimConfig& cfg) {
  auto rate = [&](std::size_t k) { return round12(SimReport::rate(k, r.trials)); };
  auto se = [&](std::size_t k) { return round12(SimReport::stderr_of(k, r.trials)); };
  Json rates = Json::object(), bins = Json::object();
  for (const auto& n : kRateNames) rates[n] = round12(cfg.rates[n]);
  for (const auto& n : kBinNames) bins[n] = round12(cfg.bins[n]);
  Json enc = Json::object(), h1 = Json::object(), h2 = Json::object();
  for (std::size_t e = 0; e < 4; ++e) enc["E" + std::to_string(e + 1) + "e"] = r.encoding[e];
  for (int k = 0; k <= 13; ++k) {
    h1[event_label(k)] = r.rx1_events[static_cast<std::size_t>(k)];
    h2[event_label(k)] = r.rx2_events[static_cast<std::size_t>(k)];
  }
  return Json{{"trials", r.trials},
              {"n", cfg.typ.n},
              {"epsilon", round12(cfg.typ.epsilon)},
              {"seed", cfg.seed},
              {"rates", rates},
              {"bins", bins},
              {"counts",
               {{"rx1_errors", r.rx1_errors},
                {"rx2_errors", r.rx2_errors},
                {"errors", r.errors},
                {"encoding", enc},
                {"rx1_events", h1},
                {"rx2_events", h2}}},
              {"error_rates", {{"rx1", rate(r.rx1_errors)}, {"rx2", rate(r.rx2_errors)}, {"total", rate(r.errors)}}},
              {"standard_errors", {{"rx1", se(r.rx1_errors)}, {"rx2", se(r.rx2_errors)}, {"total", se(r.errors)}}}};
}

inline Json covering_summary(const CoveringReport& r, const std::array<double, 3>& bins, const TypicalityParams& typ,
                             std::uint64_t seed) {
  Json th = Json::array();
  for (double t : r.thresholds) th.push_back(round12(t));
  return Json{{"trials", r.trials},
              {"n", typ.n},
              {"epsilon", round12(typ.epsilon)},
              {"seed", seed},
              {"bins", {round12(bins[0]), round12(bins[1]), round12(bins[2])}},
              {"thresholds", th},
              {"uncovered", r.uncovered},
              {"no_cover_rate", round12(r.rate())},
              {"standard_error", round12(r.standard_error())}};
}

}  // namespace ingms
