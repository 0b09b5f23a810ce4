#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "ingms/codingsim.hpp"
#include "ingms/diagnostics.hpp"
#include "ingms/io.hpp"
#include "ingms/models.hpp"
#include "ingms/region.hpp"

using namespace ingms;

namespace {

constexpr int kExitError = 1;
constexpr int kExitCheckFailed = 2;

struct Options {
  std::string channel, factorization, kind = "ingms-projected", rates, bins, out;
  std::string order2 = "lex", order3 = "lex", only;
  bool enlarge = false;
  std::size_t n = 8, trials = 100, joints = 10;
  double epsilon = 0.25;
  std::uint64_t seed = 1;
};

bool defines(const FactorizationSpec& f, const std::string& name) {
  for (const auto& c : f.constants)
    if (c == name) return true;
  for (const auto& [a, t] : f.identify)
    if (a == name) return true;
  for (const auto& fa : f.factors)
    for (const auto& v : fa.targets)
      if (v.name == name) return true;
  return false;
}

struct Loaded {
  ChannelFile channel;
  FactorizationSpec factorization;
  JointPMF joint;
};

Loaded load(const Options& o, bool need_channel = true) {
  if (o.factorization.empty()) throw Error(ErrorKind::InvalidArgument, "--factorization is required");
  Loaded l;
  l.factorization = load_factorization(o.factorization);
  if (o.channel.empty()) {
    if (need_channel) throw Error(ErrorKind::InvalidArgument, "--channel is required");
    l.joint = build_joint(l.factorization);
    return l;
  }
  l.channel = load_channel(o.channel);
  if (l.channel.orthogonal && !defines(l.factorization, "X1")) detail::add_pairs(l.factorization, *l.channel.orthogonal);
  l.joint = build_joint(l.factorization, l.channel.channel);
  return l;
}

const std::map<std::string, std::string>& row_expressions() {
  static const std::map<std::string, std::string> m = {
      {"mac.1", "I(X1;Y1|X2,W)"},
      {"mac.2", "I(X2;Y1|X1,W)"},
      {"mac.12", "I(X1,X2;Y1|W)"},
      {"mac.012", "I(X1,X2;Y1)"},
      {"marton.1", "I(W,U;Y1)"},
      {"marton.2", "I(W,V;Y2)"},
      {"marton.3", "I(W,U;Y1)+I(V;Y2|W)-I(U;V|W)"},
      {"marton.4", "I(U;Y1|W)+I(W,V;Y2)-I(U;V|W)"},
      {"marton.5", "I(W,U;Y1)+I(W,V;Y2)-I(U;V|W)"},
      {"orth.Y1.1", "I(XA1;Y1|XA2,W)"},
      {"orth.Y1.2", "I(XA2;Y1|XA1,W)"},
      {"orth.Y1.12", "I(XA1,XA2;Y1|W)"},
      {"orth.Y1.012", "I(XA1,XA2;Y1)"},
      {"orth.Y2.1", "I(XB1;Y2|XB2,W)"},
      {"orth.Y2.2", "I(XB2;Y2|XB1,W)"},
      {"orth.Y2.12", "I(XB1,XB2;Y2|W)"},
      {"orth.Y2.012", "I(XB1,XB2;Y2)"},
      {"hk.1", "I(U1;Y1|W1,W2,Q)"},
      {"hk.2", "I(W1,U1;Y1|W2,Q)"},
      {"hk.3", "I(W2;Y1|W1,U1,Q)"},
      {"hk.4", "I(U1,W2;Y1|W1,Q)"},
      {"hk.5", "I(W1,U1,W2;Y1|Q)"},
      {"hk.6", "I(V2;Y2|W1,W2,Q)"},
      {"hk.7", "I(W2,V2;Y2|W1,Q)"},
      {"hk.8", "I(W1;Y2|W2,V2,Q)"},
      {"hk.9", "I(W1,V2;Y2|W2,Q)"},
      {"hk.10", "I(W1,W2,V2;Y2|Q)"},
  };
  return m;
}

std::vector<NamedConstant> row_constants(const LinSys& s) {
  std::vector<NamedConstant> out;
  for (const auto& r : s.rows()) {
    auto it = row_expressions().find(r.label);
    if (it != row_expressions().end()) out.push_back({r.label, it->second, r.rhs});
  }
  return out;
}

std::pair<LinSys, std::vector<NamedConstant>> build_region(const Options& o, const JointPMF& j) {
  LinSys s;
  std::vector<NamedConstant> cs;
  if (o.kind == "ingms") {
    s = ingms_closed_system(j);
    cs = ingms_constants(j);
  } else if (o.kind == "ingms-projected") {
    s = ingms_project(j);
    cs = ingms_constants(j);
  } else if (o.kind == "mac") {
    s = mac_common_region(j);
    cs = row_constants(s);
  } else if (o.kind == "marton") {
    s = marton_region(j);
    cs = row_constants(s);
  } else if (o.kind == "orthogonal") {
    s = orthogonal_capacity(j);
    cs = row_constants(s);
  } else if (o.kind == "hk") {
    s = hk_region(j);
    cs = row_constants(hk_system(j));
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown kind '" + o.kind + "'");
  }
  if (o.enlarge) s = enlarge(s);
  return {s, cs};
}

int cmd_region(const Options& o) {
  const auto l = load(o);
  const auto [sys, cs] = build_region(o, l.joint);
  const std::string consts = constants_to_json(cs).dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << sys.to_text() << consts;
  } else {
    write_file(o.out + ".txt", sys.to_text());
    write_file(o.out + ".constants.json", consts);
    std::cout << sys.size() << " rows written to " << o.out << ".txt\n";
  }
  return 0;
}

int cmd_member(const Options& o) {
  const auto l = load(o);
  Options po = o;
  if (po.kind == "ingms") po.kind = "ingms-projected";
  const auto sys = build_region(po, l.joint).first;
  const auto given = detail::parse_assignments(o.rates, "R");
  std::map<std::string, double> point;
  for (const auto& v : sys.variables()) point[v] = 0.0;
  for (const auto& [n, v] : given) {
    if (!point.count(n)) throw Error(ErrorKind::UnknownVariable, n + " is not a rate of the " + po.kind + " region");
    if (!(v >= 0.0)) throw Error(ErrorKind::InvalidArgument, n + " must be >= 0");
    point[n] = v;
  }
  const auto bad = sys.first_violated(point);
  if (!bad) {
    std::cout << "true\n";
    return 0;
  }
  LinSys witness(sys.variables());
  witness.add_row(sys.rows()[*bad]);
  std::cout << "false\nviolated: " << witness.to_text();
  return 0;
}

SimConfig sim_config(const Options& o, const Loaded& l) {
  SimConfig cfg;
  cfg.rates = RatePoint::parse(o.rates);
  cfg.bins = BinRates::parse(o.bins);
  cfg.typ = {o.epsilon, o.n};
  cfg.factorization = l.factorization;
  cfg.channel = l.channel.channel;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.ord2 = LambdaOrder::parse(o.order2, 2);
  cfg.ord3 = LambdaOrder::parse(o.order3, 3);
  return cfg;
}

int cmd_simulate(const Options& o) {
  const auto l = load(o);
  const auto cfg = sim_config(o, l);
  const auto rep = run_trials(cfg);
  const std::string csv = simulation_csv(rep);
  const std::string summary = simulation_summary(rep, cfg).dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << csv << summary;
  } else {
    write_file(o.out + ".csv", csv);
    write_file(o.out + ".summary.json", summary);
    std::cout << "error rate " << format_real(rep.error_rate()) << " over " << rep.trials << " trials\n";
  }
  return 0;
}

int cmd_covering(const Options& o) {
  const auto l = load(o, false);
  const auto b = BinRates::parse(o.bins);
  const std::array<double, 3> bins = {b["B10"], b["B11"], b["B12"]};
  const TypicalityParams typ{o.epsilon, o.n};
  const auto rep = covering_experiment(l.joint, bins, typ, o.trials, o.seed);
  const std::string summary = covering_summary(rep, bins, typ, o.seed).dump(2) + "\n";
  if (o.out.empty())
    std::cout << summary;
  else
    write_file(o.out + ".json", summary);
  return 0;
}

void print_check(const CheckResult& r, bool verbose) {
  const char* status = r.informational ? "INFO" : (r.pass ? "PASS" : "FAIL");
  std::cout << status << " " << r.name << " max_deviation=" << format_real(r.max_deviation);
  if (r.total) std::cout << " cases=" << r.total;
  if (!r.informational && r.agree) std::cout << " agree=" << r.agree;
  std::cout << "\n";
  if (verbose)
    for (const auto& line : r.lines) std::cout << "  " << line << "\n";
}

int cmd_check(const Options& o) {
  auto wants = [&](const std::string& name) { return o.only.empty() || o.only == name; };
  std::vector<CheckResult> results;
  Rng rng(o.seed);
  if (wants("bounds")) {
    std::vector<JointPMF> joints;
    if (!o.factorization.empty()) {
      joints.push_back(load(o, false).joint);
    } else {
      for (std::size_t i = 0; i < o.joints; ++i) joints.push_back(random_network_joint(rng));
    }
    results.push_back(check_decoding_bounds(joints));
  }
  if (wants("orthogonal")) results.push_back(check_orthogonal_identity(rng, 20));
  if (wants("mac")) results.push_back(check_mac_agreement(rng, 1));
  if (wants("marton")) results.push_back(check_marton_agreement(rng, 1));
  if (wants("hk")) results.push_back(check_hk_agreement(rng, 1));
  if (results.empty()) throw Error(ErrorKind::InvalidArgument, "unknown check '" + o.only + "'");
  bool ok = true;
  for (const auto& r : results) {
    print_check(r, true);
    ok = ok && (r.informational || r.pass);
  }
  return ok ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Achievable rate regions and random-coding simulations for two-transmitter two-receiver networks"};
  app.require_subcommand(1);
  Options o;

  auto files = [&](CLI::App* c, bool channel = true) {
    if (channel) c->add_option("--channel", o.channel, "channel JSON file");
    c->add_option("--factorization", o.factorization, "factorization JSON file");
  };

  auto* region = app.add_subcommand("region", "write a rate region and its constants");
  files(region);
  region->add_option("--kind", o.kind, "ingms | ingms-projected | mac | marton | orthogonal | hk");
  region->add_flag("--enlarge", o.enlarge, "allow common rate to move to private messages");
  region->add_option("--out", o.out, "output stem: STEM.txt and STEM.constants.json");

  auto* member = app.add_subcommand("member", "test whether a rate point lies in a region");
  files(member);
  member->add_option("--kind", o.kind, "region kind, as for `region`");
  member->add_flag("--enlarge", o.enlarge, "test the enlarged region");
  member->add_option("--rates", o.rates, "R00=..,R11=.. (absent rates are 0)");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo random-coding trials");
  files(simulate);
  simulate->add_option("--rates", o.rates, "message rates R00=..,...");
  simulate->add_option("--bins", o.bins, "bin rates B01=..,...");
  simulate->add_option("--n", o.n, "blocklength")->check(CLI::PositiveNumber);
  simulate->add_option("--epsilon", o.epsilon, "typicality slack")->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--trials", o.trials, "number of trials");
  simulate->add_option("--seed", o.seed, "64-bit seed");
  simulate->add_option("--order2", o.order2, "bin-pair order: lex | colex");
  simulate->add_option("--order3", o.order3, "bin-triple order: lex | colex");
  simulate->add_option("--out", o.out, "output stem: STEM.csv and STEM.summary.json");

  auto* covering = app.add_subcommand("covering", "empirical no-cover probability");
  files(covering, false);
  covering->add_option("--bins", o.bins, "B10=..,B11=..,B12=..");
  covering->add_option("--n", o.n, "blocklength")->check(CLI::PositiveNumber);
  covering->add_option("--epsilon", o.epsilon, "typicality slack")->check(CLI::Range(0.0, 1.0));
  covering->add_option("--trials", o.trials, "number of trials");
  covering->add_option("--seed", o.seed, "64-bit seed");
  covering->add_option("--out", o.out, "output stem: STEM.json");

  auto* check = app.add_subcommand("check", "run the diagnostic suites");
  files(check);
  check->add_option("--only", o.only, "bounds | orthogonal | mac | marton | hk");
  check->add_option("--joints", o.joints, "random joints for the bounds comparison");
  check->add_option("--seed", o.seed, "64-bit seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*region) return cmd_region(o);
    if (*member) return cmd_member(o);
    if (*simulate) return cmd_simulate(o);
    if (*covering) return cmd_covering(o);
    if (*check) return cmd_check(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
