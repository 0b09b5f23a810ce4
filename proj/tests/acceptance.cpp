// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
// any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "ingms/codingsim.hpp"
#include "ingms/diagnostics.hpp"
#include "ingms/io.hpp"
#include "ingms/models.hpp"
#include "oracle.hpp"

using namespace ingms;

namespace {

using Clock = std::chrono::steady_clock;

bool all_passed = true;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void report(const std::string& id, bool pass, const std::string& detail, double secs) {
  all_passed = all_passed && pass;
  std::cout << (pass ? "PASS " : "FAIL ") << id << "  " << detail << "  (" << format_real(std::round(secs * 100) / 100)
            << " s)" << std::endl;
}

std::string data(const std::string& name) { return std::string(INGMS_DATA_DIR) + "/" + name; }

std::string agreement(const CheckResult& r) {
  return std::to_string(r.agree) + "/" + std::to_string(r.total) + " agree";
}

void a1() {
  const auto t0 = Clock::now();
  Rng rng(101);
  const auto r = check_orthogonal_identity(rng, 20, 1e-9);
  const double secs = seconds_since(t0);
  report("A1", r.pass && secs < 10.0, "max |delta| = " + format_real(r.max_deviation) + " over 20 joints", secs);
}

void a2() {
  const auto t0 = Clock::now();
  Rng rng(102);
  const auto r = check_mac_agreement(rng, 5, 0.05, 2.0);
  const double secs = seconds_since(t0);
  report("A2", r.pass && secs < 60.0, agreement(r) + " on 5 MACs", secs);
}

void a3() {
  const auto t0 = Clock::now();
  Rng rng(103);
  const auto r = check_marton_agreement(rng, 5, 0.05, 2.0);
  const double secs = seconds_since(t0);
  report("A3", r.pass && secs < 60.0, agreement(r) + " on 5 broadcast channels", secs);
}

void a4() {
  const auto t0 = Clock::now();
  Rng rng(104);
  const auto r = check_hk_agreement(rng, 3, 100);
  report("A4", r.pass, agreement(r) + " on 3 interference channels", seconds_since(t0));
}

void a5() {
  const auto t0 = Clock::now();
  Rng rng(105);
  std::size_t violations = 0, feasible = 0;
  for (int rep = 0; rep < 200; ++rep) {
    oracle::IntSystem s;
    s.vars = 1 + rng.index(5);
    const std::size_t rows = 1 + rng.index(8);
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<int> a(s.vars);
      for (auto& c : a) c = static_cast<int>(rng.index(7)) - 3;
      s.a.push_back(a);
      s.b.push_back(static_cast<double>(static_cast<int>(rng.index(21)) - 10) / 2.0);
    }
    std::vector<std::string> names;
    for (std::size_t k = 0; k < s.vars; ++k) names.push_back("x" + std::to_string(k));
    LinSys ls(names);
    for (std::size_t r = 0; r < rows; ++r) {
      std::map<std::string, std::int64_t> c;
      for (std::size_t k = 0; k < s.vars; ++k)
        if (s.a[r][k] != 0) c[names[k]] = s.a[r][k];
      ls.add(c, s.b[r]);
    }
    const bool fm = is_feasible(ls);
    const bool grid = oracle::grid_feasible(s, -10.0, 10.0, 8);
    feasible += fm;
    if (grid && !fm) ++violations;
  }
  report("A5", violations == 0,
         std::to_string(violations) + " violations over 200 systems (" + std::to_string(feasible) + " feasible)",
         seconds_since(t0));
}

void a6() {
  const auto t0 = Clock::now();
  const auto j = build_joint(load_factorization(data("covering_factorization.json")));
  const auto t = covering_thresholds(j);
  // Thresholds are cumulative: B0, B0+B1, B0+B2, B0+B1+B2.
  const std::array<double, 3> base = {t[0], t[1] - t[0], t[2] - t[0]};
  const TypicalityParams typ{0.2, 10};
  auto scaled = [&](double f) { return std::array<double, 3>{f * base[0], f * base[1], f * base[2]}; };
  const auto above = covering_experiment(j, scaled(1.2), typ, 500, 6);
  const auto below = covering_experiment(j, scaled(0.5), typ, 500, 6);
  const double secs = seconds_since(t0);
  report("A6", above.rate() < 0.2 && below.rate() > 0.8 && secs < 300.0,
         "no-cover " + format_real(above.rate()) + " at 1.2x, " + format_real(below.rate()) + " at 0.5x", secs);
}

SimConfig a7_config(double r11) {
  auto fac = load_factorization(data("orthogonal_single_input_factorization.json"));
  const auto ch = load_channel(data("clean_orthogonal_channel.json"));
  detail::add_pairs(fac, *ch.orthogonal);
  SimConfig cfg;
  cfg.factorization = fac;
  cfg.channel = ch.channel;
  cfg.typ = {0.25, 8};
  cfg.trials = 200;
  cfg.seed = 1;
  cfg.rates = RatePoint{{{"R11", r11}}};
  return cfg;
}

void a7() {
  const auto t0 = Clock::now();
  // The single-rate bound I(XA1;Y1|XA2,W) of the orthogonal region.
  auto cfg = a7_config(0.0);
  const auto joint = build_joint(cfg.factorization, cfg.channel);
  const double bound = orthogonal_capacity(joint).rows()[0].rhs;
  cfg.rates = RatePoint{{{"R11", 0.5 * bound}}};
  const auto low = run_trials(cfg);
  const auto again = run_trials(cfg);
  cfg.rates = RatePoint{{{"R11", 1.25 * bound}}};
  const auto high = run_trials(cfg);
  const bool same = simulation_csv(low) == simulation_csv(again);
  const double secs = seconds_since(t0);
  report("A7", low.error_rate() <= 0.05 && high.error_rate() >= 0.5 && same,
         "bound " + format_real(bound) + "; error " + format_real(low.error_rate()) + " at 50%, " +
             format_real(high.error_rate()) + " at 125%; deterministic " + (same ? "yes" : "no"),
         secs);
}

void a8() {
  const auto t0 = Clock::now();
  Rng rng(108);
  double worst = 0.0;
  const VarList sender1 = {"X1", "W1", "U1", "V1"}, sender2 = {"X2", "W2", "U2", "V2"}, common = {"W0", "U0", "V0"};
  const VarList aux = {"W0", "U0", "V0", "W1", "U1", "V1", "W2", "U2", "V2"};
  for (int rep = 0; rep < 100; ++rep) {
    const auto j = random_network_joint(rng);
    const double chain = mutual_information(j, {"U1"}, {"Y1", "W2"}, {"W0"}) -
                         mutual_information(j, {"U1"}, {"Y1"}, {"W0"}) -
                         mutual_information(j, {"U1"}, {"W2"}, {"Y1", "W0"});
    const double chain_h = entropy(j, {"X1", "Y1"}) - entropy(j, {"X1"}) - entropy(j, {"Y1"}, {"X1"});
    worst = std::max({worst, std::abs(chain), std::abs(chain_h)});
    worst = std::max(worst, -std::min({entropy(j, {"V2"}, {"Y2", "X1"}), mutual_information(j, {"U0"}, {"Y2"}, {"X2"}),
                                       mutual_information(j, {"W1", "U1"}, {"Y1"}, {"W0", "V0"})}));
    worst = std::max(worst, std::abs(mutual_information(j, sender1, sender2, common)));
    worst = std::max(worst, std::abs(mutual_information(j, aux, {"Y1", "Y2"}, {"X1", "X2"})));
  }
  report("A8", worst <= 1e-9, "worst deviation " + format_real(worst) + " over 100 joints", seconds_since(t0));
}

void a9() {
  const auto t0 = Clock::now();
  const std::string cmd = std::string(INGMS_CLI) + " check --only bounds --joints 10 --seed 9 2>&1";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  int code = -1;
  if (p) {
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    const int status = pclose(p);
    code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  std::size_t deltas = 0, cases = 0;
  std::istringstream lines(out);
  for (std::string line; std::getline(lines, line);) {
    if (line.find(" delta=") != std::string::npos) ++deltas;
    const auto at = line.find("cases=");
    if (at != std::string::npos) cases = std::stoul(line.substr(at + 6));
  }
  const bool pass = code == 0 && out.rfind("INFO decoding-bounds", 0) == 0 && deltas > 0 && deltas == cases;
  report("A9", pass, std::to_string(deltas) + " deltas reported for 10 joints, exit " + std::to_string(code),
         seconds_since(t0));
}

}  // namespace

int main() {
  for (auto* step : {a1, a2, a3, a4, a5, a6, a7, a8, a9}) {
    try {
      step();
    } catch (const std::exception& e) {
      all_passed = false;
      std::cout << "FAIL  error: " << e.what() << std::endl;
    }
  }
  return all_passed ? 0 : 1;
}
