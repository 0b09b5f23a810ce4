#pragma once

// Self-checks run by `ingms check`: listed-vs-general decoding bounds,
// the orthogonal identity, and agreement of the specialized regions with
// their classical counterparts.

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "ingms/fme.hpp"
#include "ingms/models.hpp"
#include "ingms/random.hpp"
#include "ingms/region.hpp"

namespace ingms {

struct CheckResult {
  std::string name;
  bool pass = true;
  bool informational = false;
  double max_deviation = 0.0;
  std::size_t agree = 0, total = 0;
  std::vector<std::string> lines;
};

/// Random joint of the general network shape over binary variables with a
/// random binary two-output channel.
inline JointPMF random_network_joint(Rng& rng) {
  return build_joint(random_network_factorization(rng), random_channel(rng, 2, 2, 2, 2));
}

/// Reports every listed-minus-general delta; never fails on a nonzero delta.
inline CheckResult check_decoding_bounds(const std::vector<JointPMF>& joints) {
  CheckResult r;
  r.name = "decoding-bounds";
  r.informational = true;
  for (std::size_t i = 0; i < joints.size(); ++i)
    for (const auto& d : compare_decoding_bounds(joints[i])) {
      r.max_deviation = std::max(r.max_deviation, std::abs(d.delta()));
      ++r.total;
      r.lines.push_back("joint " + std::to_string(i) + " Y" + std::to_string(d.rx) + " E" + std::to_string(d.event) +
                        " listed=" + format_real(d.listed) + " general=" + format_real(d.general) +
                        " delta=" + format_real(d.delta()));
    }
  return r;
}

/// Direct-part rows from the network specialization against the capacity
/// rows, constant by constant.
inline CheckResult check_orthogonal_identity(Rng& rng, std::size_t count, double tol = 1e-9) {
  CheckResult r;
  r.name = "orthogonal-identity";
  const std::array<int, 4> events = {4, 5, 9, 13};
  for (std::size_t c = 0; c < count; ++c) {
    const auto in = random_orthogonal_inputs(rng);
    const auto o = random_orthogonal_channel(rng);
    const auto cap = orthogonal_capacity(orthogonal_joint(in, o));
    const auto direct = orthogonal_direct_joint(in, o);
    for (int rx : {1, 2}) {
      const auto d = decoding_bounds(direct, rx);
      for (std::size_t q = 0; q < 4; ++q) {
        const double dev = std::abs(d(events[q]) - cap.rows()[static_cast<std::size_t>(rx - 1) * 4 + q].rhs);
        r.max_deviation = std::max(r.max_deviation, dev);
      }
    }
  }
  r.total = count;
  r.pass = r.max_deviation < tol;
  return r;
}

/// Counts grid points of [0, hi]^3 (step `step`) where the two membership
/// tests agree.
inline void grid_agreement(CheckResult& r, double step, double hi,
                           const std::function<bool(double, double, double)>& a,
                           const std::function<bool(double, double, double)>& b) {
  const int k = static_cast<int>(std::lround(hi / step));
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j)
      for (int l = 0; l <= k; ++l) {
        const double x = i * step, y = j * step, z = l * step;
        ++r.total;
        if (a(x, y, z) == b(x, y, z)) ++r.agree;
      }
}

inline void finish_agreement(CheckResult& r) {
  r.pass = r.agree == r.total;
  r.max_deviation = r.total == 0 ? 0.0 : 1.0 - static_cast<double>(r.agree) / static_cast<double>(r.total);
}

inline CheckResult check_mac_agreement(Rng& rng, std::size_t count, double step = 0.05, double hi = 2.0) {
  CheckResult r;
  r.name = "mac-specialization";
  for (std::size_t c = 0; c < count; ++c) {
    const auto j = random_mac_joint(rng);
    const auto net = mac_from_ingms(j);
    const auto mac = mac_common_region(j);
    grid_agreement(
        r, step, hi, [&](double a, double b, double d) { return net.contains(mac_point(a, b, d)); },
        [&](double a, double b, double d) { return mac.contains({{"R0", a}, {"R1", b}, {"R2", d}}); });
  }
  finish_agreement(r);
  return r;
}

inline CheckResult check_marton_agreement(Rng& rng, std::size_t count, double step = 0.05, double hi = 2.0) {
  CheckResult r;
  r.name = "marton-specialization";
  for (std::size_t c = 0; c < count; ++c) {
    const auto j = random_marton_joint(rng);
    const auto net = marton_from_ingms(j);
    const auto bc = marton_region(j);
    grid_agreement(
        r, step, hi, [&](double a, double b, double d) { return net.contains(marton_point(a, b, d)); },
        [&](double a, double b, double d) { return bc.contains({{"R0", a}, {"R1", b}, {"R2", d}}); });
  }
  finish_agreement(r);
  return r;
}

inline CheckResult check_hk_agreement(Rng& rng, std::size_t count, std::size_t points = 100) {
  CheckResult r;
  r.name = "hk-pipeline";
  for (std::size_t c = 0; c < count; ++c) {
    const auto j = random_hk_joint(rng);
    const auto direct = hk_region(j);
    const auto net = hk_region_from_ingms(j);
    for (std::size_t p = 0; p < points; ++p) {
      const std::map<std::string, double> pt{{"R1", rng.uniform(0.0, 1.0)}, {"R2", rng.uniform(0.0, 1.0)}};
      ++r.total;
      if (direct.contains(pt) == net.contains(pt)) ++r.agree;
    }
  }
  finish_agreement(r);
  return r;
}

}  // namespace ingms
