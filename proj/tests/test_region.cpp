#include <gtest/gtest.h>

#include "ingms/models.hpp"
#include "ingms/random.hpp"
#include "ingms/region.hpp"
#include "oracle.hpp"

using namespace ingms;

namespace {

using Names = std::vector<std::string>;

// Receiver-1 names; receiver 2 swaps U for V and Y1 for Y2.
Names swap_names(const Names& in, int rx) {
  if (rx == 1) return in;
  Names out;
  for (auto n : in) {
    if (n[0] == 'U') n[0] = 'V';
    if (n == "Y1") n = "Y2";
    out.push_back(n);
  }
  return out;
}

double theta_ref(const JointPMF& j, int rx, int k) {
  auto I = [&](Names a, Names b, Names g) {
    return oracle::I(j, swap_names(a, rx), swap_names(b, rx), swap_names(g, rx));
  };
  switch (k) {
    case 1: return I({"U0"}, {"W1"}, {"W0"});
    case 2: return I({"U0"}, {"W2"}, {"W0"});
    case 3: return I({"W1"}, {"W2"}, {"W0", "U0"});
    case 4: return I({"U0"}, {"W1", "W2"}, {"W0"});
    case 5: return I({"U1"}, {"W2"}, {"W0", "U0", "W1"});
    case 6: return I({"U2"}, {"W1"}, {"W0", "U0", "W2"});
    case 7: return I({"U1"}, {"U2"}, {"W0", "U0", "W1", "W2"});
  }
  return 0.0;
}

struct ListedBound {
  Names wrong, given;
  std::vector<int> thetas;
};

const std::vector<ListedBound> kListed = {
    {{"U1"}, {"W0", "U0", "W1", "W2", "U2"}, {5, 7}},
    {{"U2"}, {"W0", "U0", "W1", "W2", "U1"}, {6, 7}},
    {{"U1", "U2"}, {"W0", "U0", "W1", "W2"}, {5, 6, 7}},
    {{"W1", "U1"}, {"W0", "U0", "W2", "U2"}, {1, 3, 5, 6, 7}},
    {{"W2", "U2"}, {"W0", "U0", "W1", "U1"}, {2, 3, 5, 6, 7}},
    {{"W1", "U1", "U2"}, {"W0", "U0", "W2"}, {1, 3, 5, 6, 7}},
    {{"U1", "W2", "U2"}, {"W0", "U0", "W1"}, {2, 3, 5, 6, 7}},
    {{"U0", "U1", "U2"}, {"W0", "W1", "W2"}, {4, 5, 6, 7}},
    {{"W1", "U1", "W2", "U2"}, {"W0", "U0"}, {1, 2, 3, 5, 6, 7}},
    {{"U0", "W1", "U1", "U2"}, {"W0", "W2"}, {1, 2, 3, 5, 6, 7}},
    {{"U0", "U1", "W2", "U2"}, {"W0", "W1"}, {1, 2, 3, 5, 6, 7}},
    {{"U0", "W1", "U1", "W2", "U2"}, {"W0"}, {1, 2, 3, 5, 6, 7}},
    {{"W0", "U0", "W1", "U1", "W2", "U2"}, {}, {1, 2, 3, 5, 6, 7}},
};

double listed_ref(const JointPMF& j, int rx, int k) {
  const auto& b = kListed[static_cast<std::size_t>(k - 1)];
  double v = oracle::I(j, swap_names(b.wrong, rx), swap_names({"Y1"}, rx), swap_names(b.given, rx));
  for (int t : b.thetas) v += theta_ref(j, rx, t);
  return v;
}

JointPMF random_joint(Rng& rng) { return build_joint(random_network_factorization(rng), random_channel(rng, 2, 2, 2, 2)); }

JointPMF friendly_joint(Rng& rng) {
  return build_joint(random_coupled_factorization(rng, 0.5, 0.9), random_revealing_channel(rng, 2, 2, 0.9));
}

ChannelSpec noiseless_reveal() {
  auto c = ChannelSpec::zeros(Alphabet(2), Alphabet(2), Alphabet(4), Alphabet(4));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) c.at(a, b, a * 2 + b, a * 2 + b) = 1.0;
  return c;
}

std::vector<double> clean_pair_law() {
  std::vector<double> t(16, 0.0);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) t[(a * 2 + b) * 4 + a * 2 + b] = 1.0;
  return t;
}

OrthogonalChannelSpec clean_orthogonal() {
  return {Alphabet(2), Alphabet(2), Alphabet(2), Alphabet(2), Alphabet(4), Alphabet(4), clean_pair_law(),
          clean_pair_law()};
}

JointPMF clean_orthogonal_network() {
  const auto o = clean_orthogonal();
  FactorizationSpec f;
  for (const char* c : {"W0", "W1", "W2", "U0", "V0"}) f.constant(c);
  for (const char* x : {"XA1", "XA2", "XB1", "XB2"}) f.add({x, 2}, {}, {0.5, 0.5});
  detail::add_pairs(f, o);
  f.alias("W", "W0").alias("U1", "XA1").alias("V1", "XB1").alias("U2", "XA2").alias("V2", "XB2");
  return build_joint(f, compose_orthogonal(o));
}

JointPMF all_constant_network(Rng& rng) {
  FactorizationSpec f;
  for (const char* c : {"W0", "U0", "V0", "W1", "U1", "V1", "W2", "U2", "V2"}) f.constant(c);
  f.add({"X1", 2}, {}, {0.5, 0.5}).add({"X2", 2}, {}, {0.5, 0.5});
  return build_joint(f, random_channel(rng, 2, 2, 2, 2));
}

LinSys renamed(LinSys s, const std::map<std::string, std::string>& names) {
  for (const auto& [from, to] : names) s = s.substitute(from, {{to, 1}});
  return s;
}

std::map<std::string, double> random_rates(Rng& rng, double hi) {
  std::map<std::string, double> p;
  for (const auto& r : kRateNames) p[r] = rng.uniform(0.0, hi);
  return p;
}

// A point strictly inside `p` on a random ray from the origin, found by
// bisecting on the scale.
std::map<std::string, double> interior_point(const LinSys& p, Rng& rng) {
  std::map<std::string, double> d;
  for (const auto& v : p.variables()) d[v] = rng.uniform();
  auto scaled = [&](double t) {
    auto x = d;
    for (auto& [k, v] : x) v *= t;
    return x;
  };
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 40; ++it) {
    const double mid = 0.5 * (lo + hi);
    (p.contains(scaled(mid)) ? lo : hi) = mid;
  }
  return scaled(0.9 * lo);
}

}  // namespace

TEST(Region, ThetaZeroForIndependentAuxiliaries) {
  Rng rng(1);
  FactorizationSpec f;
  for (const char* v : {"W0", "U0", "V0", "W1", "U1", "V1", "W2", "U2", "V2"}) f.add({v, 2}, {}, random_distribution(rng, 2));
  f.add({"X1", 2}, {}, {0.5, 0.5}).add({"X2", 2}, {}, {0.5, 0.5});
  const auto j = build_joint(f, random_channel(rng, 2, 2, 2, 2));
  for (int rx : {1, 2}) {
    const auto t = theta_terms(j, rx);
    for (int k = 1; k <= 7; ++k) EXPECT_LE(t(k), 1e-12);
  }
}

TEST(Region, ThetaOfCopiedBit) {
  FactorizationSpec f;
  for (const char* c : {"W0", "V0", "U1", "V1", "W2", "U2", "V2"}) f.constant(c);
  f.add({"U0", 2}, {}, {0.5, 0.5}).alias("W1", "U0");
  f.add({"X1", 2}, {}, {0.5, 0.5}).add({"X2", 2}, {}, {0.5, 0.5});
  Rng rng(2);
  const auto j = build_joint(f, random_channel(rng, 2, 2, 2, 2));
  EXPECT_NEAR(theta_terms(j, 1)(1), 1.0, 1e-12);
}

TEST(Region, ThetaAndBoundsMatchOracle) {
  Rng rng(3);
  for (int rep = 0; rep < 5; ++rep) {
    const auto j = random_joint(rng);
    for (int rx : {1, 2}) {
      const auto t = theta_terms(j, rx);
      for (int k = 1; k <= 7; ++k) EXPECT_NEAR(t(k), theta_ref(j, rx, k), 1e-10) << "theta " << k;
      const auto b = decoding_bounds(j, rx);
      for (int k = 1; k <= 13; ++k) EXPECT_NEAR(b(k), listed_ref(j, rx, k), 1e-10) << "E" << k;
    }
  }
}

TEST(Region, BoundsVanishForUselessChannel) {
  Rng rng(4);
  FactorizationSpec f;
  for (const char* v : {"W0", "U0", "V0", "W1", "U1", "V1", "W2", "U2", "V2"}) f.add({v, 2}, {}, random_distribution(rng, 2));
  f.add({"X1", 2}, {}, {0.5, 0.5}).add({"X2", 2}, {}, {0.5, 0.5});
  auto ch = ChannelSpec::zeros(Alphabet(2), Alphabet(2), Alphabet(2), Alphabet(2));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t y1 = 0; y1 < 2; ++y1)
        for (std::size_t y2 = 0; y2 < 2; ++y2) ch.at(a, b, y1, y2) = 0.25;
  const auto j = build_joint(f, ch);
  for (int rx : {1, 2}) {
    const auto b = decoding_bounds(j, rx);
    for (int k = 1; k <= 13; ++k) EXPECT_LE(b(k), 1e-12);
  }
}

TEST(Region, NoiselessRevealingBounds) {
  FactorizationSpec f;
  for (const char* c : {"W0", "U0", "V0", "W1", "V1", "W2", "V2"}) f.constant(c);
  f.add({"X1", 2}, {}, {0.5, 0.5}).add({"X2", 2}, {}, {0.5, 0.5});
  f.alias("U1", "X1").alias("U2", "X2");
  const auto b = decoding_bounds(build_joint(f, noiseless_reveal()), 1);
  EXPECT_NEAR(b(1), 1.0, 1e-12);
  EXPECT_NEAR(b(3), 2.0, 1e-12);
}

TEST(Region, EightCarriesTheta4NineDoesNot) {
  Rng rng(5);
  const auto j = random_joint(rng);
  const auto t = theta_terms(j, 1);
  const auto b = decoding_bounds(j, 1);
  const double mi8 = oracle::I(j, {"U0", "U1", "U2"}, {"Y1"}, {"W0", "W1", "W2"});
  EXPECT_NEAR(b(8), mi8 + t(4) + t(5) + t(6) + t(7), 1e-10);
  const double mi9 = oracle::I(j, {"W1", "U1", "W2", "U2"}, {"Y1"}, {"W0", "U0"});
  EXPECT_NEAR(b(9), mi9 + t(1) + t(2) + t(3) + t(5) + t(6) + t(7), 1e-10);
}

TEST(Region, GeneralRuleAgreesOnSingleAndFullErrors) {
  Rng rng(6);
  for (int rep = 0; rep < 5; ++rep) {
    const auto j = random_joint(rng);
    for (int rx : {1, 2}) {
      const auto b = decoding_bounds(j, rx);
      EXPECT_NEAR(decoding_bounds_general(j, rx, bit(Role::P1)), b(1), 1e-9);
      EXPECT_NEAR(decoding_bounds_general(j, rx, kAllRoles), b(13), 1e-9);
      const double e3 = decoding_bounds_general(j, rx, static_cast<RoleSet>(bit(Role::P1) | bit(Role::P2)));
      EXPECT_TRUE(std::isfinite(e3));
    }
  }
}

TEST(Region, GeneralRuleRejectsOpenSets) {
  Rng rng(7);
  const auto j = random_joint(rng);
  try {
    decoding_bounds_general(j, 1, bit(Role::W1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDagClosed);
  }
}

TEST(Region, CompareReportsEveryEvent) {
  Rng rng(8);
  const auto d = compare_decoding_bounds(random_joint(rng));
  EXPECT_EQ(d.size(), 26u);
  for (const auto& x : d) EXPECT_DOUBLE_EQ(x.delta(), x.listed - x.general);
}

TEST(Region, SystemShape) {
  Rng rng(9);
  const auto s = ingms_system(random_joint(rng));
  EXPECT_EQ(s.size(), 35u);
  EXPECT_EQ(s.variables().size(), 17u);
  const auto top = s.row(34);
  EXPECT_EQ(top.label, "dec.Y2.E13");
  EXPECT_EQ(top.coeffs.at("R00"), 1);
  EXPECT_EQ(top.coeffs.at("B02"), 1);
  EXPECT_EQ(top.coeffs.count("R01"), 0u);
  const auto bin0 = s.row(0);
  EXPECT_EQ(bin0.coeffs.at("B01"), -1);
  EXPECT_EQ(bin0.coeffs.at("B02"), -1);
}

TEST(Region, AllConstantAuxiliariesOnlyOrigin) {
  Rng rng(10);
  const auto j = all_constant_network(rng);
  RatePoint origin;
  EXPECT_TRUE(ingms_membership(j, origin));
  const auto p = ingms_project(j);
  for (const auto& r : kRateNames) {
    EXPECT_TRUE(implies(p, {{{r, 1}}, 0.0, r})) << r;
    EXPECT_FALSE(ingms_membership(j, RatePoint{{{r, 0.01}}}));
  }
}

TEST(Region, CleanOrthogonalMembership) {
  const auto j = clean_orthogonal_network();
  EXPECT_TRUE(ingms_membership(j, RatePoint{}));
  EXPECT_TRUE(ingms_membership(j, RatePoint{{{"R11", 1.0}, {"R21", 1.0}}}));
  EXPECT_FALSE(ingms_membership(j, RatePoint{{{"R11", 1.5}}}));
}

TEST(Region, ProjectionAgreesWithMembership) {
  Rng rng(12);
  for (int rep = 0; rep < 1; ++rep) {
    const auto j = friendly_joint(rng);
    const auto p = ingms_project(j);
    int inside = 0;
    for (int k = 0; k < 30; ++k) {
      const auto pt = random_rates(rng, 0.1);
      const bool m = ingms_membership(j, RatePoint{pt});
      EXPECT_EQ(p.contains(pt, 1e-7), m);
      inside += m;
    }
    EXPECT_GT(inside, 0);
    EXPECT_LT(inside, 30);
  }
}

TEST(Region, ProjectionIsConvexAndMonotone) {
  Rng rng(13);
  const auto j = friendly_joint(rng);
  const auto p = ingms_project(j);
  std::vector<std::map<std::string, double>> members;
  for (int k = 0; k < 20; ++k) members.push_back(interior_point(p, rng));
  for (const auto& m : members) ASSERT_TRUE(p.contains(m));
  EXPECT_GT(members[0].at("R11"), 0.0);
  for (std::size_t a = 0; a + 1 < members.size(); ++a) {
    std::map<std::string, double> mid, lower;
    for (const auto& r : kRateNames) {
      mid[r] = 0.5 * (members[a][r] + members[a + 1][r]);
      lower[r] = members[a][r] * rng.uniform();
    }
    EXPECT_TRUE(p.contains(mid));
    EXPECT_TRUE(p.contains(lower));
  }
}

TEST(Region, EnlargeKeepsSumConstraint) {
  LinSys s(rate_names());
  s.add({{"R00", 1}, {"R01", 1}}, 1.5);
  s.add_nonnegativity(rate_names());
  const auto e = enlarge(s);
  LinSys ref(rate_names());
  ref.add({{"R00", 1}, {"R01", 1}}, 1.5);
  ref.add_nonnegativity(rate_names());
  EXPECT_TRUE(equivalent(e, ref));
}

TEST(Region, EnlargeContainsOriginal) {
  Rng rng(14);
  const auto j = friendly_joint(rng);
  const auto p = ingms_project(j);
  const auto e = enlarge(p);
  int checked = 0;
  for (int k = 0; k < 300; ++k) {
    const auto pt = random_rates(rng, 0.1);
    if (!p.contains(pt)) continue;
    ++checked;
    EXPECT_TRUE(e.contains(pt));
  }
  EXPECT_GT(checked, 0);
}

TEST(Region, EnlargedBroadcastIsMartonRegion) {
  Rng rng(15);
  for (int rep = 0; rep < 2; ++rep) {
    const auto j = random_marton_joint(rng);
    const auto net = marton_from_ingms(j);
    const auto bc = renamed(marton_region(j), {{"R0", "R00"}, {"R1", "R01"}, {"R2", "R02"}});
    EXPECT_TRUE(equivalent(net, bc));
  }
}

TEST(Region, AdderMac) {
  OutputLaw adder{Alphabet(2), Alphabet(2), Alphabet(3), std::vector<double>(12, 0.0)};
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) adder.law[(a * 2 + b) * 3 + a + b] = 1.0;
  const auto j = mac_joint({1.0}, {0.5, 0.5}, {0.5, 0.5}, adder);
  const auto s = mac_common_region(j);
  EXPECT_NEAR(s.row(3).rhs, 1.5, 1e-12);
  EXPECT_NEAR(s.row(0).rhs, 1.0, 1e-12);
  EXPECT_NEAR(s.row(2).rhs, 1.5, 1e-12);
  EXPECT_NEAR(s.row(3).rhs, oracle::I(j, {"X1", "X2"}, {"Y1"}), 1e-12);
}

TEST(Region, UselessMac) {
  OutputLaw useless{Alphabet(2), Alphabet(2), Alphabet(2), std::vector<double>(8, 0.5)};
  const auto s = mac_common_region(mac_joint({0.5, 0.5}, {0.3, 0.7, 0.6, 0.4}, {0.5, 0.5, 0.1, 0.9}, useless));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_LE(s.row(i).rhs, 1e-12);
}

TEST(Region, MacSpecializationMatchesOnGrid) {
  Rng rng(16);
  const auto j = random_mac_joint(rng);
  const auto net = mac_from_ingms(j);
  const auto mac = mac_common_region(j);
  for (double a = 0.0; a <= 1.0; a += 0.1)
    for (double b = 0.0; b <= 1.0; b += 0.1)
      for (double c = 0.0; c <= 1.0; c += 0.1)
        EXPECT_EQ(net.contains(mac_point(a, b, c)), mac.contains({{"R0", a}, {"R1", b}, {"R2", c}}));
}

TEST(Region, MartonCleanCopies) {
  auto bc = ChannelSpec::zeros(Alphabet(2), Alphabet(1), Alphabet(2), Alphabet(2));
  bc.at(0, 0, 0, 0) = 1.0;
  bc.at(1, 0, 1, 1) = 1.0;
  std::vector<double> p(8, 0.0), x(16, 0.0);
  p[0] = p[7] = 0.5;
  for (std::size_t r = 0; r < 8; ++r) x[r * 2 + (r >> 2)] = 1.0;
  const auto s = marton_region(marton_joint(2, 2, 2, p, x, bc));
  EXPECT_TRUE(s.contains({{"R0", 1.0}, {"R1", 0.0}, {"R2", 0.0}}));
  EXPECT_FALSE(s.contains({{"R0", 1.01}, {"R1", 0.0}, {"R2", 0.0}}));
}

TEST(Region, MartonPenaltyVanishesForIndependentAuxiliaries) {
  Rng rng(17);
  const auto j = random_marton_joint(rng);
  EXPECT_LE(mutual_information(j, {"U"}, {"V"}, {"W"}), 1e-12);
  const auto s = marton_region(j);
  const double a1 = oracle::I(j, {"W", "U"}, {"Y1"}), a2 = oracle::I(j, {"W", "V"}, {"Y2"});
  EXPECT_NEAR(s.row(4).rhs, a1 + a2, 1e-10);
}

TEST(Region, MartonConvex) {
  Rng rng(18);
  const auto s = marton_region(random_marton_joint(rng));
  std::vector<std::map<std::string, double>> in;
  for (int k = 0; k < 30; ++k) in.push_back(interior_point(s, rng));
  for (std::size_t a = 0; a + 1 < in.size(); ++a) {
    std::map<std::string, double> mid;
    for (const char* r : {"R0", "R1", "R2"}) mid[r] = 0.5 * (in[a][r] + in[a + 1][r]);
    EXPECT_TRUE(s.contains(mid));
  }
}

TEST(Region, OrthogonalCleanBlock) {
  const auto s = orthogonal_capacity(clean_orthogonal_network());
  ASSERT_EQ(s.size(), 8u);
  EXPECT_NEAR(s.row(0).rhs, 1.0, 1e-12);
  EXPECT_NEAR(s.row(1).rhs, 1.0, 1e-12);
  EXPECT_NEAR(s.row(2).rhs, 2.0, 1e-12);
  EXPECT_NEAR(s.row(3).rhs, 2.0, 1e-12);
}

TEST(Region, OrthogonalInputsDeterminedByW) {
  const auto o = clean_orthogonal();
  OrthogonalInputs in{{0.5, 0.5}, {1, 0, 0, 1}, {0, 1, 1, 0}, {1, 0, 0, 1}, {1, 0, 0, 1}};
  const auto s = orthogonal_capacity(orthogonal_joint(in, o));
  for (std::size_t q : {0u, 1u, 2u, 4u, 5u, 6u}) EXPECT_LE(s.row(q).rhs, 1e-12);
  EXPECT_NEAR(s.row(3).rhs, 1.0, 1e-12);
  EXPECT_NEAR(s.row(7).rhs, 1.0, 1e-12);
}

TEST(Region, OrthogonalDirectPartIdentity) {
  Rng rng(19);
  for (int rep = 0; rep < 5; ++rep) {
    const auto in = random_orthogonal_inputs(rng);
    const auto o = random_orthogonal_channel(rng);
    const auto cap = orthogonal_capacity(orthogonal_joint(in, o));
    const auto direct = orthogonal_direct_joint(in, o);
    const int ev[] = {4, 5, 9, 13};
    for (int rx : {1, 2}) {
      const auto d = decoding_bounds(direct, rx);
      for (std::size_t q = 0; q < 4; ++q)
        EXPECT_NEAR(d(ev[q]), cap.row(static_cast<std::size_t>(rx - 1) * 4 + q).rhs, 1e-9);
    }
  }
}

TEST(Region, InterferenceFreeRectangle) {
  auto ch = ChannelSpec::zeros(Alphabet(2), Alphabet(2), Alphabet(2), Alphabet(2));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      ch.at(a, b, a, b) = 0.9 * 0.8;
      ch.at(a, b, 1 - a, b) = 0.1 * 0.8;
      ch.at(a, b, a, 1 - b) = 0.9 * 0.2;
      ch.at(a, b, 1 - a, 1 - b) = 0.1 * 0.2;
    }
  const auto j = hk_joint({1.0}, 1, {0.5, 0.5}, 1, {0.5, 0.5}, ch);
  const auto s = hk_region(j);
  LinSys rect({"R1", "R2"});
  rect.add({{"R1", 1}}, 1.0 - oracle::h2(0.1)).add({{"R2", 1}}, 1.0 - oracle::h2(0.2));
  rect.add_nonnegativity({"R1", "R2"});
  EXPECT_TRUE(equivalent(s, rect));
}

TEST(Region, TenRowInterferenceSystem) {
  Rng rng(20);
  const auto j = random_hk_joint(rng);
  const auto s = hk_system(j);
  ASSERT_EQ(s.size(), 10u);
  EXPECT_NEAR(s.row(0).rhs, oracle::I(j, {"U1"}, {"Y1"}, {"W1", "W2", "Q"}), 1e-10);
  EXPECT_EQ(s.row(0).coeffs, (std::map<std::string, std::int64_t>{{"R11", 1}}));
  EXPECT_NEAR(s.row(7).rhs, oracle::I(j, {"W1"}, {"Y2"}, {"W2", "V2", "Q"}), 1e-10);
  EXPECT_NEAR(s.row(9).rhs, oracle::I(j, {"W1", "W2", "V2"}, {"Y2"}, {"Q"}), 1e-10);
}

TEST(Region, InterferencePipelineAgrees) {
  Rng rng(21);
  const auto j = random_hk_joint(rng);
  const auto direct = hk_region(j);
  const auto net = hk_region_from_ingms(j);
  for (int k = 0; k < 100; ++k) {
    const std::map<std::string, double> pt{{"R1", rng.uniform(0.0, 1.0)}, {"R2", rng.uniform(0.0, 1.0)}};
    EXPECT_EQ(direct.contains(pt), net.contains(pt));
  }
}

TEST(Region, RatePointParsing) {
  const auto p = RatePoint::parse("R00=0.1, R11=0.5");
  EXPECT_DOUBLE_EQ(p["R11"], 0.5);
  EXPECT_DOUBLE_EQ(p["R22"], 0.0);
  EXPECT_THROW(RatePoint::parse("R33=1"), Error);
  EXPECT_THROW(RatePoint::parse("R11=-1"), Error);
  EXPECT_THROW(RatePoint::parse("R11"), Error);
  EXPECT_THROW(BinRates::parse("B00=1"), Error);
}
