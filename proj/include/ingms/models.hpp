#pragma once

// Joint laws of the classical special cases, expressed as network
// factorizations so the full region machinery applies to them directly.

#include <vector>

#include "ingms/channel.hpp"
#include "ingms/pmf.hpp"
#include "ingms/random.hpp"

namespace ingms {

/// Multiple-access channel with a common message: W drives both inputs, the
/// single output is seen by receiver 1 and copied to receiver 2.
/// Tables: p_w over W; p_x1_w, p_x2_w one row per w.
inline FactorizationSpec mac_factorization(const std::vector<double>& p_w, const std::vector<double>& p_x1_w,
                                           const std::vector<double>& p_x2_w, const OutputLaw& law) {
  FactorizationSpec f;
  for (const char* c : {"U0", "V0", "W1", "V1", "W2", "V2"}) f.constant(c);
  f.add({"W0", p_w.size()}, {}, p_w);
  f.add({"X1", law.x1.size}, {"W0"}, p_x1_w);
  f.add({"X2", law.x2.size}, {"W0"}, p_x2_w);
  f.alias("W", "W0").alias("U1", "X1").alias("U2", "X2");
  return f;
}

inline JointPMF mac_joint(const std::vector<double>& p_w, const std::vector<double>& p_x1_w,
                          const std::vector<double>& p_x2_w, const OutputLaw& law) {
  return build_joint(mac_factorization(p_w, p_x1_w, p_x2_w, law), single_output_channel(law, true));
}

/// Broadcast channel carried by transmitter 1 alone: W, U, V are the common
/// and two private codewords. `bc` must have a one-symbol second input.
/// Tables: p_wuv over (W, U, V); p_x_wuv one row per (w, u, v).
inline FactorizationSpec marton_factorization(std::size_t w, std::size_t u, std::size_t v,
                                              const std::vector<double>& p_wuv,
                                              const std::vector<double>& p_x_wuv, std::size_t x) {
  FactorizationSpec f;
  for (const char* c : {"W1", "U1", "V1", "W2", "U2", "V2", "X2"}) f.constant(c);
  f.add({{"W0", w}, {"U0", u}, {"V0", v}}, {}, p_wuv);
  f.add({"X1", x}, {"W0", "U0", "V0"}, p_x_wuv);
  f.alias("W", "W0").alias("U", "U0").alias("V", "V0");
  return f;
}

inline JointPMF marton_joint(std::size_t w, std::size_t u, std::size_t v, const std::vector<double>& p_wuv,
                             const std::vector<double>& p_x_wuv, const ChannelSpec& bc) {
  if (bc.x2.size != 1) throw Error(ErrorKind::AlphabetMismatch, "broadcast channel must have a constant second input");
  return build_joint(marton_factorization(w, u, v, p_wuv, p_x_wuv, bc.x1.size), bc);
}

/// Two-user interference channel with time sharing Q and rate splitting:
/// P(Q) P(W1, X1 | Q) P(W2, X2 | Q).
inline FactorizationSpec hk_factorization(const std::vector<double>& p_q, std::size_t w1, std::size_t x1,
                                          const std::vector<double>& p_w1x1_q, std::size_t w2, std::size_t x2,
                                          const std::vector<double>& p_w2x2_q) {
  FactorizationSpec f;
  for (const char* c : {"U0", "V0", "V1", "U2"}) f.constant(c);
  f.add({"W0", p_q.size()}, {}, p_q);
  f.add({{"W1", w1}, {"X1", x1}}, {"W0"}, p_w1x1_q);
  f.add({{"W2", w2}, {"X2", x2}}, {"W0"}, p_w2x2_q);
  f.alias("Q", "W0").alias("U1", "X1").alias("V2", "X2");
  return f;
}

inline JointPMF hk_joint(const std::vector<double>& p_q, std::size_t w1, const std::vector<double>& p_w1x1_q,
                         std::size_t w2, const std::vector<double>& p_w2x2_q, const ChannelSpec& ch) {
  return build_joint(hk_factorization(p_q, w1, ch.x1.size, p_w1x1_q, w2, ch.x2.size, p_w2x2_q), ch);
}

/// Per-input laws of an orthogonal network, each conditioned on W.
struct OrthogonalInputs {
  std::vector<double> p_w;
  std::vector<double> p_xa1_w, p_xa2_w, p_xb1_w, p_xb2_w;
};

namespace detail {

// One-hot table mapping (xa, xb) to the pair symbol.
inline std::vector<double> pair_table(Alphabet a, Alphabet b) {
  std::vector<double> t(a.size * b.size * a.size * b.size, 0.0);
  for (std::size_t xa = 0; xa < a.size; ++xa)
    for (std::size_t xb = 0; xb < b.size; ++xb) {
      const std::size_t row = xa * b.size + xb;
      t[row * a.size * b.size + pair_symbol(xa, xb, b)] = 1.0;
    }
  return t;
}

inline void add_pairs(FactorizationSpec& f, const OrthogonalChannelSpec& o) {
  f.add({"X1", o.xA1.size * o.xB1.size}, {"XA1", "XB1"}, pair_table(o.xA1, o.xB1));
  f.add({"X2", o.xA2.size * o.xB2.size}, {"XA2", "XB2"}, pair_table(o.xA2, o.xB2));
}

}  // namespace detail

/// P(W) P(XA1|W) P(XA2|W) P(XB1|W) P(XB2|W) with the paired inputs X1, X2.
inline JointPMF orthogonal_joint(const OrthogonalInputs& in, const OrthogonalChannelSpec& o) {
  FactorizationSpec f;
  f.add({"W", in.p_w.size()}, {}, in.p_w);
  f.add({"XA1", o.xA1.size}, {"W"}, in.p_xa1_w);
  f.add({"XA2", o.xA2.size}, {"W"}, in.p_xa2_w);
  f.add({"XB1", o.xB1.size}, {"W"}, in.p_xb1_w);
  f.add({"XB2", o.xB2.size}, {"W"}, in.p_xb2_w);
  detail::add_pairs(f, o);
  return build_joint(f, compose_orthogonal(o));
}

/// Network factorization achieving the orthogonal capacity: U0 and V0 are
/// independent copies of W, the A inputs hang off U0 and the B inputs off V0,
/// W0, W1, W2 are constant and U_i = XA_i, V_i = XB_i.
inline JointPMF orthogonal_direct_joint(const OrthogonalInputs& in, const OrthogonalChannelSpec& o) {
  FactorizationSpec f;
  for (const char* c : {"W0", "W1", "W2"}) f.constant(c);
  f.add({"U0", in.p_w.size()}, {}, in.p_w);
  f.add({"V0", in.p_w.size()}, {}, in.p_w);
  f.add({"XA1", o.xA1.size}, {"U0"}, in.p_xa1_w);
  f.add({"XA2", o.xA2.size}, {"U0"}, in.p_xa2_w);
  f.add({"XB1", o.xB1.size}, {"V0"}, in.p_xb1_w);
  f.add({"XB2", o.xB2.size}, {"V0"}, in.p_xb2_w);
  detail::add_pairs(f, o);
  f.alias("U1", "XA1").alias("V1", "XB1").alias("U2", "XA2").alias("V2", "XB2");
  return build_joint(f, compose_orthogonal(o));
}

/// Binary MAC with a binary common-message variable.
inline JointPMF random_mac_joint(Rng& rng) {
  const auto law = random_output_law(rng, 2, 2, 2);
  return mac_joint(random_distribution(rng, 2), random_conditional(rng, 2, 2), random_conditional(rng, 2, 2), law);
}

/// Binary broadcast channel with U and V independent given W and X a noisy
/// function of (W, U, V).
inline JointPMF random_marton_joint(Rng& rng, double fidelity = 0.9) {
  const auto pw = random_distribution(rng, 2);
  const auto pu = random_conditional(rng, 2, 2);
  const auto pv = random_conditional(rng, 2, 2);
  std::vector<double> p(8), x;
  for (std::size_t w = 0; w < 2; ++w)
    for (std::size_t u = 0; u < 2; ++u)
      for (std::size_t v = 0; v < 2; ++v) p[(w * 2 + u) * 2 + v] = pw[w] * pu[w * 2 + u] * pv[w * 2 + v];
  for (std::size_t r = 0; r < 8; ++r) {
    const std::size_t target = rng.index(2);
    const auto noise = random_distribution(rng, 2);
    for (std::size_t c = 0; c < 2; ++c) x.push_back(fidelity * (c == target) + (1.0 - fidelity) * noise[c]);
  }
  return marton_joint(2, 2, 2, p, x, random_channel(rng, 2, 1, 2, 2));
}

/// Binary interference channel with binary Q, W1, W2.
inline JointPMF random_hk_joint(Rng& rng) {
  return hk_joint(random_distribution(rng, 2), 2, random_conditional(rng, 2, 4), 2, random_conditional(rng, 2, 4),
                  random_channel(rng, 2, 2, 2, 2));
}

inline OrthogonalInputs random_orthogonal_inputs(Rng& rng, std::size_t w = 2) {
  return {random_distribution(rng, w), random_conditional(rng, w, 2), random_conditional(rng, w, 2),
          random_conditional(rng, w, 2), random_conditional(rng, w, 2)};
}

}  // namespace ingms
