#pragma once

// Seeded randomness: a portable generator, seed derivation, and random
// distributions, channels and factorizations for experiments and tests.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "ingms/channel.hpp"
#include "ingms/pmf.hpp"

namespace ingms {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Independent seed for sub-stream `stream` of `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ull));
}

/// mt19937_64 with hand-rolled conversions so draws are identical across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform in {0, ..., n-1}.
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }

  /// Draws from a probability vector by inverting its CDF.
  std::size_t sample(const double* p, std::size_t n) {
    const double u = uniform();
    double acc = 0.0;
    std::size_t last = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i] <= 0.0) continue;
      acc += p[i];
      last = i;
      if (u < acc) return i;
    }
    return last;
  }

  std::size_t sample(const std::vector<double>& p) { return sample(p.data(), p.size()); }

 private:
  std::mt19937_64 eng_;
};

/// Uniformly random point of the probability simplex.
inline std::vector<double> random_distribution(Rng& rng, std::size_t n) {
  std::vector<double> p(n);
  double s = 0.0;
  for (auto& x : p) {
    x = -std::log(1.0 - rng.uniform());
    s += x;
  }
  for (auto& x : p) x /= s;
  return p;
}

/// `rows` independent random distributions over `cols` outcomes, concatenated.
inline std::vector<double> random_conditional(Rng& rng, std::size_t rows, std::size_t cols) {
  std::vector<double> t;
  t.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    auto p = random_distribution(rng, cols);
    t.insert(t.end(), p.begin(), p.end());
  }
  return t;
}

inline ChannelSpec random_channel(Rng& rng, std::size_t x1, std::size_t x2, std::size_t y1, std::size_t y2) {
  return ChannelSpec{Alphabet(x1), Alphabet(x2), Alphabet(y1), Alphabet(y2),
                     random_conditional(rng, x1 * x2, y1 * y2), nullptr};
}

/// Each output reveals the input pair x1*|X2|+x2 through a random channel
/// that keeps the true pair with probability at least `fidelity`.
inline ChannelSpec random_revealing_channel(Rng& rng, std::size_t x1, std::size_t x2, double fidelity) {
  const std::size_t y = x1 * x2;
  auto c = ChannelSpec::zeros(Alphabet(x1), Alphabet(x2), Alphabet(y), Alphabet(y));
  for (std::size_t a = 0; a < x1; ++a)
    for (std::size_t b = 0; b < x2; ++b) {
      auto n1 = random_distribution(rng, y);
      auto n2 = random_distribution(rng, y);
      for (std::size_t y1 = 0; y1 < y; ++y1)
        for (std::size_t y2 = 0; y2 < y; ++y2) {
          const double p1 = fidelity * (y1 == a * x2 + b) + (1.0 - fidelity) * n1[y1];
          const double p2 = fidelity * (y2 == a * x2 + b) + (1.0 - fidelity) * n2[y2];
          c.at(a, b, y1, y2) = p1 * p2;
        }
    }
  return c;
}

inline OutputLaw random_output_law(Rng& rng, std::size_t x1, std::size_t x2, std::size_t y) {
  return OutputLaw{Alphabet(x1), Alphabet(x2), Alphabet(y), random_conditional(rng, x1 * x2, y)};
}

inline OrthogonalChannelSpec random_orthogonal_channel(Rng& rng, std::size_t in = 2, std::size_t out = 2) {
  return OrthogonalChannelSpec{Alphabet(in),  Alphabet(in),  Alphabet(in),
                               Alphabet(in),  Alphabet(out), Alphabet(out),
                               random_conditional(rng, in * in, out), random_conditional(rng, in * in, out)};
}

/// Random factorization of the network shape with every variable over `k` symbols:
/// P(W0) P(U0,V0|W0) P(W1,U1,V1,X1|W0,U0,V0) P(W2,U2,V2,X2|W0,U0,V0).
inline FactorizationSpec random_network_factorization(Rng& rng, std::size_t k = 2) {
  FactorizationSpec f;
  f.add({"W0", k}, {}, random_distribution(rng, k));
  f.add({{"U0", k}, {"V0", k}}, {"W0"}, random_conditional(rng, k, k * k));
  f.add({{"W1", k}, {"U1", k}, {"V1", k}, {"X1", k}}, {"W0", "U0", "V0"}, random_conditional(rng, k * k * k, k * k * k * k));
  f.add({{"W2", k}, {"U2", k}, {"V2", k}, {"X2", k}}, {"W0", "U0", "V0"}, random_conditional(rng, k * k * k, k * k * k * k));
  return f;
}

/// Rows pulled towards the uniform law: (1 - coupling) / cols + coupling * random.
inline std::vector<double> random_coupled_conditional(Rng& rng, std::size_t rows, std::size_t cols, double coupling) {
  auto t = random_conditional(rng, rows, cols);
  for (auto& x : t) x = (1.0 - coupling) / static_cast<double>(cols) + coupling * x;
  return t;
}

/// Binary network factorization with weakly dependent auxiliaries and inputs
/// that are noisy functions of their transmitter's auxiliaries:
/// P(W0) P(U0,V0|W0) P(Wi,Ui,Vi|W0,U0,V0) P(Xi|W0,U0,V0,Wi,Ui,Vi).
inline FactorizationSpec random_coupled_factorization(Rng& rng, double coupling, double fidelity) {
  FactorizationSpec f;
  f.add({"W0", 2}, {}, random_distribution(rng, 2));
  f.add({{"U0", 2}, {"V0", 2}}, {"W0"}, random_coupled_conditional(rng, 2, 4, coupling));
  for (const std::string i : {"1", "2"}) {
    f.add({{"W" + i, 2}, {"U" + i, 2}, {"V" + i, 2}}, {"W0", "U0", "V0"},
          random_coupled_conditional(rng, 8, 8, coupling));
    std::vector<double> x;
    for (std::size_t r = 0; r < 64; ++r) {
      const std::size_t target = rng.index(2);
      const auto noise = random_distribution(rng, 2);
      for (std::size_t c = 0; c < 2; ++c) x.push_back(fidelity * (c == target) + (1.0 - fidelity) * noise[c]);
    }
    f.add({"X" + i, 2}, {"W0", "U0", "V0", "W" + i, "U" + i, "V" + i}, x);
  }
  return f;
}

}  // namespace ingms
