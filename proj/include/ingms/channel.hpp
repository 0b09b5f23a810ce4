#pragma once

// Discrete memoryless two-transmitter/two-receiver channels.

#include <cmath>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ingms/error.hpp"

namespace ingms {

inline constexpr double kChannelRowTolerance = 1e-12;

/// Finite symbol set {0, ..., size-1}.
struct Alphabet {
  std::size_t size = 1;

  constexpr Alphabet() = default;
  explicit Alphabet(std::size_t n) : size(n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "alphabet size must be >= 1");
  }
  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

struct OrthogonalChannelSpec;

/// Conditional law P(y1, y2 | x1, x2), stored densely as [x1][x2][y1][y2].
/// A channel built by compose_orthogonal keeps its two factor laws, so its
/// per-output marginals are the factors themselves.
struct ChannelSpec {
  Alphabet x1, x2, y1, y2;
  std::vector<double> law;
  std::shared_ptr<const OrthogonalChannelSpec> factors = nullptr;

  std::size_t index(std::size_t a1, std::size_t a2, std::size_t b1, std::size_t b2) const {
    return ((a1 * x2.size + a2) * y1.size + b1) * y2.size + b2;
  }
  double operator()(std::size_t a1, std::size_t a2, std::size_t b1, std::size_t b2) const {
    return law[index(a1, a2, b1, b2)];
  }
  double& at(std::size_t a1, std::size_t a2, std::size_t b1, std::size_t b2) {
    factors.reset();
    return law[index(a1, a2, b1, b2)];
  }

  static ChannelSpec zeros(Alphabet x1, Alphabet x2, Alphabet y1, Alphabet y2) {
    ChannelSpec c{x1, x2, y1, y2, {}, nullptr};
    c.law.assign(x1.size * x2.size * y1.size * y2.size, 0.0);
    return c;
  }
};

/// Channel that factors into P(y1 | xA1, xA2) P(y2 | xB1, xB2).
struct OrthogonalChannelSpec {
  Alphabet xA1, xA2, xB1, xB2, y1, y2;
  std::vector<double> lawA;  // [xA1][xA2][y1]
  std::vector<double> lawB;  // [xB1][xB2][y2]

  double a(std::size_t a1, std::size_t a2, std::size_t y) const {
    return lawA[(a1 * xA2.size + a2) * y1.size + y];
  }
  double b(std::size_t b1, std::size_t b2, std::size_t y) const {
    return lawB[(b1 * xB2.size + b2) * y2.size + y];
  }
};

enum class Output { Y1, Y2 };

/// P(y | x1, x2) for one receiver, stored as [x1][x2][y].
struct OutputLaw {
  Alphabet x1, x2, y;
  std::vector<double> law;

  double operator()(std::size_t a1, std::size_t a2, std::size_t b) const {
    return law[(a1 * x2.size + a2) * y.size + b];
  }
};

struct ChannelIssue {
  ErrorKind kind;
  std::vector<std::size_t> index;  // offending (x1, x2[, y1, y2]) coordinates
  double value;                    // offending entry or row sum
  std::string message;
};

namespace detail {

inline std::string index_string(const std::vector<std::size_t>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i]);
  }
  return s + ")";
}

// Checks a row-stochastic table with `rows` rows of `cols` entries.
inline std::optional<ChannelIssue> check_stochastic(const std::vector<double>& t, std::size_t rows,
                                                    std::size_t cols,
                                                    const std::vector<std::size_t>& row_shape,
                                                    const std::string& what) {
  if (t.size() != rows * cols) {
    return ChannelIssue{ErrorKind::InvalidArgument, {}, static_cast<double>(t.size()),
                        what + ": table has " + std::to_string(t.size()) + " entries, expected " +
                            std::to_string(rows * cols)};
  }
  auto unravel = [&](std::size_t r) {
    std::vector<std::size_t> idx(row_shape.size());
    for (std::size_t k = row_shape.size(); k-- > 0;) {
      idx[k] = r % row_shape[k];
      r /= row_shape[k];
    }
    return idx;
  };
  for (std::size_t r = 0; r < rows; ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < cols; ++c) {
      const double p = t[r * cols + c];
      if (!(p >= 0.0)) {
        auto idx = unravel(r);
        idx.push_back(c);
        return ChannelIssue{ErrorKind::NegativeProbability, idx, p,
                            what + ": entry " + index_string(idx) + " = " + std::to_string(p)};
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > kChannelRowTolerance) {
      auto idx = unravel(r);
      return ChannelIssue{ErrorKind::RowSumNotOne, idx, sum,
                          what + ": row " + index_string(idx) + " sums to " + std::to_string(sum)};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Returns nullopt when every row of the law is a probability vector.
inline std::optional<ChannelIssue> validate_channel(const ChannelSpec& spec) {
  return detail::check_stochastic(spec.law, spec.x1.size * spec.x2.size,
                                  spec.y1.size * spec.y2.size, {spec.x1.size, spec.x2.size},
                                  "channel law");
}

inline std::optional<ChannelIssue> validate_channel(const OrthogonalChannelSpec& o) {
  if (auto e = detail::check_stochastic(o.lawA, o.xA1.size * o.xA2.size, o.y1.size,
                                        {o.xA1.size, o.xA2.size}, "lawA"))
    return e;
  return detail::check_stochastic(o.lawB, o.xB1.size * o.xB2.size, o.y2.size,
                                  {o.xB1.size, o.xB2.size}, "lawB");
}

inline void require_valid(const ChannelSpec& spec) {
  if (auto e = validate_channel(spec)) throw Error(e->kind, e->message);
}

inline void require_valid(const OrthogonalChannelSpec& o) {
  if (auto e = validate_channel(o)) throw Error(e->kind, e->message);
}

/// Input pair encoding of an orthogonal transmitter: x = xA * |X_B| + xB.
inline std::size_t pair_symbol(std::size_t xa, std::size_t xb, Alphabet b) { return xa * b.size + xb; }

/// Product channel whose inputs are the pairs (xA_i, xB_i).
inline ChannelSpec compose_orthogonal(const OrthogonalChannelSpec& o) {
  require_valid(o);
  auto c = ChannelSpec::zeros(Alphabet(o.xA1.size * o.xB1.size), Alphabet(o.xA2.size * o.xB2.size),
                              o.y1, o.y2);
  for (std::size_t a1 = 0; a1 < o.xA1.size; ++a1)
    for (std::size_t b1 = 0; b1 < o.xB1.size; ++b1)
      for (std::size_t a2 = 0; a2 < o.xA2.size; ++a2)
        for (std::size_t b2 = 0; b2 < o.xB2.size; ++b2)
          for (std::size_t y1 = 0; y1 < o.y1.size; ++y1)
            for (std::size_t y2 = 0; y2 < o.y2.size; ++y2)
              c.at(pair_symbol(a1, b1, o.xB1), pair_symbol(a2, b2, o.xB2), y1, y2) =
                  o.a(a1, a2, y1) * o.b(b1, b2, y2);
  c.factors = std::make_shared<const OrthogonalChannelSpec>(o);
  return c;
}

/// Law of a single output with the other one summed out.
inline OutputLaw marginal(const ChannelSpec& spec, Output which) {
  const Alphabet y = which == Output::Y1 ? spec.y1 : spec.y2;
  OutputLaw out{spec.x1, spec.x2, y, std::vector<double>(spec.x1.size * spec.x2.size * y.size, 0.0)};
  if (const auto& o = spec.factors) {
    const bool first = which == Output::Y1;
    const Alphabet xb1 = o->xB1, xb2 = o->xB2;
    for (std::size_t a1 = 0; a1 < spec.x1.size; ++a1)
      for (std::size_t a2 = 0; a2 < spec.x2.size; ++a2)
        for (std::size_t b = 0; b < y.size; ++b)
          out.law[(a1 * spec.x2.size + a2) * y.size + b] =
              first ? o->a(a1 / xb1.size, a2 / xb2.size, b) : o->b(a1 % xb1.size, a2 % xb2.size, b);
    return out;
  }
  for (std::size_t a1 = 0; a1 < spec.x1.size; ++a1)
    for (std::size_t a2 = 0; a2 < spec.x2.size; ++a2)
      for (std::size_t b1 = 0; b1 < spec.y1.size; ++b1)
        for (std::size_t b2 = 0; b2 < spec.y2.size; ++b2) {
          const std::size_t b = which == Output::Y1 ? b1 : b2;
          out.law[(a1 * spec.x2.size + a2) * y.size + b] += spec(a1, a2, b1, b2);
        }
  return out;
}

/// Builds a two-output channel from one output law, the second output being
/// either a copy of the first or a constant symbol.
inline ChannelSpec single_output_channel(const OutputLaw& law, bool copy_to_y2) {
  const Alphabet y2 = copy_to_y2 ? law.y : Alphabet(1);
  auto c = ChannelSpec::zeros(law.x1, law.x2, law.y, y2);
  for (std::size_t a1 = 0; a1 < law.x1.size; ++a1)
    for (std::size_t a2 = 0; a2 < law.x2.size; ++a2)
      for (std::size_t b = 0; b < law.y.size; ++b)
        c.at(a1, a2, b, copy_to_y2 ? b : 0) = law(a1, a2, b);
  return c;
}

}  // namespace ingms
