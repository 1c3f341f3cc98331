#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gtm/certify.hpp"
#include "gtm/clans.hpp"
#include "gtm/error.hpp"
#include "gtm/matrix.hpp"
#include "gtm/rational.hpp"

namespace gtm {

/// SplitMix64 (Steele, Lea, Flood 2014). The output stream depends only on
/// the seed, identically on every platform, which the golden tests rely on.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection; bound > 0. Used instead of
  /// std::uniform_int_distribution, whose output is implementation-defined.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t r;
    do {
      r = (*this)();
    } while (r >= limit);
    return r % bound;
  }

  /// True with probability p, p in [0,1] with a denominator below 2^64.
  bool chance(const Rational& p) {
    const std::uint64_t den = p.denominator().get_ui();
    const std::uint64_t num = p.numerator().get_ui();
    return below(den) < num;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::uint64_t state_;
};

struct GeneratorConfig {
  std::size_t n = 4;
  std::uint64_t seed = 0;
  /// Probability that an upper-triangle entry is exactly 1/2.
  Rational half_probability{0};
  /// Off-1/2 entries are reduced fractions p/q with q <= denominator_bound.
  std::uint64_t denominator_bound = 6;

  void validate() const {
    if (n < 1) throw Error(ErrorKind::ConfigError, "generator order must be >= 1");
    if (denominator_bound < 2) throw Error(ErrorKind::ConfigError, "denominator bound must be >= 2");
    if (denominator_bound > 1000) throw Error(ErrorKind::ConfigError, "denominator bound must be <= 1000");
    if (half_probability < Rational(0) || half_probability > Rational(1)) {
      throw Error(ErrorKind::ConfigError, "half probability must lie in [0,1]");
    }
    if (!mpz_fits_ulong_p(half_probability.denominator().get_mpz_t())) {
      throw Error(ErrorKind::ConfigError, "half probability denominator is too large");
    }
  }
};

namespace detail {

/// Reduced fractions in [0,1] with denominator <= bound, ascending, 1/2 excluded.
inline std::vector<Rational> farey_without_half(std::uint64_t bound) {
  std::vector<Rational> out;
  for (std::uint64_t q = 1; q <= bound; ++q)
    for (std::uint64_t p = 0; p <= q; ++p)
      if (std::gcd(p, q) == 1 && !(2 * p == q)) out.emplace_back(static_cast<long>(p), static_cast<long>(q));
  std::sort(out.begin(), out.end());
  return out;
}

inline GTMatrix random_gt(std::size_t n, SplitMix64& rng, const Rational& half_probability,
                          const std::vector<Rational>& values) {
  GTMatrix m = GTMatrix::half(n);
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      const bool half = rng.chance(half_probability);
      const Rational& v = values[rng.below(values.size())];
      m.set_pair(i, j, half ? one_half() : v);
    }
  }
  return m;
}

}  // namespace detail

/// Random GT matrix, deterministic in the config. Lower triangle is forced.
inline GTMatrix random_gt(const GeneratorConfig& cfg) {
  cfg.validate();
  SplitMix64 rng(cfg.seed);
  return detail::random_gt(cfg.n, rng, cfg.half_probability,
                           detail::farey_without_half(cfg.denominator_bound));
}

/// Random 0/1 GT matrix.
inline GTMatrix random_tournament(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::ConfigError, "tournament order must be >= 1");
  SplitMix64 rng(seed);
  GTMatrix m = GTMatrix::half(n);
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) m.set_pair(i, j, Rational(static_cast<long>(rng.below(2))));
  return m;
}

/// alpha-linear matrix whose order is a random permutation of 1..n.
inline GTMatrix random_alpha_linear(std::size_t n, const Rational& alpha, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::ConfigError, "order must be >= 1");
  if (!(alpha > one_half() && alpha <= Rational(1))) {
    throw Error(ErrorKind::ConfigError, "alpha must lie in (1/2, 1]");
  }
  SplitMix64 rng(seed);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{1});
  rng.shuffle(order);
  GTMatrix m = GTMatrix::half(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) m.set_pair(order[p], order[q], alpha);
  return m;
}

namespace detail {

/// Substitution: a random quotient on k parts with a random block per part,
/// recursively, so the result has nested nontrivial clans.
inline GTMatrix composed(std::size_t n, SplitMix64& rng, const Rational& half_probability,
                         const std::vector<Rational>& values) {
  if (n <= 2) return random_gt(n, rng, half_probability, values);
  const std::size_t k = 2 + rng.below(std::min<std::size_t>(n, 4) - 1);
  std::vector<std::size_t> cuts(n - 1);
  std::iota(cuts.begin(), cuts.end(), std::size_t{1});
  rng.shuffle(cuts);
  cuts.resize(k - 1);
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(n);

  std::vector<std::size_t> part(n + 1);
  std::vector<GTMatrix> blocks;
  std::vector<std::size_t> offset;
  std::size_t start = 0;
  for (std::size_t p = 0; p < k; ++p) {
    const std::size_t size = cuts[p] - start;
    for (std::size_t v = start + 1; v <= cuts[p]; ++v) part[v] = p;
    offset.push_back(start);
    blocks.push_back(composed(size, rng, half_probability, values));
    start = cuts[p];
  }
  const GTMatrix quotient = random_gt(k, rng, half_probability, values);

  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), Vertex{1});
  rng.shuffle(label);

  GTMatrix m = GTMatrix::half(n);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      const std::size_t pu = part[u], pv = part[v];
      const Rational& val = pu == pv ? blocks[pu](u - offset[pu], v - offset[pv])
                                     : quotient(pu + 1, pv + 1);
      m.set_pair(label[u - 1], label[v - 1], val);
    }
  }
  return m;
}

}  // namespace detail

/// Random GT matrix built by nested substitution; typically rich in clans.
inline GTMatrix random_composed(const GeneratorConfig& cfg) {
  cfg.validate();
  SplitMix64 rng(cfg.seed);
  return detail::composed(cfg.n, rng, cfg.half_probability,
                          detail::farey_without_half(cfg.denominator_bound));
}

struct PlantedPair {
  GTMatrix b;
  ReversalScript truth;
};

/// Applies `steps` random clan reversals to A. Each step picks uniformly
/// among the nontrivial clans of the current matrix, or, when there are
/// none, among the trivial ones ({1}, ..., {n}, [n]).
inline PlantedPair planted_pair(const GTMatrix& a, std::size_t steps, std::uint64_t seed,
                                std::size_t cap = kClanEnumerationCap) {
  SplitMix64 rng(seed);
  PlantedPair out{a, {}};
  for (std::size_t s = 0; s < steps; ++s) {
    auto clans = nontrivial_clans(out.b, cap);
    if (clans.empty()) {
      for (Vertex v = 1; v <= a.order(); ++v) clans.push_back(IndexSet{v});
      clans.push_back(IndexSet::full(a.order()));
    }
    const IndexSet& pick = clans[rng.below(clans.size())];
    out.b = inv(out.b, pick);
    out.truth.push_back(pick);
  }
  return out;
}

}  // namespace gtm
