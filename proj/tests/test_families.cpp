#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace gtm;

namespace {

template <class F>
ErrorKind kind_of(F f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no gtm::Error thrown");
  return ErrorKind::InvalidArgument;
}

MabParams random_params(SplitMix64& rng) {
  auto draw = [&] {
    for (;;) {
      const long q = 1 + static_cast<long>(rng.below(12));
      const Rational r(static_cast<long>(rng.below(q + 1)), q);
      if (r != one_half()) return r;
    }
  };
  return {draw(), draw()};
}

}  // namespace

TEST_CASE("M_{a,b} entries") {
  const Rational a(3, 4), b(3, 5), one(1);
  const GTMatrix m = m_ab({a, b});
  const RawMatrix expect{{0, a, b, b}, {one - a, 0, one - a, b}, {one - b, a, 0, a}, {one - b, one - b, one - a, 0}};
  CHECK(m.rows() == expect);
  CHECK(m_ab({one, one}).is_tournament());
  CHECK(kind_of([] { m_ab({one_half(), Rational(0)}); }) == ErrorKind::ParamIsHalf);
  CHECK(kind_of([] { m_ab({Rational(0), Rational(3, 2)}); }) == ErrorKind::ParamOutOfRange);

  const GTMatrix other = m_ab({one - a, b});
  std::vector<VertexPair> differ;
  for (Vertex i = 1; i <= 4; ++i)
    for (Vertex j = i + 1; j <= 4; ++j)
      if (m(i, j) != other(i, j)) differ.push_back({i, j});
  CHECK(differ == std::vector<VertexPair>{{1, 2}, {2, 3}, {3, 4}});
}

TEST_CASE("closed-form determinant gap") {
  CHECK(det_difference({Rational(3, 4), Rational(1, 4)}) == Rational(0));
  CHECK(det_difference({Rational(3, 4), Rational(3, 4)}) == Rational(0));
  CHECK(det_difference({Rational(4, 5), Rational(3, 5)}) == Rational(6, 625));
  CHECK(det_difference({Rational(2, 3), Rational(1, 5)}) == Rational(14, 1125));

  // The closed form is det M_{1-a,b} - det M_{a,b}.
  SplitMix64 rng(99);
  const Rational one(1);
  for (int t = 0; t < 200; ++t) {
    const MabParams p = random_params(rng);
    const Rational direct = oracle::leibniz(m_ab({one - p.a, p.b})) - oracle::leibniz(m_ab(p));
    CHECK(det_difference(p) == direct);
  }
}

TEST_CASE("M_{a,b} against M_{1-a,b}") {
  SplitMix64 rng(5);
  const Rational one(1);
  for (int t = 0; t < 200; ++t) {
    const MabParams p = random_params(rng);
    const GTMatrix x = m_ab(p), y = m_ab({one - p.a, p.b});
    CHECK(minors_equal_up_to(x, y, 3).equal());
    const bool degenerate = p.a == p.b || p.a == one - p.b;
    CHECK(minors_equal_up_to(x, y, 4).equal() == degenerate);
    if (!degenerate) CHECK(is_indecomposable(x));
  }
}

TEST_CASE("F-free check") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(is_f_free(random_tournament(6, seed)));
  CHECK(is_f_free(GTMatrix::half(6)));
  CHECK(is_f_free(m_ab({Rational(3, 4), Rational(3, 4)})));
  const auto c = is_f_free(m_ab({Rational(2, 3), Rational(1, 5)}));
  CHECK_FALSE(c);
  CHECK(c.offending == IndexSet::full(4));

  // embedded and relabelled copy inside a larger matrix
  GTMatrix big = random_gt({6, 3, Rational(1, 2), 5});
  const GTMatrix f = m_ab({Rational(1, 6), Rational(2, 3)});
  const std::vector<Vertex> where{5, 2, 6, 3};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) big.set_pair(where[i], where[j], f(i + 1, j + 1));
  const auto e = is_f_free(big);
  CHECK_FALSE(e);
  CHECK(e.offending->size() == 4);
}

TEST_CASE("generator determinism and configuration") {
  const GeneratorConfig cfg{7, 42, Rational(1, 3), 6};
  CHECK(random_gt(cfg) == random_gt(cfg));
  CHECK(random_composed(cfg) == random_composed(cfg));
  CHECK(random_gt(cfg) != random_gt({7, 43, Rational(1, 3), 6}));
  CHECK(random_gt({5, 1, Rational(1), 6}) == GTMatrix::half(5));
  CHECK(kind_of([] { random_gt({4, 1, Rational(0), 1}); }) == ErrorKind::ConfigError);
  CHECK(kind_of([] { random_gt({4, 1, Rational(3, 2), 6}); }) == ErrorKind::ConfigError);
  CHECK(kind_of([] { random_gt({0, 1, Rational(0), 6}); }) == ErrorKind::ConfigError);

  const GTMatrix g = random_gt({8, 3, Rational(0), 4});
  for (Vertex i = 1; i <= 8; ++i)
    for (Vertex j = 1; j <= 8; ++j) {
      if (i == j) continue;
      CHECK(g(i, j) != one_half());
      CHECK(g(i, j).denominator() <= 4);
    }
}

TEST_CASE("golden SplitMix64 stream") {
  // Reference values of the published SplitMix64 for seed 1234567.
  SplitMix64 rng(1234567);
  CHECK(rng() == 6457827717110365317ULL);
  CHECK(rng() == 3203168211198807973ULL);
  CHECK(rng() == 9817491932198370423ULL);
}

TEST_CASE("tournament generator") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const GTMatrix t = random_tournament(6, seed);
    CHECK(t.is_tournament());
    CHECK(t == random_tournament(6, seed));
    for (const auto& e : all_minors(t, 3)) {
      if (e.subset.size() == 2) CHECK(e.value == Rational(0));
      else CHECK((e.value == Rational(0) || e.value == Rational(1)));
    }
  }
}

TEST_CASE("planted pairs") {
  const GTMatrix a = random_composed({6, 1, Rational(1, 4), 5});
  const auto zero = planted_pair(a, 0, 1);
  CHECK(zero.b == a);
  CHECK(zero.truth.empty());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto p = planted_pair(a, 1 + seed % 5, seed);
    CHECK(p.truth.size() == 1 + seed % 5);
    CHECK(verify_certificate(a, p.truth, p.b));
    CHECK(all_minors_equal(a, p.b).equal());
  }
  const GTMatrix ind = m_ab({Rational(2, 3), Rational(1, 5)});
  const auto t = planted_pair(ind, 3, 2);
  for (const auto& y : t.truth) CHECK((y.size() == 1 || y.size() == 4));
}
