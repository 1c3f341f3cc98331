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

GTMatrix linear(const std::vector<Vertex>& order, const Rational& alpha) {
  GTMatrix m = GTMatrix::half(order.size());
  for (std::size_t p = 0; p < order.size(); ++p)
    for (std::size_t q = p + 1; q < order.size(); ++q) m.set_pair(order[p], order[q], alpha);
  return m;
}

}  // namespace

TEST_CASE("applying scripts") {
  const GTMatrix a = random_composed({6, 9, Rational(1, 4), 5});
  CHECK(apply_script(a, {}) == a);
  CHECK(apply_script(a, {IndexSet::full(6)}) == transpose(a));
  const auto clans = nontrivial_clans(a);
  REQUIRE_FALSE(clans.empty());
  CHECK(apply_script(a, {clans[0], clans[0]}) == a);
  CHECK(kind_of([&] { apply_script(a, {{1, 7}}); }) == ErrorKind::IndexOutOfRange);

  const GTMatrix m = m_ab({Rational(2, 3), Rational(1, 5)});
  try {
    apply_script(m, {{1}, {1, 2}});
    FAIL("expected NotAClanAtStep");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAClanAtStep);
    CHECK(e.indices() == std::vector<std::size_t>{2});
  }
  const auto t = apply_script_lenient(m, {{1, 2}, {3}, {2, 3}});
  CHECK(t.non_clan_steps == std::vector<std::size_t>{1, 3});
  CHECK(t.result == inv(inv(m, {1, 2}), {2, 3}));
}

TEST_CASE("certificate verification") {
  const GTMatrix a = random_composed({6, 4, Rational(1, 4), 5});
  const auto planted = planted_pair(a, 4, 4);
  CHECK(verify_certificate(a, planted.truth, planted.b));
  const GTMatrix m = m_ab({Rational(2, 3), Rational(1, 5)});
  const auto bad = verify_certificate(m, {{1, 2}}, inv(m, {1, 2}));
  CHECK_FALSE(bad);
  CHECK(bad.failed_step == 1);
  const auto bad_end = verify_certificate(m, {}, transpose(m));
  CHECK_FALSE(bad_end);
  CHECK(bad_end.failed_step == 0);
  CHECK_FALSE(verify_certificate(m, {}, GTMatrix::half(3)));
}

TEST_CASE("common nontrivial clans") {
  const GTMatrix a = random_composed({7, 21, Rational(1, 4), 5});
  const auto clans = nontrivial_clans(a);
  REQUIRE_FALSE(clans.empty());
  const GTMatrix b = inv(a, clans.back());
  const auto c = common_nontrivial_clan(a, b);
  REQUIRE(c);
  CHECK(is_clan(a, *c));
  CHECK(is_clan(b, *c));

  const GTMatrix ind = m_ab({Rational(2, 3), Rational(1, 5)});
  CHECK_FALSE(common_nontrivial_clan(ind, transpose(ind)));
  CHECK(common_nontrivial_clan(GTMatrix::half(4), GTMatrix::half(4)) == IndexSet{1, 2, 3});
  CHECK(kind_of([&] { common_nontrivial_clan(ind, m_ab({Rational(1, 3), Rational(1, 5)})); }) ==
        ErrorKind::HypothesisViolated);
}

TEST_CASE("linearization step") {
  const Rational alpha(3, 4);
  const GTMatrix a = linear({1, 2, 3, 4}, alpha);
  CHECK(linearize_step(a, a) == IndexSet{1});
  const GTMatrix b = linear({3, 1, 2, 4}, alpha);
  const IndexSet x = linearize_step(a, b);
  CHECK(x == IndexSet{1, 2, 3});
  const GTMatrix after = inv(a, x);
  CHECK(is_clan(after, {1, 2, 4}));
  CHECK(is_clan(b, {1, 2, 4}));
  CHECK(kind_of([&] { linearize_step(a, linear({1, 2, 3, 4}, Rational(2, 3))); }) == ErrorKind::NotBothLinear);
  CHECK(kind_of([&] { linearize_step(a, GTMatrix::half(4)); }) == ErrorKind::NotBothLinear);
}

TEST_CASE("certify fixtures") {
  const GTMatrix a = random_gt({6, 8, Rational(1, 4), 5});
  CHECK(certify(a, a).script.empty());
  CHECK(certify(a, transpose(a)).script == ReversalScript{IndexSet::full(6)});
  const GTMatrix p = m_ab({Rational(2, 3), Rational(1, 5)}), q = m_ab({Rational(1, 3), Rational(1, 5)});
  try {
    certify(p, q);
    FAIL("expected MinorMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MinorMismatch);
    CHECK(e.indices() == std::vector<std::size_t>{1, 2, 3, 4});
  }
  CHECK(kind_of([&] { certify(a, GTMatrix::half(5)); }) == ErrorKind::OrderMismatch);
  const GTMatrix l = random_alpha_linear(6, Rational(5, 6), 1);
  const GTMatrix k = random_alpha_linear(6, Rational(5, 6), 2);
  const auto r = certify(l, k);
  CHECK(r.final_equal);
  CHECK(apply_script(l, r.script) == k);
}

TEST_CASE("certify round trips on planted pairs") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const std::size_t n = 2 + seed % 7;
    GTMatrix a = GTMatrix::half(1);
    switch (seed % 4) {
      case 0: a = random_composed({n, seed, Rational(1, 4), 4}); break;
      case 1: a = random_alpha_linear(n, Rational(2, 3), seed); break;
      case 2: a = random_tournament(n, seed); break;
      default: a = random_composed({n, seed, Rational(0), 3}); break;
    }
    const auto planted = planted_pair(a, 1 + seed % 5, seed * 7 + 1);
    INFO("seed " << seed);
    const CertifyReport r = certify(a, planted.b);
    CHECK(r.steps_verified);
    CHECK(r.final_equal);
    GTMatrix cur = a;
    for (const auto& y : r.script) {
      REQUIRE(is_clan(cur, y));
      cur = inv(cur, y);
      CHECK(all_minors_equal(a, cur).equal());
    }
    CHECK(cur == planted.b);
  }
}

TEST_CASE("certify at larger orders") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::size_t n = 9 + seed % 4;
    const GTMatrix a = random_composed({n, 300 + seed, Rational(1, 5), 4});
    const auto planted = planted_pair(a, 6, seed);
    const CertifyReport r = certify(a, planted.b);
    CHECK(r.final_equal);
    CHECK(all_minors_equal(a, planted.b).equal());
  }
}
