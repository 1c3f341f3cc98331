#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace gtm;

TEST_CASE("graph view of the all-1/2 matrix and of tournaments") {
  CHECK(to_graph(GTMatrix::half(5)).arcs().empty());
  const GTMatrix t = random_tournament(6, 3);
  const auto g = to_graph(t);
  CHECK(g.arcs().size() == 15);
  for (const auto& [arc, w] : g.arcs()) {
    CHECK(w == Rational(1));
    CHECK(t(arc.first, arc.second) == Rational(1));
  }
}

TEST_CASE("graph view of M_{3/4,3/5}") {
  const Rational a(3, 4), b(3, 5);
  const auto g = to_graph(m_ab({a, b}));
  const std::map<std::pair<Vertex, Vertex>, Rational> expect{
      {{1, 2}, a}, {{1, 3}, b}, {{1, 4}, b}, {{3, 2}, a}, {{2, 4}, b}, {{3, 4}, a}};
  CHECK(g.arcs() == expect);
}

TEST_CASE("from_graph builds matrices and rejects bad arcs") {
  CHECK(from_graph(WeightedOrientedGraph(4)) == GTMatrix::half(4));
  WeightedOrientedGraph g(2);
  g.add_arc(1, 2, Rational(1));
  CHECK(from_graph(g).rows() == RawMatrix{{Rational(0), Rational(1)}, {Rational(0), Rational(0)}});

  auto kind = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind([] { WeightedOrientedGraph(3).add_arc(1, 2, Rational(1, 2)); }) == ErrorKind::WeightOutOfRange);
  CHECK(kind([] { WeightedOrientedGraph(3).add_arc(1, 2, Rational(3, 2)); }) == ErrorKind::WeightOutOfRange);
  CHECK(kind([] {
          WeightedOrientedGraph h(3);
          h.add_arc(1, 2, Rational(1));
          h.add_arc(2, 1, Rational(1));
        }) == ErrorKind::ConflictingArcs);
  CHECK(kind([] { WeightedOrientedGraph(3).add_arc(2, 2, Rational(1)); }) == ErrorKind::ConflictingArcs);
  CHECK(kind([] { WeightedOrientedGraph(3).add_arc(1, 4, Rational(1)); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("graph round trips on random matrices") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const GTMatrix m = random_gt({1 + seed % 8, seed, Rational(1, 3), 7});
    const auto g = to_graph(m);
    CHECK(from_graph(g) == m);
    CHECK(to_graph(from_graph(g)) == g);
  }
}

TEST_CASE("relations between vertex sets") {
  GTMatrix t = GTMatrix::half(2);
  t.set_pair(1, 2, Rational(1));
  CHECK(relation_between(t, {1}, {2}) == SetRelation::forward(Rational(1)));
  CHECK(relation_between(t, {2}, {1}) == SetRelation::backward(Rational(1)));
  CHECK(relation_between(GTMatrix::half(3), {1}, {2, 3}) == SetRelation::no_arcs());

  const GTMatrix m = m_ab({Rational(3, 4), Rational(3, 5)});
  CHECK(relation_between(m, {1, 2, 3}, {4}) == SetRelation::mixed());
  CHECK(relation_between(to_graph(m), {1}, {3, 4}) == SetRelation::forward(Rational(3, 5)));
  try {
    relation_between(m, {1, 2}, {2, 3});
    FAIL("expected SetsIntersect");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SetsIntersect);
  }
}

TEST_CASE("relation is antisymmetric and clans are never mixed") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 3 + seed % 5;
    const GTMatrix m = random_composed({n, seed, Rational(1, 3), 5});
    const auto g = to_graph(m);
    const auto clans = oracle::all_clans(m);
    for (std::uint64_t x : clans) {
      for (std::uint64_t y : clans) {
        if (x == 0 || y == 0 || (x & y) != 0) continue;
        const IndexSet xs = IndexSet::from_mask(x), ys = IndexSet::from_mask(y);
        const SetRelation r = relation_between(g, xs, ys);
        CHECK(r.kind != SetRelation::Kind::Mixed);
        CHECK(relation_between(g, ys, xs) == r.reversed());
        CHECK(relation_between(m, xs, ys) == r);
      }
    }
  }
}
