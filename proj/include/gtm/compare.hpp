#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtm/clans.hpp"
#include "gtm/determinant.hpp"
#include "gtm/error.hpp"
#include "gtm/index_set.hpp"
#include "gtm/matrix.hpp"

namespace gtm {

/// Largest order handled by the exhaustive all-orders comparison.
inline constexpr std::size_t kOracleCap = 12;

using VertexPair = std::pair<Vertex, Vertex>;  // first < second

/// Partition of the pairs {i,j} of two matrices with equal order-2 minors:
/// p_eq (a_ij = b_ij != 1/2), p_neq (a_ij = 1 - b_ij != 1/2), p_half (both 1/2).
struct PairClassification {
  enum class Class { Equal, Complement, Half };

  std::size_t n = 0;
  std::vector<VertexPair> p_eq;
  std::vector<VertexPair> p_neq;
  std::vector<VertexPair> p_half;
  std::vector<Class> table;  // n*n, symmetric; diagonal unused

  Class at(Vertex i, Vertex j) const { return table[(i - 1) * n + (j - 1)]; }
};

/// Undirected loop-free graph on 1..n.
struct SimpleGraph {
  std::size_t n = 0;
  std::vector<VertexPair> edges;

  bool has_edge(Vertex i, Vertex j) const {
    const VertexPair e = i < j ? VertexPair{i, j} : VertexPair{j, i};
    return std::find(edges.begin(), edges.end(), e) != edges.end();
  }
  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;
};

struct MinorDifference {
  IndexSet subset;
  Rational minor_a;
  Rational minor_b;
};

/// Equal, or the colex-least subset whose minors differ.
struct ComparisonOutcome {
  std::optional<MinorDifference> difference;

  bool equal() const noexcept { return !difference.has_value(); }
};

namespace detail {

inline void require_same_order(const GTMatrix& a, const GTMatrix& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorKind::OrderMismatch, "matrices have orders " + std::to_string(a.order()) +
                                              " and " + std::to_string(b.order()),
                {a.order(), b.order()});
  }
}

}  // namespace detail

inline PairClassification classify_pairs(const GTMatrix& a, const GTMatrix& b) {
  detail::require_same_order(a, b);
  const std::size_t n = a.order();
  PairClassification pc;
  pc.n = n;
  pc.table.assign(n * n, PairClassification::Class::Half);
  for (Vertex j = 2; j <= n; ++j) {
    for (Vertex i = 1; i < j; ++i) {
      PairClassification::Class c;
      if (a(i, j) == b(i, j)) {
        c = a(i, j) == one_half() ? PairClassification::Class::Half
                                  : PairClassification::Class::Equal;
      } else if (a(i, j) == Rational(1) - b(i, j)) {
        c = PairClassification::Class::Complement;
      } else {
        throw Error(ErrorKind::Order2MinorMismatch,
                    "order-2 minors differ on {" + std::to_string(i) + "," + std::to_string(j) +
                        "}",
                    {i, j});
      }
      pc.table[(i - 1) * n + (j - 1)] = pc.table[(j - 1) * n + (i - 1)] = c;
      switch (c) {
        case PairClassification::Class::Equal: pc.p_eq.push_back({i, j}); break;
        case PairClassification::Class::Complement: pc.p_neq.push_back({i, j}); break;
        case PairClassification::Class::Half: pc.p_half.push_back({i, j}); break;
      }
    }
  }
  return pc;
}

/// E(A, B): edges are the pairs of p_eq.
inline SimpleGraph equality_graph(const GTMatrix& a, const GTMatrix& b) {
  auto pc = classify_pairs(a, b);
  return {pc.n, std::move(pc.p_eq)};
}

/// D(A, B): edges are the pairs of p_neq.
inline SimpleGraph difference_graph(const GTMatrix& a, const GTMatrix& b) {
  auto pc = classify_pairs(a, b);
  return {pc.n, std::move(pc.p_neq)};
}

/// Components of G, each sorted, listed in colex order.
inline std::vector<IndexSet> connected_components(const SimpleGraph& g) {
  std::vector<std::size_t> parent(g.n + 1);
  for (std::size_t v = 0; v <= g.n; ++v) parent[v] = v;
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [i, j] : g.edges) parent[find(i)] = find(j);
  std::vector<std::vector<Vertex>> groups(g.n + 1);
  for (Vertex v = 1; v <= g.n; ++v) groups[find(v)].push_back(v);
  std::vector<IndexSet> out;
  for (auto& grp : groups)
    if (!grp.empty()) out.emplace_back(std::move(grp));
  std::sort(out.begin(), out.end(), ColexLess{});
  return out;
}

/// Compares the minors of every order 2..max_order (clamped to n).
inline ComparisonOutcome minors_equal_up_to(const GTMatrix& a, const GTMatrix& b,
                                            std::size_t max_order) {
  detail::require_same_order(a, b);
  if (max_order < 2) {
    throw Error(ErrorKind::InvalidArgument, "max order must be at least 2");
  }
  const std::size_t k = std::min(max_order, a.order());
  ComparisonOutcome outcome;
  if (k < 2) return outcome;
  for_each_subset_colex(a.order(), 2, k, [&](const IndexSet& x) {
    Rational ma = minor(a, x);
    Rational mb = minor(b, x);
    if (ma == mb) return true;
    outcome.difference = MinorDifference{x, std::move(ma), std::move(mb)};
    return false;
  });
  return outcome;
}

/// Exhaustive comparison over all 2^n - n - 1 subsets of size >= 2.
/// Enumerates bit masks and uses the fraction-free determinant, so it is
/// independent of `minors_equal_up_to`.
inline ComparisonOutcome all_minors_equal(const GTMatrix& a, const GTMatrix& b,
                                          std::size_t cap = kOracleCap) {
  detail::require_same_order(a, b);
  const std::size_t n = a.order();
  detail::require_cap(n, cap, "all-orders minor comparison");
  ComparisonOutcome outcome;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 3; mask < end; ++mask) {
    if (__builtin_popcountll(mask) < 2) continue;
    const IndexSet x = IndexSet::from_mask(mask);
    Rational ma = detail::bareiss_determinant(a, x);
    Rational mb = detail::bareiss_determinant(b, x);
    if (ma != mb) {
      outcome.difference = MinorDifference{x, std::move(ma), std::move(mb)};
      break;
    }
  }
  return outcome;
}

/// A failed triangle assertion for the triple (i, j, k), with
/// {i, j} the distinguished pair.
struct TriangleViolation {
  Vertex i, j, k;
  int assertion;  // 1..4 for i) .. iv)
  std::string detail;
};

/// Checks the four triangle assertions over every triple. Requires equal
/// minors of orders 2 and 3; verifies that itself and throws
/// PreconditionUnchecked otherwise.
inline std::vector<TriangleViolation> triangle_diagnostics(const GTMatrix& a, const GTMatrix& b) {
  detail::require_same_order(a, b);
  if (a.order() >= 2) {
    if (const auto cmp = minors_equal_up_to(a, b, 3); !cmp.equal()) {
      throw Error(ErrorKind::PreconditionUnchecked,
                  "minors of order <= 3 differ on " + cmp.difference->subset.to_string(),
                  cmp.difference->subset.items());
    }
  }
  using C = PairClassification::Class;
  const auto pc = classify_pairs(a, b);
  const std::size_t n = a.order();
  const Rational one(1);
  std::vector<TriangleViolation> out;
  auto fail = [&](Vertex i, Vertex j, Vertex k, int which, std::string why) {
    out.push_back({i, j, k, which, std::move(why)});
  };
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      for (Vertex k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        const C ij = pc.at(i, j), ik = pc.at(i, k), jk = pc.at(j, k);
        if (ij == C::Complement && ik == C::Equal && jk == C::Equal) {
          if (!(a(i, k) == a(j, k) && a(j, k) == b(i, k) && b(i, k) == b(j, k)))
            fail(i, j, k, 1, "expected a_ik = a_jk = b_ik = b_jk");
        }
        if (ij == C::Equal && ik == C::Complement && jk == C::Complement) {
          if (!(a(i, k) == a(j, k) && a(j, k) == one - b(i, k) && b(i, k) == b(j, k)))
            fail(i, j, k, 2, "expected a_ik = a_jk = 1 - b_ik = 1 - b_jk");
        }
        if (ij == C::Equal && ik != C::Equal && jk != C::Equal) {
          if ((a(i, k) == one_half()) != (a(j, k) == one_half()))
            fail(i, j, k, 3, "expected a_ik = 1/2 iff a_jk = 1/2");
        }
        if (ij == C::Complement && ik != C::Complement && jk != C::Complement) {
          if ((a(i, k) == one_half()) != (a(j, k) == one_half()))
            fail(i, j, k, 4, "expected a_ik = 1/2 iff a_jk = 1/2");
        }
      }
    }
  }
  return out;
}

}  // namespace gtm
