#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtm/error.hpp"
#include "gtm/index_set.hpp"
#include "gtm/matrix.hpp"
#include "gtm/rational.hpp"
#include "gtm/wog.hpp"

namespace gtm {

/// Largest order for which clans are enumerated exhaustively (2^n subsets).
inline constexpr std::size_t kClanEnumerationCap = 16;

/// How every outside vertex k sees a clan: (m_xk, m_kx), common to all x in the clan.
struct ClanWitness {
  IndexSet subset;
  std::vector<std::pair<Vertex, std::pair<Rational, Rational>>> outside_profile;
};

/// Vertices x_1..x_n with m(x_i, x_j) = weight for all i < j.
struct LinearOrder {
  std::vector<Vertex> order;
  Rational weight;
};

/// A partition of [n] into two clans with the relation first -> second.
struct Bipartition {
  IndexSet first;
  IndexSet second;
  SetRelation relation;
};

namespace detail {

inline void require_within(const GTMatrix& m, const IndexSet& x) {
  if (!x.within(m.order())) {
    throw Error(ErrorKind::IndexOutOfRange,
                "subset " + x.to_string() + " is not within [1," + std::to_string(m.order()) + "]",
                {x.back()});
  }
}

inline void require_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap || n > 63) {
    throw Error(ErrorKind::SizeCapExceeded,
                std::string(what) + ": order " + std::to_string(n) + " exceeds the cap " +
                    std::to_string(cap));
  }
}

/// Clan test on a bit mask (bit v-1 = vertex v).
inline bool is_clan_mask(const GTMatrix& m, std::uint64_t mask) {
  const std::size_t n = m.order();
  if (mask == 0) return true;
  Vertex first = 0;
  for (Vertex v = 1; v <= n; ++v) {
    if (mask >> (v - 1) & 1U) {
      first = v;
      break;
    }
  }
  for (Vertex k = 1; k <= n; ++k) {
    if (mask >> (k - 1) & 1U) continue;
    const Rational& out = m(first, k);
    const Rational& in = m(k, first);
    for (Vertex x = first + 1; x <= n; ++x) {
      if (!(mask >> (x - 1) & 1U)) continue;
      if (m(x, k) != out || m(k, x) != in) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Witness when X is a clan of M: every outside k satisfies m_xk = m_yk and
/// m_kx = m_ky for all x, y in X. Empty set, singletons and [n] always pass.
inline std::optional<ClanWitness> clan_witness(const GTMatrix& m, const IndexSet& x) {
  detail::require_within(m, x);
  ClanWitness w{x, {}};
  if (x.empty()) return w;
  const Vertex head = x.front();
  for (Vertex k = 1; k <= m.order(); ++k) {
    if (x.contains(k)) continue;
    for (Vertex v : x) {
      if (m(v, k) != m(head, k) || m(k, v) != m(k, head)) return std::nullopt;
    }
    w.outside_profile.push_back({k, {m(head, k), m(k, head)}});
  }
  return w;
}

inline bool is_clan(const GTMatrix& m, const IndexSet& x) {
  detail::require_within(m, x);
  if (x.size() <= 1 || x.size() == m.order()) return true;
  for (Vertex k = 1; k <= m.order(); ++k) {
    if (x.contains(k)) continue;
    const Rational& out = m(x.front(), k);
    const Rational& in = m(k, x.front());
    for (Vertex v : x) {
      if (m(v, k) != out || m(k, v) != in) return false;
    }
  }
  return true;
}

/// Smallest clan containing `seed`: keep adding outside vertices that
/// distinguish two members until none is left.
inline IndexSet clan_closure(const GTMatrix& m, const IndexSet& seed) {
  if (seed.empty()) throw Error(ErrorKind::EmptySeed, "clan closure of the empty set");
  detail::require_within(m, seed);
  const std::size_t n = m.order();
  std::vector<bool> in(n + 1, false);
  for (Vertex v : seed) in[v] = true;
  const Vertex head = seed.front();
  bool grew = true;
  while (grew) {
    grew = false;
    for (Vertex k = 1; k <= n; ++k) {
      if (in[k]) continue;
      for (Vertex v = 1; v <= n; ++v) {
        if (!in[v] || v == head) continue;
        if (m(v, k) != m(head, k) || m(k, v) != m(k, head)) {
          in[k] = true;
          grew = true;
          break;
        }
      }
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= n; ++v)
    if (in[v]) out.push_back(v);
  return IndexSet(std::move(out));
}

/// Every clan X with 2 <= |X| <= n-1, in colex order.
inline std::vector<IndexSet> nontrivial_clans(const GTMatrix& m,
                                              std::size_t cap = kClanEnumerationCap) {
  const std::size_t n = m.order();
  detail::require_cap(n, cap, "nontrivial clan enumeration");
  std::vector<IndexSet> out;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    const int size = __builtin_popcountll(mask);
    if (size < 2) continue;
    if (detail::is_clan_mask(m, mask)) out.push_back(IndexSet::from_mask(mask));
  }
  return out;
}

/// Polynomial test: M is indecomposable iff the closure of every pair is [n].
/// Orders 1 and 2 have no nontrivial subsets and count as indecomposable.
inline bool is_indecomposable(const GTMatrix& m) {
  const std::size_t n = m.order();
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j)
      if (clan_closure(m, IndexSet{i, j}).size() != n) return false;
  return true;
}

/// First nontrivial clan found by pair closure (pairs in colex order), if any.
inline std::optional<IndexSet> some_nontrivial_clan(const GTMatrix& m) {
  const std::size_t n = m.order();
  for (Vertex j = 2; j <= n; ++j)
    for (Vertex i = 1; i < j; ++i) {
      IndexSet c = clan_closure(m, IndexSet{i, j});
      if (c.size() != n) return c;
    }
  return std::nullopt;
}

namespace detail {

/// Least Y containing vertex n such that every y in Y and k outside Y
/// satisfy `cross_ok(k, y)`. Returns nullopt when that forces Y = [n].
template <class CrossOk>
std::optional<IndexSet> sink_side_closure(const GTMatrix& m, CrossOk&& cross_ok) {
  const std::size_t n = m.order();
  std::vector<bool> in(n + 1, false);
  std::vector<Vertex> queue{n};
  in[n] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const Vertex y = queue.back();
    queue.pop_back();
    for (Vertex k = 1; k <= n; ++k) {
      if (in[k] || cross_ok(k, y)) continue;
      in[k] = true;
      ++count;
      queue.push_back(k);
    }
  }
  if (count == n) return std::nullopt;
  std::vector<Vertex> ys;
  for (Vertex v = 1; v <= n; ++v)
    if (in[v]) ys.push_back(v);
  return IndexSet(std::move(ys));
}

inline void consider(std::optional<Bipartition>& best, const GTMatrix& m,
                     std::optional<IndexSet> sink, SetRelation rel) {
  if (!sink) return;
  if (best && !colex_less(*sink, best->second)) return;
  best = Bipartition{sink->complement(m.order()), std::move(*sink), std::move(rel)};
}

}  // namespace detail

/// Bipartition X, Y of [n] into clans with X -alpha-> Y or Y -alpha-> X.
/// Y is the part holding vertex n, chosen colex-least.
inline std::optional<Bipartition> alpha_separation(const GTMatrix& m, const Rational& alpha) {
  if (m.order() < 2 || !(alpha > one_half())) return std::nullopt;
  std::optional<Bipartition> best;
  detail::consider(best, m,
                   detail::sink_side_closure(m, [&](Vertex k, Vertex y) { return m(k, y) == alpha; }),
                   SetRelation::forward(alpha));
  detail::consider(best, m,
                   detail::sink_side_closure(m, [&](Vertex k, Vertex y) { return m(y, k) == alpha; }),
                   SetRelation::backward(alpha));
  return best;
}

/// Some bipartition of [n] into two clans, or nullopt iff M is inseparable.
///
/// Both parts are clans exactly when all cross entries m_xy share one value,
/// so for each candidate relation the least admissible part containing n is
/// a closure; the colex-least such part over all candidates is returned as
/// `second`, with `relation` read from `first` to `second`.
inline std::optional<Bipartition> separating_bipartition(const GTMatrix& m) {
  const std::size_t n = m.order();
  if (n < 2) return std::nullopt;
  std::optional<Bipartition> best;
  detail::consider(
      best, m,
      detail::sink_side_closure(m, [&](Vertex k, Vertex y) { return m(k, y) == one_half(); }),
      SetRelation::no_arcs());
  std::vector<Rational> weights;
  for (Vertex k = 1; k < n; ++k) {
    const Rational w = m(k, n) > one_half() ? m(k, n) : m(n, k);
    if (w == one_half()) continue;
    if (std::find(weights.begin(), weights.end(), w) == weights.end()) weights.push_back(w);
  }
  for (const Rational& w : weights) {
    if (auto sep = alpha_separation(m, w)) {
      if (!best || colex_less(sep->second, best->second)) best = std::move(sep);
    }
  }
  return best;
}

inline bool is_separable(const GTMatrix& m) { return separating_bipartition(m).has_value(); }

/// Linear order if M is alpha-linear for some alpha > 1/2. Order 1 yields
/// nullopt: a single vertex carries no weight.
inline std::optional<LinearOrder> is_alpha_linear(const GTMatrix& m) {
  const std::size_t n = m.order();
  if (n < 2) return std::nullopt;
  const Rational alpha = m(1, 2) > one_half() ? m(1, 2) : m(2, 1);
  if (alpha == one_half()) return std::nullopt;
  std::vector<Vertex> remaining;
  for (Vertex v = 1; v <= n; ++v) remaining.push_back(v);
  LinearOrder lin{{}, alpha};
  while (!remaining.empty()) {
    auto head = remaining.end();
    for (auto it = remaining.begin(); it != remaining.end() && head == remaining.end(); ++it) {
      bool dominates = true;
      for (Vertex u : remaining) {
        if (u != *it && m(*it, u) != alpha) {
          dominates = false;
          break;
        }
      }
      if (dominates) head = it;
    }
    if (head == remaining.end()) return std::nullopt;
    lin.order.push_back(*head);
    remaining.erase(head);
  }
  return lin;
}

/// Inv(M, Y): transpose M[Y] in place. Defined for every Y, clan or not.
inline GTMatrix inv(const GTMatrix& m, const IndexSet& y) {
  detail::require_within(m, y);
  GTMatrix r = m;
  for (std::size_t p = 0; p < y.size(); ++p)
    for (std::size_t q = p + 1; q < y.size(); ++q) r.set_pair(y[p], y[q], m(y[q], y[p]));
  return r;
}

/// Vertex u with M[[n] \ {u}] inseparable; requires M inseparable, n >= 5.
///
/// Decomposable M: the least vertex of a nontrivial clan always works.
/// Indecomposable M: vertices are scanned in increasing order.
inline Vertex find_inseparable_deletion(const GTMatrix& m) {
  const std::size_t n = m.order();
  if (n < 5) {
    throw Error(ErrorKind::InvalidArgument, "inseparable deletion needs n >= 5");
  }
  if (is_separable(m)) throw Error(ErrorKind::NotInseparable, "matrix is separable");
  const IndexSet all = IndexSet::full(n);
  if (auto clan = some_nontrivial_clan(m)) {
    const Vertex u = clan->front();
    if (!is_separable(principal_submatrix(m, all.without(u)))) return u;
    throw Error(ErrorKind::NoneFound,
                "clan vertex " + std::to_string(u) + " leaves a separable submatrix", {u});
  }
  for (Vertex u = 1; u <= n; ++u) {
    if (!is_separable(principal_submatrix(m, all.without(u)))) return u;
  }
  throw Error(ErrorKind::NoneFound, "no vertex deletion keeps the matrix inseparable");
}

/// Subset of size n-1 (preferred) or n-2 inducing an indecomposable
/// submatrix; requires M indecomposable, n >= 5. Colex-least within a size.
inline IndexSet find_indecomposable_subset(const GTMatrix& m) {
  const std::size_t n = m.order();
  if (n < 5) {
    throw Error(ErrorKind::InvalidArgument, "indecomposable subset search needs n >= 5");
  }
  if (!is_indecomposable(m)) throw Error(ErrorKind::NotIndecomposable, "matrix is decomposable");
  std::optional<IndexSet> found;
  for (const std::size_t size : {n - 1, n - 2}) {
    for_each_subset_colex(n, size, size, [&](const IndexSet& s) {
      if (is_indecomposable(principal_submatrix(m, s))) {
        found = s;
        return false;
      }
      return true;
    });
    if (found) return *found;
  }
  throw Error(ErrorKind::NoneFound, "no indecomposable subset of size n-1 or n-2");
}

}  // namespace gtm
