#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtm/error.hpp"
#include "gtm/index_set.hpp"
#include "gtm/matrix.hpp"
#include "gtm/rational.hpp"

namespace gtm {

/// How two disjoint vertex sets X and Y relate.
struct SetRelation {
  enum class Kind { Forward, Backward, NoArcs, Mixed };

  Kind kind = Kind::Mixed;
  /// Present exactly for Forward/Backward, and then > 1/2.
  std::optional<Rational> weight;

  static SetRelation forward(Rational w) { return {Kind::Forward, std::move(w)}; }
  static SetRelation backward(Rational w) { return {Kind::Backward, std::move(w)}; }
  static SetRelation no_arcs() { return {Kind::NoArcs, std::nullopt}; }
  static SetRelation mixed() { return {Kind::Mixed, std::nullopt}; }

  SetRelation reversed() const {
    switch (kind) {
      case Kind::Forward: return backward(*weight);
      case Kind::Backward: return forward(*weight);
      default: return *this;
    }
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::Forward: return "Forward(" + weight->to_string() + ")";
      case Kind::Backward: return "Backward(" + weight->to_string() + ")";
      case Kind::NoArcs: return "NoArcs";
      case Kind::Mixed: return "Mixed";
    }
    return "?";
  }

  friend bool operator==(const SetRelation&, const SetRelation&) = default;
};

/// Oriented graph on 1..n with arc weights in (1/2, 1]. Between two vertices
/// there is at most one arc. Arcs are stored sparsely.
class WeightedOrientedGraph {
 public:
  explicit WeightedOrientedGraph(std::size_t n) : n_(n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "graph order must be positive");
  }

  void add_arc(Vertex from, Vertex to, const Rational& weight) {
    if (from < 1 || from > n_ || to < 1 || to > n_) {
      throw Error(ErrorKind::IndexOutOfRange, "arc endpoint outside [1,n]", {from, to});
    }
    if (from == to) throw Error(ErrorKind::ConflictingArcs, "loops are not allowed", {from, to});
    if (!(weight > one_half() && weight <= Rational(1))) {
      throw Error(ErrorKind::WeightOutOfRange,
                  "arc weight " + weight.to_string() + " is outside (1/2, 1]", {from, to});
    }
    if (arcs_.count({to, from}) != 0 || arcs_.count({from, to}) != 0) {
      throw Error(ErrorKind::ConflictingArcs,
                  "vertices " + std::to_string(from) + " and " + std::to_string(to) +
                      " already joined by an arc",
                  {from, to});
    }
    arcs_.emplace(std::make_pair(from, to), weight);
  }

  std::size_t order() const noexcept { return n_; }
  const std::map<std::pair<Vertex, Vertex>, Rational>& arcs() const noexcept { return arcs_; }

  std::optional<Rational> weight(Vertex from, Vertex to) const {
    const auto it = arcs_.find({from, to});
    if (it == arcs_.end()) return std::nullopt;
    return it->second;
  }

  friend bool operator==(const WeightedOrientedGraph&, const WeightedOrientedGraph&) = default;

 private:
  std::size_t n_;
  std::map<std::pair<Vertex, Vertex>, Rational> arcs_;
};

inline WeightedOrientedGraph to_graph(const GTMatrix& m) {
  WeightedOrientedGraph g(m.order());
  for (Vertex i = 1; i <= m.order(); ++i)
    for (Vertex j = 1; j <= m.order(); ++j)
      if (i != j && m(i, j) > one_half()) g.add_arc(i, j, m(i, j));
  return g;
}

inline GTMatrix from_graph(const WeightedOrientedGraph& g) {
  GTMatrix m = GTMatrix::half(g.order());
  for (const auto& [arc, w] : g.arcs()) m.set_pair(arc.first, arc.second, w);
  return m;
}

namespace detail {

inline void require_disjoint_nonempty(const IndexSet& x, const IndexSet& y, std::size_t n) {
  if (x.empty() || y.empty()) {
    throw Error(ErrorKind::InvalidArgument, "relation between sets needs nonempty sets");
  }
  if (!x.within(n) || !y.within(n)) {
    throw Error(ErrorKind::IndexOutOfRange, "set is not within [n]");
  }
  if (!x.intersected(y).empty()) {
    throw Error(ErrorKind::SetsIntersect,
                "sets " + x.to_string() + " and " + y.to_string() + " intersect");
  }
}

/// Classifies the cross values m_xy after the caller fetched them in order.
template <class Lookup>
SetRelation classify_cross(const IndexSet& x, const IndexSet& y, Lookup&& value) {
  const Rational first = value(x.front(), y.front());
  for (Vertex a : x)
    for (Vertex b : y)
      if (value(a, b) != first) return SetRelation::mixed();
  if (first == one_half()) return SetRelation::no_arcs();
  if (first > one_half()) return SetRelation::forward(first);
  return SetRelation::backward(Rational(1) - first);
}

}  // namespace detail

inline SetRelation relation_between(const WeightedOrientedGraph& g, const IndexSet& x,
                                    const IndexSet& y) {
  detail::require_disjoint_nonempty(x, y, g.order());
  return detail::classify_cross(x, y, [&](Vertex a, Vertex b) {
    if (auto w = g.weight(a, b)) return *w;
    if (auto w = g.weight(b, a)) return Rational(1) - *w;
    return one_half();
  });
}

/// Same as the graph overload, read straight off the matrix.
inline SetRelation relation_between(const GTMatrix& m, const IndexSet& x, const IndexSet& y) {
  detail::require_disjoint_nonempty(x, y, m.order());
  return detail::classify_cross(x, y, [&](Vertex a, Vertex b) { return m(a, b); });
}

}  // namespace gtm
