#pragma once

#include <cassert>
#include <cstddef>
#include <string>
#include <vector>

#include "gtm/error.hpp"
#include "gtm/index_set.hpp"
#include "gtm/rational.hpp"

namespace gtm {

using RawMatrix = std::vector<std::vector<Rational>>;

/// Generalized tournament matrix: zero diagonal, entries in [0,1], and
/// m_ij + m_ji = 1 whenever i != j. Every instance satisfies these
/// invariants; the only mutator (`set_pair`) preserves them.
class GTMatrix {
 public:
  /// Checks every invariant, scanning row-major; throws on the first violation
  /// with the 1-based (row, column) in `Error::indices()`.
  static GTMatrix validate(const RawMatrix& raw);

  /// All off-diagonal entries 1/2.
  static GTMatrix half(std::size_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "matrix order must be positive");
    return GTMatrix(n);
  }

  std::size_t order() const noexcept { return n_; }

  /// 1-based element access; preconditions are asserted only.
  const Rational& operator()(Vertex i, Vertex j) const {
    assert(i >= 1 && i <= n_ && j >= 1 && j <= n_);
    return entries_[(i - 1) * n_ + (j - 1)];
  }

  const Rational& at(Vertex i, Vertex j) const {
    check_vertex(i);
    check_vertex(j);
    return (*this)(i, j);
  }

  /// Sets m_ij := value and m_ji := 1 - value.
  void set_pair(Vertex i, Vertex j, const Rational& value) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw Error(ErrorKind::DiagonalNonzero, "cannot set a diagonal entry", {i, i});
    if (value < Rational(0) || value > Rational(1)) {
      throw Error(ErrorKind::RangeViolation,
                  "entry (" + std::to_string(i) + "," + std::to_string(j) +
                      ") = " + value.to_string() + " is outside [0,1]",
                  {i, j});
    }
    entry(i, j) = value;
    entry(j, i) = Rational(1) - value;
  }

  RawMatrix rows() const {
    RawMatrix r(n_, std::vector<Rational>(n_));
    for (Vertex i = 1; i <= n_; ++i)
      for (Vertex j = 1; j <= n_; ++j) r[i - 1][j - 1] = (*this)(i, j);
    return r;
  }

  /// True iff every entry lies in {0, 1}.
  bool is_tournament() const {
    for (const auto& e : entries_) {
      if (!(e == Rational(0) || e == Rational(1))) return false;
    }
    return true;
  }

  friend bool operator==(const GTMatrix&, const GTMatrix&) = default;

 private:
  explicit GTMatrix(std::size_t n) : n_(n), entries_(n * n, one_half()) {
    for (std::size_t i = 0; i < n; ++i) entries_[i * n + i] = Rational(0);
  }

  Rational& entry(Vertex i, Vertex j) { return entries_[(i - 1) * n_ + (j - 1)]; }

  void check_vertex(Vertex v) const {
    if (v < 1 || v > n_) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "vertex " + std::to_string(v) + " outside [1," + std::to_string(n_) + "]",
                  {v});
    }
  }

  std::size_t n_ = 0;
  std::vector<Rational> entries_;
};

inline GTMatrix GTMatrix::validate(const RawMatrix& raw) {
  const std::size_t n = raw.size();
  if (n == 0) throw Error(ErrorKind::NotSquare, "matrix is empty");
  for (std::size_t r = 0; r < n; ++r) {
    if (raw[r].size() != n) {
      throw Error(ErrorKind::NotSquare,
                  "row " + std::to_string(r + 1) + " has " + std::to_string(raw[r].size()) +
                      " entries, expected " + std::to_string(n),
                  {r + 1});
    }
  }
  const auto pos = [](std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  GTMatrix m(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const Rational& x = raw[i - 1][j - 1];
      if (i == j) {
        if (!x.is_zero()) {
          throw Error(ErrorKind::DiagonalNonzero,
                      "diagonal entry " + pos(i, j) + " = " + x.to_string() + " must be 0",
                      {i, j});
        }
        continue;
      }
      if (x < Rational(0) || x > Rational(1)) {
        throw Error(ErrorKind::RangeViolation,
                    "entry " + pos(i, j) + " = " + x.to_string() + " is outside [0,1]", {i, j});
      }
      if (i < j && x + raw[j - 1][i - 1] != Rational(1)) {
        throw Error(ErrorKind::ComplementViolation,
                    "entries " + pos(i, j) + " and " + pos(j, i) + " do not sum to 1", {i, j});
      }
      m.entry(i, j) = x;
    }
  }
  return m;
}

/// M[X]: rows and columns of X, relabeled 1..|X| in sorted order.
inline GTMatrix principal_submatrix(const GTMatrix& m, const IndexSet& x) {
  if (x.empty()) throw Error(ErrorKind::InvalidArgument, "principal submatrix of an empty set");
  if (!x.within(m.order())) {
    throw Error(ErrorKind::IndexOutOfRange, "subset " + x.to_string() + " is not within [n]",
                {x.back()});
  }
  GTMatrix sub = GTMatrix::half(x.size());
  for (std::size_t p = 0; p < x.size(); ++p)
    for (std::size_t q = p + 1; q < x.size(); ++q) sub.set_pair(p + 1, q + 1, m(x[p], x[q]));
  return sub;
}

inline GTMatrix transpose(const GTMatrix& m) {
  GTMatrix t = m;
  for (Vertex i = 1; i <= m.order(); ++i)
    for (Vertex j = i + 1; j <= m.order(); ++j) t.set_pair(i, j, m(j, i));
  return t;
}

}  // namespace gtm
