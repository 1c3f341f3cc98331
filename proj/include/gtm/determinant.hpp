#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gtm/index_set.hpp"
#include "gtm/matrix.hpp"
#include "gtm/rational.hpp"

namespace gtm {

namespace detail {

/// Row-major square matrix of rationals, no structural invariants.
struct DenseSquare {
  std::size_t n = 0;
  std::vector<Rational> a;
  Rational& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

inline DenseSquare dense_principal(const GTMatrix& m, const IndexSet& x) {
  DenseSquare d{x.size(), std::vector<Rational>(x.size() * x.size())};
  for (std::size_t p = 0; p < x.size(); ++p)
    for (std::size_t q = 0; q < x.size(); ++q) d(p, q) = m(x[p], x[q]);
  return d;
}

inline Rational det2(const DenseSquare& d, std::size_t r0, std::size_t r1, std::size_t c0,
                     std::size_t c1) {
  return d(r0, c0) * d(r1, c1) - d(r0, c1) * d(r1, c0);
}

inline Rational cofactor_determinant(const DenseSquare& d) {
  switch (d.n) {
    case 0: return Rational(1);
    case 1: return d(0, 0);
    case 2: return det2(d, 0, 1, 0, 1);
    case 3:
      return d(0, 0) * det2(d, 1, 2, 1, 2) - d(0, 1) * det2(d, 1, 2, 0, 2) +
             d(0, 2) * det2(d, 1, 2, 0, 1);
    case 4: {
      // Laplace expansion along the first two rows.
      Rational r;
      const std::size_t pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
      for (const auto& top : pairs) {
        std::size_t rest[2], k = 0;
        for (std::size_t c = 0; c < 4; ++c)
          if (c != top[0] && c != top[1]) rest[k++] = c;
        const bool odd = (top[0] + top[1] + 1) % 2 == 1;  // (1+2) + (c0+1) + (c1+1)
        Rational term = det2(d, 0, 1, top[0], top[1]) * det2(d, 2, 3, rest[0], rest[1]);
        r += odd ? -term : term;
      }
      return r;
    }
    default: break;
  }
  throw Error(ErrorKind::InvalidArgument, "cofactor expansion is limited to order 4");
}

/// Gaussian elimination over the rationals with search for a nonzero pivot.
inline Rational elimination_determinant(DenseSquare d) {
  const std::size_t n = d.n;
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && d(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      for (std::size_t c = k; c < n; ++c) std::swap(d(k, c), d(pivot, c));
      det = -det;
    }
    det *= d(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (d(r, k).is_zero()) continue;
      const Rational f = d(r, k) / d(k, k);
      for (std::size_t c = k + 1; c < n; ++c) d(r, c) -= f * d(k, c);
    }
  }
  return det;
}

inline Rational dense_determinant(const DenseSquare& d) {
  return d.n <= 4 ? cofactor_determinant(d) : elimination_determinant(d);
}

/// Fraction-free route: clear each row's denominators, run Bareiss over
/// the integers, then divide the scaling back out. Shares no code with
/// `dense_determinant`.
inline Rational bareiss_determinant(const GTMatrix& m, const IndexSet& x) {
  const std::size_t n = x.size();
  if (n == 0) return Rational(1);
  std::vector<mpz_class> a(n * n);
  mpz_class scale = 1;
  for (std::size_t p = 0; p < n; ++p) {
    mpz_class row_lcm = 1;
    for (std::size_t q = 0; q < n; ++q) {
      mpz_class den = m(x[p], x[q]).value().get_den();
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t q = 0; q < n; ++q) {
      const mpq_class& v = m(x[p], x[q]).value();
      a[p * n + q] = v.get_num() * (row_lcm / v.get_den());
    }
    scale *= row_lcm;
  }
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r * n + k] == 0) ++r;
      if (r == n) return Rational(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[r * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = t;
      }
    }
    prev = a[k * n + k];
  }
  mpq_class det(a[n * n - 1] * sign, scale);
  return Rational(det);
}

}  // namespace detail

/// Exact determinant: cofactor expansion up to order 4, rational elimination above.
inline Rational determinant(const GTMatrix& m) {
  return detail::dense_determinant(detail::dense_principal(m, IndexSet::full(m.order())));
}

/// det M[X]. The empty set has minor 1 by convention.
inline Rational minor(const GTMatrix& m, const IndexSet& x) {
  if (!x.within(m.order())) {
    throw Error(ErrorKind::IndexOutOfRange, "subset " + x.to_string() + " is not within [n]",
                {x.back()});
  }
  return detail::dense_determinant(detail::dense_principal(m, x));
}

struct MinorEntry {
  IndexSet subset;
  Rational value;
};

/// Principal minors of orders 2..max_order, stored in colex order of subsets.
class MinorCollection {
 public:
  MinorCollection(std::size_t n, std::size_t max_order, std::vector<MinorEntry> entries)
      : n_(n), max_order_(max_order), entries_(std::move(entries)) {}

  std::size_t order() const noexcept { return n_; }
  std::size_t max_order() const noexcept { return max_order_; }
  std::size_t size() const noexcept { return entries_.size(); }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  const MinorEntry& operator[](std::size_t i) const { return entries_[i]; }

  /// nullptr when the subset is not covered.
  const Rational* find(const IndexSet& x) const {
    const auto it = std::lower_bound(
        entries_.begin(), entries_.end(), x,
        [](const MinorEntry& e, const IndexSet& s) { return colex_less(e.subset, s); });
    return (it != entries_.end() && it->subset == x) ? &it->value : nullptr;
  }

 private:
  std::size_t n_;
  std::size_t max_order_;
  std::vector<MinorEntry> entries_;
};

inline MinorCollection all_minors(const GTMatrix& m, std::size_t max_order) {
  if (max_order < 2 || max_order > m.order()) {
    throw Error(ErrorKind::InvalidArgument,
                "max order must lie in [2, n]; got " + std::to_string(max_order));
  }
  std::vector<MinorEntry> entries;
  for_each_subset_colex(m.order(), 2, max_order, [&](const IndexSet& x) {
    entries.push_back({x, minor(m, x)});
    return true;
  });
  return MinorCollection(m.order(), max_order, std::move(entries));
}

}  // namespace gtm
