#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>

#include "gtm/error.hpp"
#include "gtm/index_set.hpp"
#include "gtm/matrix.hpp"
#include "gtm/rational.hpp"

namespace gtm {

/// Parameters of M_{a,b}: a, b in [0,1] \ {1/2}.
struct MabParams {
  Rational a;
  Rational b;

  void validate() const {
    for (const Rational* p : {&a, &b}) {
      if (*p < Rational(0) || *p > Rational(1)) {
        throw Error(ErrorKind::ParamOutOfRange, "parameter " + p->to_string() + " outside [0,1]");
      }
      if (*p == one_half()) throw Error(ErrorKind::ParamIsHalf, "parameter must not be 1/2");
    }
  }
};

/// The 4x4 matrix
///   0    a    b    b
///   1-a  0    1-a  b
///   1-b  a    0    a
///   1-b  1-b  1-a  0
/// M_{a,b} and M_{1-a,b} share all minors of orders 2 and 3.
inline GTMatrix m_ab(const MabParams& p) {
  p.validate();
  const Rational one(1);
  GTMatrix m = GTMatrix::half(4);
  m.set_pair(1, 2, p.a);
  m.set_pair(1, 3, p.b);
  m.set_pair(1, 4, p.b);
  m.set_pair(2, 3, one - p.a);
  m.set_pair(2, 4, p.b);
  m.set_pair(3, 4, p.a);
  return m;
}

/// (2b-1)(2a-1)(a-b)(a+b-1), which equals det M_{1-a,b} - det M_{a,b}.
/// Vanishes iff a = b or a = 1 - b.
inline Rational det_difference(const MabParams& p) {
  p.validate();
  const Rational one(1), two(2);
  return (two * p.b - one) * (two * p.a - one) * (p.a - p.b) * (p.a + p.b - one);
}

struct FFreeCheck {
  bool free = true;
  std::optional<IndexSet> offending;

  explicit operator bool() const noexcept { return free; }
};

namespace detail {

/// True iff the 4x4 principal submatrix on `x`, read in the order `perm`,
/// is M_{a,b} with a, b != 1/2, a != b, a != 1-b.
inline bool is_f_member(const GTMatrix& m, const IndexSet& x, const std::array<int, 4>& perm) {
  auto e = [&](int r, int c) -> const Rational& { return m(x[perm[r]], x[perm[c]]); };
  const Rational& a = e(0, 1);
  const Rational& b = e(0, 2);
  const Rational one(1);
  if (a == one_half() || b == one_half() || a == b || a == one - b) return false;
  return e(0, 3) == b && e(1, 2) == one - a && e(1, 3) == b && e(2, 3) == a;
}

}  // namespace detail

/// No 4-subset induces a submatrix permutation-similar to a member of F
/// (M_{a,b} with a, b != 1/2, a != b, a != 1-b). All 24 orderings are tried.
inline FFreeCheck is_f_free(const GTMatrix& m) {
  FFreeCheck result;
  if (m.order() < 4) return result;
  for_each_subset_colex(m.order(), 4, 4, [&](const IndexSet& x) {
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
      if (detail::is_f_member(m, x, perm)) {
        result = {false, x};
        return false;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
  });
  return result;
}

}  // namespace gtm
