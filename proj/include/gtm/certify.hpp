#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtm/clans.hpp"
#include "gtm/compare.hpp"
#include "gtm/error.hpp"
#include "gtm/index_set.hpp"
#include "gtm/matrix.hpp"

namespace gtm {

/// Sets reversed in order; each must be a clan of the matrix it is applied to.
using ReversalScript = std::vector<IndexSet>;

struct ScriptTrace {
  GTMatrix result;
  std::vector<std::size_t> non_clan_steps;  // 1-based step numbers
};

namespace detail {

inline void require_step_within(const GTMatrix& m, const IndexSet& y, std::size_t step) {
  if (!y.within(m.order())) {
    throw Error(ErrorKind::IndexOutOfRange,
                "step " + std::to_string(step) + ": " + y.to_string() + " is not within [n]",
                {step});
  }
}

}  // namespace detail

/// Applies the script, throwing NotAClanAtStep on the first set that is not
/// a clan of the current matrix.
inline GTMatrix apply_script(const GTMatrix& a, const ReversalScript& script) {
  GTMatrix cur = a;
  for (std::size_t s = 0; s < script.size(); ++s) {
    detail::require_step_within(cur, script[s], s + 1);
    if (!is_clan(cur, script[s])) {
      throw Error(ErrorKind::NotAClanAtStep,
                  "step " + std::to_string(s + 1) + ": " + script[s].to_string() +
                      " is not a clan",
                  {s + 1});
    }
    cur = inv(cur, script[s]);
  }
  return cur;
}

/// Applies every step regardless, recording the steps whose set was not a clan.
inline ScriptTrace apply_script_lenient(const GTMatrix& a, const ReversalScript& script) {
  ScriptTrace t{a, {}};
  for (std::size_t s = 0; s < script.size(); ++s) {
    detail::require_step_within(t.result, script[s], s + 1);
    if (!is_clan(t.result, script[s])) t.non_clan_steps.push_back(s + 1);
    t.result = inv(t.result, script[s]);
  }
  return t;
}

struct CertificateCheck {
  bool valid = false;
  std::size_t failed_step = 0;  // 1-based; 0 when the steps are fine
  std::string reason;

  explicit operator bool() const noexcept { return valid; }
};

inline CertificateCheck verify_certificate(const GTMatrix& a, const ReversalScript& script,
                                           const GTMatrix& b) {
  if (a.order() != b.order()) return {false, 0, "matrices have different orders"};
  GTMatrix cur = a;
  for (std::size_t s = 0; s < script.size(); ++s) {
    const IndexSet& y = script[s];
    if (!y.within(cur.order())) {
      return {false, s + 1, "step " + std::to_string(s + 1) + ": " + y.to_string() +
                                " is not within [n]"};
    }
    if (!is_clan(cur, y)) {
      return {false, s + 1,
              "step " + std::to_string(s + 1) + ": " + y.to_string() + " is not a clan"};
    }
    cur = inv(cur, y);
  }
  if (cur != b) return {false, 0, "final matrix differs from the target"};
  return {true, 0, ""};
}

namespace detail {

inline void require_minors_up_to_4(const GTMatrix& a, const GTMatrix& b, ErrorKind kind) {
  if (a.order() < 2) return;
  const auto cmp = minors_equal_up_to(a, b, 4);
  if (cmp.equal()) return;
  const auto& d = *cmp.difference;
  throw Error(kind,
              "order-" + std::to_string(d.subset.size()) + " minors differ on " +
                  d.subset.to_string() + ": " + d.minor_a.to_string() + " vs " +
                  d.minor_b.to_string(),
              d.subset.items());
}

/// Nontrivial common clan of maximum size, colex-least within that size.
inline std::optional<IndexSet> largest_common_clan(const GTMatrix& a, const GTMatrix& b,
                                                   std::size_t cap) {
  const std::size_t n = a.order();
  if (n < 3) return std::nullopt;
  require_cap(n, cap, "common clan search");
  std::optional<IndexSet> found;
  for (std::size_t size = n - 1; size >= 2 && !found; --size) {
    for_each_subset_colex(n, size, size, [&](const IndexSet& x) {
      const std::uint64_t mask = x.to_mask();
      if (is_clan_mask(a, mask) && is_clan_mask(b, mask)) {
        found = x;
        return false;
      }
      return true;
    });
  }
  return found;
}

}  // namespace detail

/// A subset with 2 <= |X| <= n-1 that is a clan of both matrices.
/// Requires equal minors of orders <= 4 (HypothesisViolated otherwise).
inline std::optional<IndexSet> common_nontrivial_clan(const GTMatrix& a, const GTMatrix& b,
                                                      std::size_t cap = kClanEnumerationCap) {
  detail::require_same_order(a, b);
  detail::require_minors_up_to_4(a, b, ErrorKind::HypothesisViolated);
  return detail::largest_common_clan(a, b, cap);
}

/// For A and B both alpha-linear with the same alpha: the prefix of A's order
/// ending at the vertex that heads B's order. After reversing it, that vertex
/// heads both orders, so the remaining vertices form a common clan.
inline IndexSet linearize_step(const GTMatrix& a, const GTMatrix& b) {
  detail::require_same_order(a, b);
  const auto la = is_alpha_linear(a);
  const auto lb = is_alpha_linear(b);
  if (!la || !lb || la->weight != lb->weight) {
    throw Error(ErrorKind::NotBothLinear, "matrices are not alpha-linear for a common alpha");
  }
  const Vertex head = lb->order.front();
  std::vector<Vertex> prefix;
  for (Vertex v : la->order) {
    prefix.push_back(v);
    if (v == head) break;
  }
  return IndexSet(std::move(prefix));
}

struct CertifyReport {
  ReversalScript script;
  bool steps_verified = false;
  bool final_equal = false;
};

namespace detail {

inline IndexSet relabel(const IndexSet& local, const IndexSet& host) {
  std::vector<Vertex> g;
  g.reserve(local.size());
  for (Vertex v : local) g.push_back(host[v - 1]);
  return IndexSet(std::move(g));
}

[[noreturn]] inline void broken(const std::string& what) {
  throw Error(ErrorKind::InternalInvariantBroken, what);
}

inline void apply_checked(GTMatrix& s, const IndexSet& y, ReversalScript& out, const char* where) {
  if (!is_clan(s, y)) broken(std::string(where) + ": " + y.to_string() + " is not a clan");
  s = inv(s, y);
  out.push_back(y);
}

/// Induction on n: split along a common nontrivial clan X, solve the
/// quotient on U = ([n] \ X) + min(X), lift, then solve inside X.
inline ReversalScript certify_rec(const GTMatrix& a, const GTMatrix& b, std::size_t cap) {
  const std::size_t n = a.order();
  require_minors_up_to_4(a, b, ErrorKind::MinorMismatch);
  if (n <= 1 || a == b) return {};
  if (a == transpose(b)) return {IndexSet::full(n)};

  ReversalScript script;
  GTMatrix s = a;
  auto clan = largest_common_clan(s, b, cap);
  if (!clan) {
    const auto la = is_alpha_linear(s);
    const auto lb = is_alpha_linear(b);
    if (!(la && lb && la->weight == lb->weight)) {
      broken("no common nontrivial clan, matrices differ and are not both alpha-linear");
    }
    apply_checked(s, linearize_step(s, b), script, "linearization");
    clan = largest_common_clan(s, b, cap);
    if (!clan) broken("linearization did not produce a common nontrivial clan");
  }

  const IndexSet& x_set = *clan;
  const Vertex x = x_set.front();
  const IndexSet u = x_set.complement(n).with(x);

  for (const IndexSet& y : certify_rec(principal_submatrix(s, u), principal_submatrix(b, u), cap)) {
    IndexSet lifted = relabel(y, u);
    if (lifted.contains(x)) lifted = lifted.united(x_set);
    apply_checked(s, lifted, script, "lifted quotient step");
  }
  if (principal_submatrix(s, u) != principal_submatrix(b, u)) {
    broken("quotient steps did not reproduce B[U]");
  }

  for (const IndexSet& z : certify_rec(principal_submatrix(s, x_set),
                                       principal_submatrix(b, x_set), cap)) {
    apply_checked(s, relabel(z, x_set), script, "step inside the clan");
  }
  if (s != b) broken("assembled script does not reach B");
  return script;
}

}  // namespace detail

/// Reversal script turning A into B. Requires equal minors of orders <= 4
/// (MinorMismatch otherwise, naming the subset). The script is checked by
/// `verify_certificate` before it is returned.
inline CertifyReport certify(const GTMatrix& a, const GTMatrix& b,
                             std::size_t cap = kClanEnumerationCap) {
  detail::require_same_order(a, b);
  CertifyReport report;
  report.script = detail::certify_rec(a, b, cap);
  const auto check = verify_certificate(a, report.script, b);
  report.steps_verified = check.valid || check.failed_step == 0;
  report.final_equal = check.valid;
  if (!check.valid) detail::broken("synthesized script failed verification: " + check.reason);
  return report;
}

}  // namespace gtm
