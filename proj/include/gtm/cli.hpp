#pragma once

// Subcommands of the `gtm` tool as plain functions, so tests can drive them
// without spawning a process. Exit codes: 0 affirmative, 1 negative answer
// or violated hypothesis (with detail on stdout), 2 usage, I/O, parse or
// size-cap errors (message on stderr).

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>

#include "gtm/certify.hpp"
#include "gtm/clans.hpp"
#include "gtm/compare.hpp"
#include "gtm/determinant.hpp"
#include "gtm/error.hpp"
#include "gtm/families.hpp"
#include "gtm/generators.hpp"
#include "gtm/io.hpp"

namespace gtm::cli {

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

struct Caps {
  std::size_t clans = kClanEnumerationCap;
  std::size_t oracle = kOracleCap;
};

/// Both caps replaced by $N_CAP when it holds an integer in [1, 63].
inline Caps caps_from_env(std::ostream& err) {
  Caps caps;
  const char* raw = std::getenv("N_CAP");
  if (raw == nullptr || *raw == '\0') return caps;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (*end != '\0' || v < 1 || v > 63) {
    err << "warning: ignoring N_CAP='" << raw << "' (expected an integer in [1,63])\n";
    return caps;
  }
  caps.clans = caps.oracle = v;
  return caps;
}

namespace detail {

inline int fail(Streams io, const Error& e) {
  io.err << "error: " << e.what() << "\n";
  return 2;
}

inline bool load(const std::string& path, std::optional<GTMatrix>& out, Streams io, int& code) {
  try {
    out = io::read_matrix(path);
    return true;
  } catch (const Error& e) {
    io.err << "error: " << path << ": " << e.what() << "\n";
    code = 2;
    return false;
  }
}

inline std::string relation_arrow(const Bipartition& bp) {
  if (bp.relation.kind == SetRelation::Kind::Backward) {
    return bp.second.to_string() + " -> " + bp.first.to_string();
  }
  return bp.first.to_string() + " -> " + bp.second.to_string();
}

}  // namespace detail

inline int cmd_validate(const std::string& path, Streams io) {
  RawMatrix raw;
  try {
    raw = io::parse_raw_matrix(io::read_file(path));
  } catch (const Error& e) {
    return detail::fail(io, e);
  }
  try {
    const GTMatrix m = GTMatrix::validate(raw);
    io.out << "OK n=" << m.order() << "\n";
    return 0;
  } catch (const Error& e) {
    io.out << "INVALID " << to_string(e.kind());
    if (e.indices().size() >= 2) {
      io.out << " (" << e.indices()[0] << "," << e.indices()[1] << ")";
    }
    io.out << ": " << e.what() << "\n";
    return 1;
  }
}

inline int cmd_minors(const std::string& path, std::size_t max_order, Streams io) {
  if (max_order < 2) {
    io.err << "error: --max-order must be at least 2\n";
    return 2;
  }
  int code = 0;
  std::optional<GTMatrix> m;
  if (!detail::load(path, m, io, code)) return code;
  if (max_order > m->order()) {
    io.err << "warning: --max-order " << max_order << " exceeds n=" << m->order()
           << "; clamped to " << m->order() << "\n";
    max_order = m->order();
  }
  if (max_order < 2) return 0;
  for (const auto& e : all_minors(*m, max_order)) {
    io.out << e.subset << " " << e.value << "\n";
  }
  return 0;
}

/// `max_order` defaults to 4; `all` runs the exhaustive comparison instead.
inline int cmd_compare(const std::string& path_a, const std::string& path_b,
                       std::optional<std::size_t> max_order, bool all, Streams io,
                       Caps caps = {}) {
  int code = 0;
  std::optional<GTMatrix> a, b;
  if (!detail::load(path_a, a, io, code) || !detail::load(path_b, b, io, code)) return code;
  try {
    const ComparisonOutcome cmp =
        all ? all_minors_equal(*a, *b, caps.oracle) : minors_equal_up_to(*a, *b, max_order.value_or(4));
    if (cmp.equal()) {
      io.out << "EQUAL\n";
      return 0;
    }
    const auto& d = *cmp.difference;
    io.out << "DIFFER " << d.subset << " a=" << d.minor_a << " b=" << d.minor_b << "\n";
    return 1;
  } catch (const Error& e) {
    return detail::fail(io, e);
  }
}

inline int cmd_clans(const std::string& path, Streams io, Caps caps = {}) {
  int code = 0;
  std::optional<GTMatrix> m;
  if (!detail::load(path, m, io, code)) return code;
  io.out << "n=" << m->order() << "\n";
  io.out << (is_indecomposable(*m) ? "indecomposable" : "decomposable") << "\n";
  if (const auto bp = separating_bipartition(*m)) {
    if (bp->relation.kind == SetRelation::Kind::NoArcs) {
      io.out << "separable (no-arc bipartition): " << bp->first << " | " << bp->second << "\n";
    } else {
      io.out << "separable (" << *bp->relation.weight << "-separable): "
             << detail::relation_arrow(*bp) << "\n";
    }
  } else {
    io.out << "inseparable\n";
  }
  if (const auto lin = is_alpha_linear(*m)) {
    io.out << lin->weight << "-linear order:";
    for (Vertex v : lin->order) io.out << " " << v;
    io.out << "\n";
  } else {
    io.out << "not alpha-linear\n";
  }
  try {
    const auto clans = nontrivial_clans(*m, caps.clans);
    io.out << "nontrivial clans: " << clans.size() << "\n";
    for (const auto& c : clans) io.out << "  " << c << "\n";
    return 0;
  } catch (const Error& e) {
    io.out << "nontrivial clans: skipped (partial output)\n";
    return detail::fail(io, e);
  }
}

inline int cmd_certify(const std::string& path_a, const std::string& path_b,
                       const std::optional<std::string>& out_path, Streams io, Caps caps = {}) {
  int code = 0;
  std::optional<GTMatrix> a, b;
  if (!detail::load(path_a, a, io, code) || !detail::load(path_b, b, io, code)) return code;
  try {
    if (const auto cmp = minors_equal_up_to(*a, *b, 4); !cmp.equal()) {
      const auto& d = *cmp.difference;
      io.out << "MINOR MISMATCH order=" << d.subset.size() << " " << d.subset
             << " a=" << d.minor_a << " b=" << d.minor_b << "\n";
      return 1;
    }
    const CertifyReport report = certify(*a, *b, caps.clans);
    const std::string json = io::format_script(report.script);
    if (out_path) {
      io::write_file(*out_path, json + "\n");
      io.out << "CERTIFIED steps=" << report.script.size() << " -> " << *out_path << "\n";
    } else {
      io.out << json << "\n";
    }
    return 0;
  } catch (const Error& e) {
    return detail::fail(io, e);
  }
}

inline int cmd_apply(const std::string& path_a, const std::string& script_path, Streams io) {
  int code = 0;
  std::optional<GTMatrix> a;
  if (!detail::load(path_a, a, io, code)) return code;
  ReversalScript script;
  try {
    script = io::parse_script(io::read_file(script_path), a->order());
  } catch (const Error& e) {
    return detail::fail(io, e);
  }
  try {
    io.out << io::format_matrix(apply_script(*a, script));
    return 0;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotAClanAtStep) return detail::fail(io, e);
    io.out << "NOT A CLAN at step " << e.indices().front() << ": "
           << script[e.indices().front() - 1] << "\n";
    return 1;
  }
}

inline int cmd_family(const std::string& a, const std::string& b, Streams io) {
  try {
    io.out << io::format_matrix(m_ab({Rational::parse(a), Rational::parse(b)}));
    return 0;
  } catch (const Error& e) {
    return detail::fail(io, e);
  }
}

struct RandomOptions {
  std::size_t n = 4;
  std::uint64_t seed = 0;
  bool tournament = false;
  std::string half_probability = "0";
  std::uint64_t denominator_bound = 6;
};

inline int cmd_random(const RandomOptions& opt, Streams io) {
  try {
    if (opt.tournament) {
      io.out << io::format_matrix(random_tournament(opt.n, opt.seed));
      return 0;
    }
    GeneratorConfig cfg{opt.n, opt.seed, Rational::parse(opt.half_probability),
                        opt.denominator_bound};
    io.out << io::format_matrix(random_gt(cfg));
    return 0;
  } catch (const Error& e) {
    return detail::fail(io, e);
  }
}

}  // namespace gtm::cli
