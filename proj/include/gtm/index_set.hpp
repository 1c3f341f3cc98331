#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "gtm/error.hpp"

namespace gtm {

/// Vertices (row/column labels) are 1-based throughout: 1..n.
using Vertex = std::size_t;

/// Strictly increasing list of 1-based vertices.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<Vertex> vs) : IndexSet(std::vector<Vertex>(vs)) {}
  /// Sorts the input; duplicates and vertex 0 are rejected.
  explicit IndexSet(std::vector<Vertex> vs) : items_(std::move(vs)) {
    std::sort(items_.begin(), items_.end());
    if (std::adjacent_find(items_.begin(), items_.end()) != items_.end()) {
      throw Error(ErrorKind::InvalidArgument, "index set has duplicate entries");
    }
    if (!items_.empty() && items_.front() == 0) {
      throw Error(ErrorKind::IndexOutOfRange, "index sets are 1-based", {0});
    }
  }

  static IndexSet full(std::size_t n) {
    IndexSet s;
    s.items_.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.items_[i] = i + 1;
    return s;
  }

  /// Bit v-1 of `mask` stands for vertex v.
  static IndexSet from_mask(std::uint64_t mask) {
    IndexSet s;
    for (Vertex v = 1; mask != 0; ++v, mask >>= 1) {
      if (mask & 1U) s.items_.push_back(v);
    }
    return s;
  }

  std::uint64_t to_mask() const {
    std::uint64_t m = 0;
    for (Vertex v : items_) {
      if (v > 64) throw Error(ErrorKind::InvalidArgument, "vertex too large for a mask");
      m |= std::uint64_t{1} << (v - 1);
    }
    return m;
  }

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  Vertex operator[](std::size_t i) const { return items_[i]; }
  Vertex front() const { return items_.front(); }
  Vertex back() const { return items_.back(); }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }
  const std::vector<Vertex>& items() const noexcept { return items_; }

  bool contains(Vertex v) const {
    return std::binary_search(items_.begin(), items_.end(), v);
  }
  /// Position of v in the sorted order, 1-based (0 when absent).
  std::size_t position(Vertex v) const {
    const auto it = std::lower_bound(items_.begin(), items_.end(), v);
    return (it != items_.end() && *it == v) ? static_cast<std::size_t>(it - items_.begin()) + 1 : 0;
  }
  bool is_subset_of(const IndexSet& other) const {
    return std::includes(other.begin(), other.end(), begin(), end());
  }
  bool within(std::size_t n) const { return items_.empty() || items_.back() <= n; }

  IndexSet united(const IndexSet& o) const {
    IndexSet r;
    std::set_union(begin(), end(), o.begin(), o.end(), std::back_inserter(r.items_));
    return r;
  }
  IndexSet intersected(const IndexSet& o) const {
    IndexSet r;
    std::set_intersection(begin(), end(), o.begin(), o.end(), std::back_inserter(r.items_));
    return r;
  }
  IndexSet minus(const IndexSet& o) const {
    IndexSet r;
    std::set_difference(begin(), end(), o.begin(), o.end(), std::back_inserter(r.items_));
    return r;
  }
  IndexSet with(Vertex v) const { return united(IndexSet{v}); }
  IndexSet without(Vertex v) const { return minus(IndexSet{v}); }
  /// [n] minus this set.
  IndexSet complement(std::size_t n) const { return full(n).minus(*this); }

  /// "{1,2,3}"; "{}" for the empty set.
  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(items_[i]);
    }
    return s + "}";
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

  friend std::ostream& operator<<(std::ostream& os, const IndexSet& s) {
    return os << s.to_string();
  }

 private:
  std::vector<Vertex> items_;
};

/// Colexicographic order: A < B iff the largest element of the symmetric
/// difference lies in B. For n <= 64 this is numeric order of the masks.
inline bool colex_less(const IndexSet& a, const IndexSet& b) {
  auto ia = a.items().rbegin(), ea = a.items().rend();
  auto ib = b.items().rbegin(), eb = b.items().rend();
  for (; ia != ea && ib != eb; ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == ea && ib != eb;
}

struct ColexLess {
  bool operator()(const IndexSet& a, const IndexSet& b) const { return colex_less(a, b); }
};

namespace detail {

template <class Visit>
bool colex_walk(Vertex top, std::size_t lo, std::size_t hi,
                std::vector<Vertex>& chosen_desc, Visit& visit) {
  if (top == 0) {
    if (chosen_desc.size() < lo || chosen_desc.size() > hi) return true;
    IndexSet s(std::vector<Vertex>(chosen_desc.rbegin(), chosen_desc.rend()));
    return visit(s);
  }
  // Subsets avoiding `top` precede those containing it.
  if (chosen_desc.size() + (top - 1) >= lo) {
    if (!colex_walk(top - 1, lo, hi, chosen_desc, visit)) return false;
  }
  if (chosen_desc.size() + 1 <= hi && chosen_desc.size() + top >= lo) {
    chosen_desc.push_back(top);
    const bool go_on = colex_walk(top - 1, lo, hi, chosen_desc, visit);
    chosen_desc.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace detail

/// Visits every subset X of [n] with lo <= |X| <= hi in colex order.
/// `visit` returns false to stop early; the function then returns false.
template <class Visit>
bool for_each_subset_colex(std::size_t n, std::size_t lo, std::size_t hi, Visit&& visit) {
  std::vector<Vertex> chosen;
  return detail::colex_walk(n, lo, hi, chosen, visit);
}

}  // namespace gtm
