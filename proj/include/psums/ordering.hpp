#pragma once

// Partial sums, simpleness, and the exhaustive ordering search that serves as
// the correctness oracle for every constructive path in the library.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "psums/group.hpp"

namespace psums {

/// A sequence of distinct non-identity elements (a_1, ..., a_k).
using Ordering = std::vector<Elem>;
/// Running sums (s_1, ..., s_k), s_j = s_{j-1} + a_j.
using PartialSumTrace = std::vector<Elem>;

template <FiniteGroup G>
void validate_ordering(const G& g, std::span<const Elem> ordering) {
  std::vector<std::uint8_t> seen(g.order(), 0);
  for (auto a : ordering) {
    if (a >= g.order()) throw std::out_of_range("element index out of range");
    if (a == kIdentity) throw std::invalid_argument("orderings may not contain the identity");
    if (seen[a]++) throw std::invalid_argument("ordering repeats element " + g.label(a));
  }
}

template <FiniteGroup G>
PartialSumTrace partial_sums(const G& g, std::span<const Elem> ordering) {
  PartialSumTrace sums;
  sums.reserve(ordering.size());
  Elem s = kIdentity;
  for (auto a : ordering) {
    s = g.op(s, a);
    sums.push_back(s);
  }
  return sums;
}

/// Sum accumulated left to right in the given order.
template <FiniteGroup G>
Elem sum_of(const G& g, std::span<const Elem> elems) {
  Elem s = kIdentity;
  for (auto a : elems) s = g.op(s, a);
  return s;
}

inline bool has_duplicates(std::span<const Elem> sums) {
  std::vector<Elem> v(sums.begin(), sums.end());
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) != v.end();
}

template <FiniteGroup G>
bool is_simple(const G& g, std::span<const Elem> ordering) {
  return !has_duplicates(partial_sums(g, ordering));
}

/// Simple, and no partial sum equals the identity.
template <FiniteGroup G>
bool is_zero_free_simple(const G& g, std::span<const Elem> ordering) {
  const auto sums = partial_sums(g, ordering);
  if (std::find(sums.begin(), sums.end(), kIdentity) != sums.end()) return false;
  return !has_duplicates(sums);
}

/// A candidate set A with its derived flags. Elements are kept sorted in
/// ambient index order.
struct SubsetCandidate {
  std::vector<Elem> elements;
  bool sum_is_zero = false;
  bool contains_inverse_pair = false;
};

template <FiniteGroup G>
bool contains_inverse_pair(const G& g, std::span<const Elem> elems) {
  for (auto x : elems) {
    const auto nx = g.inverse(x);
    if (nx != x && std::find(elems.begin(), elems.end(), nx) != elems.end()) return true;
  }
  return false;
}

/// Builds a candidate; the sum is taken in ascending element order.
template <FiniteGroup G>
SubsetCandidate make_subset(const G& g, std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
    throw std::invalid_argument("subset contains a repeated element");
  for (auto a : elements)
    if (a >= g.order()) throw std::out_of_range("element index out of range");
  SubsetCandidate c;
  c.sum_is_zero = sum_of(g, elements) == kIdentity;
  c.contains_inverse_pair = contains_inverse_pair(g, elements);
  c.elements = std::move(elements);
  return c;
}

struct SearchStats {
  std::uint64_t nodes = 0;
};

namespace detail {

template <FiniteGroup G>
class OrderingSearch {
 public:
  OrderingSearch(const G& g, std::span<const Elem> set, bool zero_free)
      : g_(g), set_(set.begin(), set.end()), used_(set_.size(), 0), seen_(g.order(), 0) {
    std::sort(set_.begin(), set_.end());
    if (zero_free) seen_[kIdentity] = 1;
    path_.reserve(set_.size());
  }

  bool run(std::uint64_t& nodes) { return dfs(kIdentity, nodes); }
  const Ordering& result() const { return path_; }

 private:
  bool dfs(Elem s, std::uint64_t& nodes) {
    ++nodes;
    if (path_.size() == set_.size()) return true;
    for (std::size_t i = 0; i < set_.size(); ++i) {
      if (used_[i]) continue;
      const Elem t = g_.op(s, set_[i]);
      if (seen_[t]) continue;
      used_[i] = 1;
      seen_[t] = 1;
      path_.push_back(set_[i]);
      if (dfs(t, nodes)) return true;
      path_.pop_back();
      seen_[t] = 0;
      used_[i] = 0;
    }
    return false;
  }

  const G& g_;
  std::vector<Elem> set_;
  std::vector<std::uint8_t> used_;
  std::vector<std::uint8_t> seen_;
  Ordering path_;
};

}  // namespace detail

/// Depth-first search over prefixes in ascending element order. Prefixes
/// whose trace repeats a sum (or, when zero_free, hits the identity) are
/// pruned. Returns the first simple ordering found, or nullopt when the
/// exhausted search proves none exists.
template <FiniteGroup G>
std::optional<Ordering> find_simple_ordering(const G& g, std::span<const Elem> set, bool zero_free,
                                             SearchStats* stats = nullptr) {
  for (auto a : set) {
    if (a >= g.order()) throw std::out_of_range("element index out of range");
    if (a == kIdentity) throw std::invalid_argument("find_simple_ordering: set contains the identity");
  }
  detail::OrderingSearch<G> search(g, set, zero_free);
  std::uint64_t nodes = 0;
  const bool found = search.run(nodes);
  if (stats) stats->nodes += nodes;
  if (!found) return std::nullopt;
  return search.result();
}

template <FiniteGroup G>
std::optional<Ordering> find_simple_ordering(const G& g, const SubsetCandidate& a, bool zero_free,
                                             SearchStats* stats = nullptr) {
  return find_simple_ordering(g, std::span<const Elem>(a.elements), zero_free, stats);
}

/// k! as a decimal string; used to report the size of an exhausted search.
inline std::string factorial_string(std::size_t k) {
  std::vector<std::uint32_t> digits{1};  // little-endian base 10
  for (std::size_t m = 2; m <= k; ++m) {
    std::uint64_t carry = 0;
    for (auto& d : digits) {
      const std::uint64_t v = std::uint64_t{d} * m + carry;
      d = static_cast<std::uint32_t>(v % 10);
      carry = v / 10;
    }
    while (carry) {
      digits.push_back(static_cast<std::uint32_t>(carry % 10));
      carry /= 10;
    }
  }
  std::string s;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) s += static_cast<char>('0' + *it);
  return s;
}

}  // namespace psums
