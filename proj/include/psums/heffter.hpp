#pragma once

// Heffter systems D(v,k) and the cyclic k-cycle systems they generate.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "psums/constructive.hpp"
#include "psums/group.hpp"
#include "psums/ordering.hpp"

namespace psums {

using Residue = std::uint32_t;

inline Residue normalize_residue(std::int64_t x, std::uint32_t v) {
  const auto m = static_cast<std::int64_t>(v);
  return static_cast<Residue>(((x % m) + m) % m);
}

/// Partition of a half-set of Z_v into zero-sum parts of size k. Only
/// validate_heffter and find_heffter_system produce these.
struct HeffterSystem {
  std::uint32_t v = 0;
  std::uint32_t k = 0;
  std::vector<std::vector<Residue>> parts;
};

struct HeffterViolation {
  enum class Kind { kBadParameters, kWrongPartCount, kWrongPartSize, kZeroElement, kRepeatedElement, kInversePair, kNonZeroSum };
  Kind kind;
  std::string detail;
  std::vector<Residue> elements;
};

inline const char* to_string(HeffterViolation::Kind k) {
  switch (k) {
    case HeffterViolation::Kind::kBadParameters: return "bad-parameters";
    case HeffterViolation::Kind::kWrongPartCount: return "wrong-part-count";
    case HeffterViolation::Kind::kWrongPartSize: return "wrong-part-size";
    case HeffterViolation::Kind::kZeroElement: return "zero-element";
    case HeffterViolation::Kind::kRepeatedElement: return "repeated-element";
    case HeffterViolation::Kind::kInversePair: return "inverse-pair";
    case HeffterViolation::Kind::kNonZeroSum: return "nonzero-part-sum";
  }
  return "unknown";
}

/// Raw contents of a system file: "v k" on the first line, then one part
/// per line as signed residues.
struct HeffterInput {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::vector<std::vector<std::int64_t>> parts;
};

inline HeffterInput parse_heffter_text(std::istream& in) {
  HeffterInput h;
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::int64_t> nums;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        nums.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": '" + tok + "' is not an integer");
      }
    }
    if (nums.empty()) continue;
    if (!header) {
      if (nums.size() != 2) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'v k'");
      h.v = nums[0];
      h.k = nums[1];
      header = true;
    } else {
      h.parts.push_back(std::move(nums));
    }
  }
  if (!header) throw std::invalid_argument("empty Heffter system file");
  return h;
}

/// Checks every defining property; signed residues are normalized into
/// 0..v-1 first. Returns the typed system or the first violation found.
inline std::variant<HeffterSystem, HeffterViolation> validate_heffter(
    std::int64_t v, std::int64_t k, const std::vector<std::vector<std::int64_t>>& parts) {
  using K = HeffterViolation::Kind;
  if (v < 3 || v % 2 == 0)
    return HeffterViolation{K::kBadParameters, "v must be odd and >= 3, got " + std::to_string(v), {}};
  if (k < 3 || (v - 1) % (2 * k) != 0)
    return HeffterViolation{K::kBadParameters, "k must be >= 3 with 2k dividing v-1, got k=" + std::to_string(k), {}};
  const auto uv = static_cast<std::uint32_t>(v);
  const auto expected_parts = static_cast<std::size_t>((v - 1) / (2 * k));
  if (parts.size() != expected_parts)
    return HeffterViolation{K::kWrongPartCount,
                            "expected " + std::to_string(expected_parts) + " parts, got " + std::to_string(parts.size()),
                            {}};
  HeffterSystem h{uv, static_cast<std::uint32_t>(k), {}};
  std::vector<std::int64_t> owner(uv, -1);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    std::vector<Residue> part;
    for (auto x : parts[p]) part.push_back(normalize_residue(x, uv));
    if (part.size() != static_cast<std::size_t>(k))
      return HeffterViolation{K::kWrongPartSize,
                              "part " + std::to_string(p + 1) + " has " + std::to_string(part.size()) + " elements",
                              part};
    for (auto x : part) {
      if (x == 0) return HeffterViolation{K::kZeroElement, "part " + std::to_string(p + 1) + " contains 0", {0}};
      if (owner[x] >= 0) return HeffterViolation{K::kRepeatedElement, "element repeated", {x}};
      if (owner[uv - x] >= 0)
        return HeffterViolation{K::kInversePair, "contains the pair {x,-x}", {std::min(x, uv - x), std::max(x, uv - x)}};
      owner[x] = static_cast<std::int64_t>(p);
    }
    std::uint64_t s = 0;
    for (auto x : part) s += x;
    if (s % uv != 0)
      return HeffterViolation{K::kNonZeroSum,
                              "part " + std::to_string(p + 1) + " sums to " + std::to_string(s % uv) + " mod " +
                                  std::to_string(uv),
                              part};
    h.parts.push_back(std::move(part));
  }
  return h;
}

/// A cycle (c_1,...,c_k) on Z_v; compares equal up to rotation and
/// reflection once canonicalized.
struct Cycle {
  std::vector<Residue> vertices;

  /// Minimum vertex first, then the direction whose second vertex is
  /// smaller.
  Cycle canonical() const {
    const auto k = vertices.size();
    if (k == 0) return *this;
    const auto m = static_cast<std::size_t>(std::min_element(vertices.begin(), vertices.end()) - vertices.begin());
    std::vector<Residue> fwd(k), bwd(k);
    for (std::size_t i = 0; i < k; ++i) {
      fwd[i] = vertices[(m + i) % k];
      bwd[i] = vertices[(m + k - i) % k];
    }
    return Cycle{std::min(fwd, bwd)};
  }

  Cycle translated(std::uint32_t shift, std::uint32_t v) const {
    Cycle c;
    for (auto x : vertices) c.vertices.push_back((x + shift) % v);
    return c;
  }

  bool same_as(const Cycle& other) const { return canonical().vertices == other.canonical().vertices; }

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

inline std::string to_string(const Cycle& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.vertices.size(); ++i) s += (i ? "," : "") + std::to_string(c.vertices[i]);
  return s + ")";
}

/// Sorted multiset of the 2k residues +-(c_{h+1} - c_h), wrapping around.
inline std::vector<Residue> difference_list(const Cycle& c, std::uint32_t v) {
  std::vector<Residue> d;
  const auto k = c.vertices.size();
  for (std::size_t h = 0; h < k; ++h) {
    const auto x = c.vertices[h], y = c.vertices[(h + 1) % k];
    const Residue diff = (y + v - x) % v;
    d.push_back(diff);
    d.push_back((v - diff) % v);
  }
  std::sort(d.begin(), d.end());
  return d;
}

/// The multiset +-omega, sorted, for comparison with difference_list.
inline std::vector<Residue> signed_multiset(std::span<const Residue> omega, std::uint32_t v) {
  std::vector<Residue> d;
  for (auto a : omega) {
    d.push_back(a % v);
    d.push_back((v - a % v) % v);
  }
  std::sort(d.begin(), d.end());
  return d;
}

/// Vertices are the partial sums of omega, the last one being 0.
inline Cycle ordering_to_cycle(std::span<const Residue> omega, std::uint32_t v) {
  if (omega.size() < 3) throw std::invalid_argument("ordering_to_cycle: need at least 3 elements");
  Cycle c;
  std::vector<std::uint8_t> seen(v, 0);
  std::uint64_t s = 0;
  for (auto a : omega) {
    s = (s + a) % v;
    if (seen[s]++) throw std::invalid_argument("ordering_to_cycle: ordering is not simple (vertex " + std::to_string(s) + " repeats)");
    c.vertices.push_back(static_cast<Residue>(s));
  }
  if (s != 0) throw std::invalid_argument("ordering_to_cycle: ordering does not sum to 0, cycle is not closed");
  return c;
}

/// Elements sorted by the absolute value of their representative in
/// (-v/2, v/2), e.g. {3,1,4,20,10,12} in Z_25 becomes (1,3,4,20,10,12).
inline Ordering half_set_order(std::span<const Residue> part, std::uint32_t v) {
  Ordering o(part.begin(), part.end());
  auto mag = [v](Residue x) { return std::min(x, v - x); };
  std::stable_sort(o.begin(), o.end(), [&](Residue a, Residue b) {
    return mag(a) != mag(b) ? mag(a) < mag(b) : a < b;
  });
  return o;
}

struct BaseCycles {
  std::vector<Ordering> orderings;  // one simple ordering per part
  std::vector<CaseLabel> strategies;
  std::vector<Cycle> cycles;
};

/// A part with no simple ordering: a counterexample to the zero-sum
/// conjecture, carrying the exhaustive-search certificate.
struct NoSimpleOrdering {
  std::uint32_t v = 0;
  std::vector<Residue> part;
  std::string search_space;  // k!, orderings ruled out
  std::uint64_t nodes = 0;
};

/// Orders each part (its half-set order when that is already simple, else
/// constructively when |part| <= 9, else by search),
/// turns the orderings into cycles and checks that the differences cover
/// Z_v \ {0} exactly once.
inline std::variant<BaseCycles, NoSimpleOrdering> build_base_cycles(const HeffterSystem& h) {
  const auto g = AbelianGroup::cyclic(h.v);
  BaseCycles out;
  std::vector<Residue> all_diffs;
  for (const auto& part : h.parts) {
    Ordering omega = half_set_order(part, h.v);
    CaseLabel label{"half-set-order", "half-set-order"};
    if (is_simple(g, omega)) {
      // natural order already works
    } else if (part.size() <= 9) {
      auto r = order_small_abelian(g, std::span<const Elem>(part));
      omega = std::move(r.ordering);
      label = std::move(r.label);
    } else {
      SearchStats stats;
      auto found = find_simple_ordering(g, std::span<const Elem>(part), false, &stats);
      if (!found) {
        std::clog << "psums: part of D(" << h.v << "," << h.k << ") has no simple ordering; candidate counterexample {";
        for (std::size_t i = 0; i < part.size(); ++i) std::clog << (i ? "," : "") << part[i];
        std::clog << "} in Z" << h.v << "\n";
        return NoSimpleOrdering{h.v, part, factorial_string(part.size()), stats.nodes};
      }
      omega = std::move(*found);
      label = {"search", "search/dfs"};
    }
    auto cycle = ordering_to_cycle(omega, h.v);
    const auto d = difference_list(cycle, h.v);
    all_diffs.insert(all_diffs.end(), d.begin(), d.end());
    out.orderings.push_back(std::move(omega));
    out.strategies.push_back(std::move(label));
    out.cycles.push_back(std::move(cycle));
  }
  std::sort(all_diffs.begin(), all_diffs.end());
  std::vector<Residue> expected(h.v - 1);
  std::iota(expected.begin(), expected.end(), 1u);
  if (all_diffs != expected) throw std::logic_error("base cycle differences do not cover Z_v \\ {0} exactly once");
  return out;
}

struct CycleSystem {
  std::uint32_t v = 0;
  std::vector<Cycle> cycles;  // canonical forms, sorted
  bool verified_decomposition = false;
  std::uint64_t edges_covered = 0;
};

class DecompositionError : public std::runtime_error {
 public:
  DecompositionError(const std::string& what, Residue x, Residue y)
      : std::runtime_error(what), edge{x, y} {}
  std::pair<Residue, Residue> edge;
};

namespace detail {

inline std::size_t edge_index(Residue x, Residue y, std::uint32_t v) {
  if (x > y) std::swap(x, y);
  return static_cast<std::size_t>(x) * v + y;
}

}  // namespace detail

/// Every edge of K_v must lie in exactly one cycle; throws
/// DecompositionError naming the first offending edge otherwise.
inline std::uint64_t check_decomposition(const std::vector<Cycle>& cycles, std::uint32_t v) {
  std::vector<std::uint8_t> cover(static_cast<std::size_t>(v) * v, 0);
  std::uint64_t edges = 0;
  for (const auto& c : cycles) {
    const auto k = c.vertices.size();
    for (std::size_t h = 0; h < k; ++h) {
      const auto x = c.vertices[h], y = c.vertices[(h + 1) % k];
      if (x == y || x >= v || y >= v) throw DecompositionError("invalid edge in cycle " + to_string(c), x, y);
      if (cover[detail::edge_index(x, y, v)]++)
        throw DecompositionError("edge [" + std::to_string(x) + "," + std::to_string(y) + "] covered twice", x, y);
      ++edges;
    }
  }
  for (Residue x = 0; x < v; ++x)
    for (Residue y = x + 1; y < v; ++y)
      if (!cover[detail::edge_index(x, y, v)])
        throw DecompositionError("edge [" + std::to_string(x) + "," + std::to_string(y) + "] not covered", x, y);
  return edges;
}

/// Develops base cycles under translation by Z_v and verifies the result is
/// a decomposition of K_v.
inline CycleSystem develop_system(const std::vector<Cycle>& base, std::uint32_t v) {
  CycleSystem sys;
  sys.v = v;
  for (const auto& b : base)
    for (std::uint32_t i = 0; i < v; ++i) sys.cycles.push_back(b.translated(i, v).canonical());
  std::sort(sys.cycles.begin(), sys.cycles.end());
  sys.cycles.erase(std::unique(sys.cycles.begin(), sys.cycles.end()), sys.cycles.end());
  if (v >= 1) sys.edges_covered = check_decomposition(sys.cycles, v);
  sys.verified_decomposition = true;
  return sys;
}

namespace detail {

class HeffterSearch {
 public:
  HeffterSearch(std::uint32_t v, std::uint32_t k)
      : v_(v), k_(k), half_((v - 1) / 2), used_(half_ + 1, 0) {}

  std::optional<HeffterSystem> run() {
    if (!next_part()) return std::nullopt;
    return HeffterSystem{v_, k_, parts_};
  }

 private:
  // Each pair {x, v-x}, 1 <= x <= (v-1)/2, contributes exactly one element.
  // A part starts with +x for its smallest unused pair x (negating a whole
  // part keeps it valid); further pairs come in increasing order.
  bool next_part() {
    std::uint32_t first = 1;
    while (first <= half_ && used_[first]) ++first;
    if (first > half_) return true;
    used_[first] = 1;
    std::vector<Residue> cur{first};
    if (extend(cur, first, first)) return true;
    used_[first] = 0;
    return false;
  }

  bool extend(std::vector<Residue>& cur, std::uint32_t last_pair, std::uint64_t sum) {
    if (cur.size() + 1 == k_) {
      const Residue need = static_cast<Residue>((v_ - sum % v_) % v_);
      const std::uint32_t pair = std::min(need, v_ - need);
      if (need == 0 || pair <= last_pair || used_[pair]) return false;
      used_[pair] = 1;
      cur.push_back(need);
      parts_.push_back(cur);
      if (next_part()) return true;
      parts_.pop_back();
      cur.pop_back();
      used_[pair] = 0;
      return false;
    }
    for (std::uint32_t p = last_pair + 1; p <= half_; ++p) {
      if (used_[p]) continue;
      // the remaining k - |cur| - 1 pairs must fit above p
      if (half_ - p < k_ - cur.size() - 1) break;
      used_[p] = 1;
      for (Residue x : {p, v_ - p}) {
        cur.push_back(x);
        if (extend(cur, p, sum + x)) return true;
        cur.pop_back();
      }
      used_[p] = 0;
    }
    return false;
  }

  std::uint32_t v_, k_, half_;
  std::vector<std::uint8_t> used_;
  std::vector<std::vector<Residue>> parts_;
};

}  // namespace detail

/// Deterministic backtracking constructor for D(v,k); nullopt after the
/// search space is exhausted.
inline std::optional<HeffterSystem> find_heffter_system(std::uint32_t v, std::uint32_t k) {
  if (v < 3 || v % 2 == 0 || k < 3 || (v - 1) % (2 * k) != 0)
    throw std::invalid_argument("find_heffter_system: need v odd and 2k | v-1 with k >= 3");
  auto h = detail::HeffterSearch(v, k).run();
  if (h) {
    for (auto& p : h->parts) std::sort(p.begin(), p.end());
  }
  return h;
}

}  // namespace psums
