#pragma once

// Edge lengths of subgraphs of K_v: necessary conditions, gcd reduction, and
// exhaustive realization of a prescribed length list as a cycle, a
// Hamiltonian path, or a near 1-factor.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace psums {

using Vertex = std::uint32_t;

/// Multiset {a_1^{m_1}, ..., a_t^{m_t}} of lengths in 1..floor(v/2).
class LengthList {
 public:
  LengthList() = default;

  LengthList(std::uint32_t v, std::map<std::uint32_t, std::uint32_t> counts) : v_(v), counts_(std::move(counts)) {
    if (v_ < 2) throw std::invalid_argument("length list: v must be >= 2");
    for (auto it = counts_.begin(); it != counts_.end();) {
      if (it->first < 1 || it->first > v_ / 2)
        throw std::invalid_argument("length " + std::to_string(it->first) + " outside 1.." + std::to_string(v_ / 2));
      it = it->second == 0 ? counts_.erase(it) : std::next(it);
    }
  }

  static LengthList from_entries(std::uint32_t v, const std::vector<std::uint32_t>& entries) {
    std::map<std::uint32_t, std::uint32_t> c;
    for (auto a : entries) ++c[a];
    return LengthList(v, std::move(c));
  }

  /// "v: a^m a^m ...", e.g. "11: 1^2 2 3 5^2".
  static LengthList parse(const std::string& text);

  std::uint32_t v() const { return v_; }
  const std::map<std::uint32_t, std::uint32_t>& counts() const { return counts_; }

  std::size_t size() const {
    std::size_t k = 0;
    for (const auto& [a, m] : counts_) k += m;
    return k;
  }

  std::uint32_t count(std::uint32_t a) const {
    const auto it = counts_.find(a);
    return it == counts_.end() ? 0 : it->second;
  }

  /// Entries with multiplicity, ascending.
  std::vector<std::uint32_t> entries() const {
    std::vector<std::uint32_t> e;
    for (const auto& [a, m] : counts_) e.insert(e.end(), m, a);
    return e;
  }

  std::size_t multiples_of(std::uint32_t d) const {
    std::size_t n = 0;
    for (const auto& [a, m] : counts_)
      if (a % d == 0) n += m;
    return n;
  }

  std::string to_string() const {
    std::string s = std::to_string(v_) + ":";
    for (const auto& [a, m] : counts_) {
      s += " " + std::to_string(a);
      if (m > 1) s += "^" + std::to_string(m);
    }
    return s;
  }

  friend bool operator==(const LengthList&, const LengthList&) = default;

 private:
  std::uint32_t v_ = 2;
  std::map<std::uint32_t, std::uint32_t> counts_;
};

namespace detail {

// "v: a^m a ..." into v and (a, m) pairs; values are not range-checked.
inline std::pair<std::uint32_t, std::vector<std::pair<std::int64_t, std::uint32_t>>> parse_power_list(
    const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("list must look like 'v: a^m a ...'");
  std::uint32_t v = 0;
  try {
    std::size_t used = 0;
    const auto head = text.substr(0, colon);
    v = static_cast<std::uint32_t>(std::stoul(head, &used));
    if (head.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("list: bad v in '" + text + "'");
  }
  std::vector<std::pair<std::int64_t, std::uint32_t>> out;
  std::istringstream in(text.substr(colon + 1));
  std::string tok;
  while (in >> tok) {
    const auto caret = tok.find('^');
    try {
      std::size_t used = 0;
      const auto a = std::stoll(tok.substr(0, caret), &used);
      if (used != (caret == std::string::npos ? tok.size() : caret)) throw std::invalid_argument("");
      std::uint32_t m = 1;
      if (caret != std::string::npos) {
        const auto ms = tok.substr(caret + 1);
        m = static_cast<std::uint32_t>(std::stoul(ms, &used));
        if (used != ms.size() || m == 0) throw std::invalid_argument("");
      }
      out.emplace_back(a, m);
    } catch (const std::exception&) {
      throw std::invalid_argument("list: bad entry '" + tok + "'");
    }
  }
  return {v, out};
}

}  // namespace detail

inline LengthList LengthList::parse(const std::string& text) {
  const auto [v, items] = detail::parse_power_list(text);
  std::map<std::uint32_t, std::uint32_t> c;
  for (const auto& [a, m] : items) {
    if (a < 1 || a > static_cast<std::int64_t>(v / 2))
      throw std::invalid_argument("length " + std::to_string(a) + " outside 1.." + std::to_string(v / 2));
    c[static_cast<std::uint32_t>(a)] += m;
  }
  return LengthList(v, std::move(c));
}

/// Same syntax, read as a list of residues mod v (any integers, expanded).
inline std::pair<std::uint32_t, std::vector<std::int64_t>> parse_residue_list(const std::string& text) {
  const auto [v, items] = detail::parse_power_list(text);
  std::vector<std::int64_t> out;
  for (const auto& [a, m] : items) out.insert(out.end(), m, a);
  return {v, out};
}

inline std::uint32_t edge_length(std::uint32_t v, Vertex x, Vertex y) {
  if (x >= v || y >= v) throw std::out_of_range("edge_length: vertex out of range");
  if (x == y) throw std::invalid_argument("edge_length: loop edge");
  const auto d = x > y ? x - y : y - x;
  return std::min(d, v - d);
}

using Edge = std::pair<Vertex, Vertex>;

inline LengthList lengths_of_subgraph(std::uint32_t v, const std::vector<Edge>& edges) {
  std::map<std::uint32_t, std::uint32_t> c;
  for (const auto& [x, y] : edges) ++c[edge_length(v, x, y)];
  return LengthList(v, std::move(c));
}

inline std::vector<Edge> cycle_edges(const std::vector<Vertex>& cycle) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < cycle.size(); ++i) e.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
  return e;
}

inline std::vector<Edge> path_edges(const std::vector<Vertex>& path) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) e.emplace_back(path[i], path[i + 1]);
  return e;
}

inline std::vector<std::uint32_t> divisors(std::uint32_t v) {
  std::vector<std::uint32_t> d;
  for (std::uint32_t i = 1; i <= v; ++i)
    if (v % i == 0) d.push_back(i);
  return d;
}

struct ConditionResult {
  bool pass = true;
  std::optional<std::uint32_t> violating_divisor;
};

/// For every divisor d of v, at most v - d entries are multiples of d.
inline ConditionResult check_bhr_condition(const LengthList& l) {
  for (auto d : divisors(l.v()))
    if (l.multiples_of(d) > l.v() - d) return {false, d};
  return {};
}

/// v odd, |L| = (v-1)/2; for every divisor d of v, at most (v - d)/2
/// entries are multiples of d.
inline ConditionResult check_mpp_condition(const LengthList& l) {
  if (l.v() % 2 == 0) throw std::invalid_argument("MPP condition needs odd v");
  if (l.size() != (l.v() - 1) / 2) throw std::invalid_argument("MPP condition needs |L| = (v-1)/2");
  for (auto d : divisors(l.v()))
    if (l.multiples_of(d) > (l.v() - d) / 2) return {false, d};
  return {};
}

struct SignAssignment {
  std::vector<std::uint32_t> entries;
  std::vector<int> signs;  // +1 or -1, parallel to entries
};

/// Signs eps_i with sum eps_i a_i = 0 mod v, found by dynamic programming
/// over reachable residues; nullopt proves no choice of signs works.
inline std::optional<SignAssignment> check_signed_sum_condition(const LengthList& l) {
  const auto v = l.v();
  const auto e = l.entries();
  const auto k = e.size();
  // reach[i][r]: residue r reachable with the first i entries
  std::vector<std::vector<std::uint8_t>> reach(k + 1, std::vector<std::uint8_t>(v, 0));
  reach[0][0] = 1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::uint32_t r = 0; r < v; ++r)
      if (reach[i][r]) {
        reach[i + 1][(r + e[i]) % v] = 1;
        reach[i + 1][(r + v - e[i] % v) % v] = 1;
      }
  if (!reach[k][0]) return std::nullopt;
  SignAssignment s{e, std::vector<int>(k, 1)};
  std::uint32_t r = 0;
  for (std::size_t i = k; i-- > 0;) {
    const std::uint32_t prev_plus = (r + v - e[i] % v) % v;
    if (reach[i][prev_plus]) {
      s.signs[i] = 1;
      r = prev_plus;
    } else {
      s.signs[i] = -1;
      r = (r + e[i]) % v;
    }
  }
  return s;
}

struct Reduction {
  std::uint32_t d = 1;
  LengthList reduced;
};

/// Divides v and every length by d = gcd(v, a_1, ..., a_t).
inline Reduction reduce_by_gcd(const LengthList& l) {
  std::uint32_t d = l.v();
  for (const auto& [a, m] : l.counts()) d = std::gcd(d, a);
  if (d <= 1 || l.counts().empty()) return {1, l};
  std::map<std::uint32_t, std::uint32_t> c;
  for (const auto& [a, m] : l.counts()) c[a / d] = m;
  return {d, LengthList(l.v() / d, std::move(c))};
}

/// Requires gcd(v, lengths) = 1. For every divisor d > 1 of v, the number
/// of multiples of d is at most (k/v)(v - d).
inline ConditionResult check_divisor_count_condition(const LengthList& l) {
  if (reduce_by_gcd(l).d != 1)
    throw std::invalid_argument("divisor-count condition needs gcd(v, lengths) = 1; reduce first");
  const auto k = static_cast<std::uint64_t>(l.size());
  for (auto d : divisors(l.v())) {
    if (d == 1) continue;
    if (static_cast<std::uint64_t>(l.multiples_of(d)) * l.v() > k * (l.v() - d)) return {false, d};
  }
  return {};
}

enum class RealizeTarget { kCycle, kHamiltonianPath, kNearOneFactor };

inline const char* to_string(RealizeTarget t) {
  switch (t) {
    case RealizeTarget::kCycle: return "cycle";
    case RealizeTarget::kHamiltonianPath: return "hamiltonian_path";
    case RealizeTarget::kNearOneFactor: return "near_one_factor";
  }
  return "?";
}

struct Realization {
  RealizeTarget target;
  std::vector<Vertex> vertices;  // cycle or path order; empty for factors
  std::vector<Edge> edges;
};

struct RealizeOutcome {
  std::optional<Realization> witness;
  std::uint64_t nodes = 0;
};

namespace detail {

class Realizer {
 public:
  Realizer(const LengthList& l, RealizeTarget t)
      : v_(l.v()), k_(l.size()), target_(t), remaining_(l.v() / 2 + 1, 0), used_(l.v(), 0) {
    for (const auto& [a, m] : l.counts()) remaining_[a] = m;
  }

  RealizeOutcome run() {
    RealizeOutcome out;
    bool ok = false;
    switch (target_) {
      case RealizeTarget::kCycle: ok = start_cycle(); break;
      case RealizeTarget::kHamiltonianPath: ok = start_path(); break;
      case RealizeTarget::kNearOneFactor: ok = start_factor(); break;
    }
    out.nodes = nodes_;
    if (ok) {
      Realization r{target_, {}, {}};
      if (target_ == RealizeTarget::kNearOneFactor) {
        r.edges = edges_;
      } else {
        r.vertices = path_;
        r.edges = target_ == RealizeTarget::kCycle ? cycle_edges(path_) : path_edges(path_);
      }
      out.witness = std::move(r);
    }
    return out;
  }

 private:
  Vertex step(Vertex x, std::uint32_t a, bool plus) const { return plus ? (x + a) % v_ : (x + v_ - a) % v_; }

  // Translation puts an edge of minimum length first, starting at 0;
  // negation makes it go to +a.
  bool start_cycle() {
    std::uint32_t a = 1;
    while (a < remaining_.size() && remaining_[a] == 0) ++a;
    if (a >= remaining_.size()) return false;
    --remaining_[a];
    used_[0] = used_[a] = 1;
    path_ = {0, a};
    return cycle_dfs();
  }

  bool cycle_dfs() {
    ++nodes_;
    const Vertex cur = path_.back();
    if (path_.size() == k_) {
      const auto close = edge_length(v_, cur, 0);
      return remaining_[close] == 1;  // exactly one length is left
    }
    for (std::uint32_t a = 1; a < remaining_.size(); ++a) {
      if (remaining_[a] == 0) continue;
      for (bool plus : {true, false}) {
        if (!plus && 2 * a == v_) break;
        const Vertex nxt = step(cur, a, plus);
        if (used_[nxt]) continue;
        used_[nxt] = 1;
        --remaining_[a];
        path_.push_back(nxt);
        if (cycle_dfs()) return true;
        path_.pop_back();
        ++remaining_[a];
        used_[nxt] = 0;
      }
    }
    return false;
  }

  bool start_path() {
    used_[0] = 1;
    path_ = {0};
    return path_dfs();
  }

  bool path_dfs() {
    ++nodes_;
    if (path_.size() == v_) return true;
    const Vertex cur = path_.back();
    for (std::uint32_t a = 1; a < remaining_.size(); ++a) {
      if (remaining_[a] == 0) continue;
      for (bool plus : {true, false}) {
        if (!plus && (2 * a == v_ || path_.size() == 1)) break;
        const Vertex nxt = step(cur, a, plus);
        if (used_[nxt]) continue;
        used_[nxt] = 1;
        --remaining_[a];
        path_.push_back(nxt);
        if (path_dfs()) return true;
        path_.pop_back();
        ++remaining_[a];
        used_[nxt] = 0;
      }
    }
    return false;
  }

  // Translation makes 0 the uncovered vertex.
  bool start_factor() {
    used_[0] = 1;
    return factor_dfs(1);
  }

  bool factor_dfs(Vertex from) {
    ++nodes_;
    while (from < v_ && used_[from]) ++from;
    if (from >= v_) return true;
    for (std::uint32_t a = 1; a < remaining_.size(); ++a) {
      if (remaining_[a] == 0) continue;
      for (bool plus : {true, false}) {
        if (!plus && 2 * a == v_) break;
        const Vertex y = step(from, a, plus);
        if (used_[y]) continue;
        used_[from] = used_[y] = 1;
        --remaining_[a];
        edges_.emplace_back(std::min(from, y), std::max(from, y));
        if (factor_dfs(from + 1)) return true;
        edges_.pop_back();
        ++remaining_[a];
        used_[from] = used_[y] = 0;
      }
    }
    return false;
  }

  std::uint32_t v_;
  std::size_t k_;
  RealizeTarget target_;
  std::vector<std::uint32_t> remaining_;
  std::vector<std::uint8_t> used_;
  std::vector<Vertex> path_;
  std::vector<Edge> edges_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Exhaustive search for a subgraph of K_v with edge lengths exactly L.
/// Sizes: cycle 3 <= k <= v; path k = v - 1; near 1-factor v odd and
/// k = (v-1)/2. An empty witness is a certificate that none exists.
inline RealizeOutcome realize(const LengthList& l, RealizeTarget target) {
  const auto v = l.v();
  const auto k = l.size();
  switch (target) {
    case RealizeTarget::kCycle:
      if (k < 3 || k > v) throw std::invalid_argument("realize cycle: need 3 <= |L| <= v");
      break;
    case RealizeTarget::kHamiltonianPath:
      if (k != v - 1) throw std::invalid_argument("realize hamiltonian_path: need |L| = v - 1");
      break;
    case RealizeTarget::kNearOneFactor:
      if (v % 2 == 0 || k != (v - 1) / 2) throw std::invalid_argument("realize near_one_factor: need v odd, |L| = (v-1)/2");
      break;
  }
  auto out = detail::Realizer(l, target).run();
  if (out.witness && !(lengths_of_subgraph(v, out.witness->edges) == l))
    throw std::logic_error("realize produced a witness with the wrong length list");
  return out;
}

/// (0, a, 2a, ..., (k-1)a) when a has order k in Z_v (and k >= 3).
inline std::optional<std::vector<Vertex>> uniform_list_cycle(std::uint32_t v, std::uint32_t a, std::uint32_t k) {
  if (a < 1 || a > v / 2) throw std::invalid_argument("uniform_list_cycle: need 1 <= a <= v/2");
  if (k < 3 || k != v / std::gcd(v, a)) return std::nullopt;
  std::vector<Vertex> c;
  for (std::uint32_t i = 0; i < k; ++i) c.push_back(static_cast<Vertex>((static_cast<std::uint64_t>(i) * a) % v));
  return c;
}

/// Multiplies every vertex by d, mapping a witness in K_{v/d} to K_v.
inline std::vector<Vertex> scale_vertices(const std::vector<Vertex>& vs, std::uint32_t d) {
  std::vector<Vertex> out;
  for (auto x : vs) out.push_back(x * d);
  return out;
}

/// Lengths of a list of nonzero residues: a and -a both have length
/// min(a, v - a).
inline LengthList lengths_of_residues(std::uint32_t v, const std::vector<std::int64_t>& residues) {
  if (v < 2) throw std::invalid_argument("residue list: v must be >= 2");
  std::map<std::uint32_t, std::uint32_t> c;
  for (auto r : residues) {
    const auto a = static_cast<std::uint32_t>(((r % v) + v) % v);
    if (a == 0) throw std::invalid_argument("residue list contains 0");
    ++c[std::min(a, v - a)];
  }
  return LengthList(v, std::move(c));
}

struct SignedSequence {
  std::vector<std::uint32_t> ordering;  // the residues a_i in use order
  std::vector<int> signs;               // eps_i
  std::vector<std::uint32_t> partial_sums;
};

/// An ordering (a_1, ..., a_{v-1}) of the residue list and signs eps_i such
/// that the partial sums of (eps_1 a_1, ...) are exactly Z_v \ {0}, read off
/// a Hamiltonian path from 0.
inline std::optional<SignedSequence> bhr_signed_sequence(std::uint32_t v, const std::vector<std::int64_t>& residues) {
  const auto l = lengths_of_residues(v, residues);
  const auto out = realize(l, RealizeTarget::kHamiltonianPath);
  if (!out.witness) return std::nullopt;
  std::vector<std::uint32_t> pool;
  for (auto r : residues) pool.push_back(static_cast<std::uint32_t>(((r % v) + v) % v));
  std::vector<std::uint8_t> taken(pool.size(), 0);
  SignedSequence seq;
  const auto& p = out.witness->vertices;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const std::uint32_t step = (p[i + 1] + v - p[i]) % v;
    std::size_t j = 0;
    while (j < pool.size() && (taken[j] || (pool[j] != step && pool[j] != v - step))) ++j;
    if (j == pool.size()) throw std::logic_error("bhr_signed_sequence: path step has no matching residue");
    taken[j] = 1;
    seq.ordering.push_back(pool[j]);
    seq.signs.push_back(pool[j] == step ? 1 : -1);
    seq.partial_sums.push_back(p[i + 1]);
  }
  return seq;
}

}  // namespace psums
