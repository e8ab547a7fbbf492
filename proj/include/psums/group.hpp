#pragma once

// Finite groups in additive notation.
//
// Every group handle in this library exposes its elements as dense indices
// 0..n-1 with index 0 the identity, so search code never cares whether the
// ambient group is an abelian product of cyclic groups or an arbitrary
// Cayley table.

#include <algorithm>
#include <cctype>
#include <concepts>
#include <cstdint>
#include <istream>
#include <memory>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace psums {

using Elem = std::uint32_t;
inline constexpr Elem kIdentity = 0;

template <typename G>
concept FiniteGroup = requires(const G& g, Elem x, Elem y) {
  { g.order() } -> std::convertible_to<std::size_t>;
  { g.op(x, y) } -> std::same_as<Elem>;
  { g.inverse(x) } -> std::same_as<Elem>;
  { g.is_abelian() } -> std::same_as<bool>;
  { g.name() } -> std::convertible_to<std::string>;
  { g.label(x) } -> std::convertible_to<std::string>;
};

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

struct PrimePower {
  std::uint32_t prime;
  std::uint32_t exponent;
};

inline std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    PrimePower pp{static_cast<std::uint32_t>(p), 0};
    while (n % p == 0) {
      n /= p;
      ++pp.exponent;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({static_cast<std::uint32_t>(n), 1});
  return out;
}

inline std::uint32_t ipow(std::uint32_t base, std::uint32_t exp) {
  std::uint32_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

inline std::uint32_t smallest_prime_factor(std::uint32_t q) {
  for (std::uint32_t p = 2; p * p <= q; ++p)
    if (q % p == 0) return p;
  return q;
}

// Partitions of n with parts in nonincreasing order, emitted in reverse
// lexicographic order: (n), (n-1,1), ..., (1,...,1).
inline void partitions_rec(std::uint32_t n, std::uint32_t max_part,
                           std::vector<std::uint32_t>& cur,
                           std::vector<std::vector<std::uint32_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

inline std::vector<std::vector<std::uint32_t>> integer_partitions(
    std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  detail::partitions_rec(n, n, cur, out);
  return out;
}

/// Isomorphism class of a finite abelian group, stored as its primary
/// decomposition: prime-power cyclic factors sorted by prime, then by
/// exponent. The trivial group has no factors.
class AbelianGroupSpec {
 public:
  AbelianGroupSpec() = default;

  /// Accepts any moduli >= 2 (e.g. {12} or {6, 2}) and canonicalizes.
  static AbelianGroupSpec from_moduli(const std::vector<std::uint32_t>& moduli) {
    std::vector<std::uint32_t> factors;
    for (auto m : moduli) {
      if (m < 2) throw GroupError("cyclic factor modulus must be >= 2, got " + std::to_string(m));
      for (const auto& pp : detail::factorize(m))
        factors.push_back(detail::ipow(pp.prime, pp.exponent));
    }
    return AbelianGroupSpec(std::move(factors));
  }

  /// Factors must already be prime powers; they are sorted into canonical
  /// order.
  explicit AbelianGroupSpec(std::vector<std::uint32_t> factors)
      : factors_(std::move(factors)) {
    for (auto q : factors_) {
      if (q < 2) throw GroupError("factor must be >= 2");
      const auto pf = detail::factorize(q);
      if (pf.size() != 1) throw GroupError("factor " + std::to_string(q) + " is not a prime power");
    }
    std::sort(factors_.begin(), factors_.end(), [](std::uint32_t a, std::uint32_t b) {
      const auto pa = detail::smallest_prime_factor(a);
      const auto pb = detail::smallest_prime_factor(b);
      return pa != pb ? pa < pb : a < b;
    });
  }

  const std::vector<std::uint32_t>& factors() const { return factors_; }

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (auto q : factors_) n *= q;
    return n;
  }

  std::string name() const {
    if (factors_.empty()) return "Z1";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += "x";
      s += "Z" + std::to_string(factors_[i]);
    }
    return s;
  }

  friend bool operator==(const AbelianGroupSpec&, const AbelianGroupSpec&) = default;

 private:
  std::vector<std::uint32_t> factors_;
};

/// One spec per isomorphism class of abelian groups of the given order.
/// Classes come from partitions of each prime exponent; the first prime
/// varies slowest and partitions run from (e) down to (1,...,1).
inline std::vector<AbelianGroupSpec> enumerate_abelian_groups(std::uint64_t order) {
  if (order < 1) throw GroupError("group order must be >= 1");
  const auto pf = detail::factorize(order);
  std::vector<std::vector<std::vector<std::uint32_t>>> per_prime;
  for (const auto& pp : pf) {
    std::vector<std::vector<std::uint32_t>> choices;
    for (const auto& part : integer_partitions(pp.exponent)) {
      std::vector<std::uint32_t> qs;
      for (auto e : part) qs.push_back(detail::ipow(pp.prime, e));
      choices.push_back(std::move(qs));
    }
    per_prime.push_back(std::move(choices));
  }
  std::vector<AbelianGroupSpec> out;
  std::vector<std::size_t> pick(per_prime.size(), 0);
  while (true) {
    std::vector<std::uint32_t> factors;
    for (std::size_t i = 0; i < per_prime.size(); ++i)
      for (auto q : per_prime[i][pick[i]]) factors.push_back(q);
    out.emplace_back(std::move(factors));
    // odometer with the last prime varying fastest
    std::size_t i = per_prime.size();
    while (i > 0) {
      --i;
      if (++pick[i] < per_prime[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
    if (per_prime.empty()) return out;
  }
}

/// Value-semantic element of an abelian group given by its canonical spec.
/// Elements compare lexicographically by coordinates.
class GroupElement {
 public:
  GroupElement(std::shared_ptr<const AbelianGroupSpec> spec, std::vector<std::uint32_t> coords)
      : spec_(std::move(spec)), coords_(std::move(coords)) {
    if (!spec_) throw GroupError("element without ambient spec");
    const auto& f = spec_->factors();
    if (coords_.size() != f.size())
      throw GroupError("coordinate count " + std::to_string(coords_.size()) +
                       " does not match factor count " + std::to_string(f.size()));
    for (std::size_t i = 0; i < f.size(); ++i)
      if (coords_[i] >= f[i]) throw GroupError("coordinate out of range");
  }

  static GroupElement zero(std::shared_ptr<const AbelianGroupSpec> spec) {
    std::vector<std::uint32_t> c(spec->factors().size(), 0);
    return GroupElement(std::move(spec), std::move(c));
  }

  const AbelianGroupSpec& spec() const { return *spec_; }
  const std::shared_ptr<const AbelianGroupSpec>& spec_ptr() const { return spec_; }
  const std::vector<std::uint32_t>& coords() const { return coords_; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
  }

  GroupElement operator-() const {
    auto c = coords_;
    const auto& f = spec_->factors();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (f[i] - c[i]) % f[i];
    return GroupElement(spec_, std::move(c));
  }

  friend GroupElement element_add(const GroupElement& g, const GroupElement& h) {
    if (g.spec_ != h.spec_ && *g.spec_ != *h.spec_)
      throw GroupError("element_add: mismatched ambient groups " + g.spec_->name() +
                       " and " + h.spec_->name());
    auto c = g.coords_;
    const auto& f = g.spec_->factors();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (c[i] + h.coords_[i]) % f[i];
    return GroupElement(g.spec_, std::move(c));
  }

  friend GroupElement operator+(const GroupElement& g, const GroupElement& h) {
    return element_add(g, h);
  }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return *a.spec_ == *b.spec_ && a.coords_ == b.coords_;
  }
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    return a.coords_ < b.coords_;
  }

 private:
  std::shared_ptr<const AbelianGroupSpec> spec_;
  std::vector<std::uint32_t> coords_;
};

/// Indexed handle for Z_{m_1} x ... x Z_{m_r} with arbitrary moduli m_i >= 2.
/// Index order is lexicographic in the coordinates (first coordinate most
/// significant), so for a single modulus the index is the residue itself.
class AbelianGroup {
 public:
  explicit AbelianGroup(const AbelianGroupSpec& spec) : AbelianGroup(spec.factors()) {}

  explicit AbelianGroup(std::vector<std::uint32_t> moduli) : moduli_(std::move(moduli)) {
    for (auto m : moduli_)
      if (m < 2) throw GroupError("cyclic factor modulus must be >= 2");
    order_ = 1;
    for (auto m : moduli_) {
      order_ *= m;
      if (order_ > (std::uint64_t{1} << 31)) throw GroupError("group too large");
    }
    strides_.assign(moduli_.size(), 1);
    for (std::size_t i = moduli_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * moduli_[i];
    if (order_ <= kTableLimit) {
      const auto n = static_cast<std::size_t>(order_);
      table_.resize(n * n);
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) table_[x * n + y] = compute_op(x, y);
    }
  }

  static AbelianGroup cyclic(std::uint32_t n) {
    if (n == 1) return AbelianGroup(std::vector<std::uint32_t>{});
    return AbelianGroup(std::vector<std::uint32_t>{n});
  }

  std::size_t order() const { return static_cast<std::size_t>(order_); }
  const std::vector<std::uint32_t>& moduli() const { return moduli_; }
  AbelianGroupSpec spec() const { return AbelianGroupSpec::from_moduli(moduli_); }
  bool is_abelian() const { return true; }

  std::string name() const {
    if (moduli_.empty()) return "Z1";
    std::string s;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      if (i) s += "x";
      s += "Z" + std::to_string(moduli_[i]);
    }
    return s;
  }

  Elem op(Elem x, Elem y) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(x) * order_ + y];
    return compute_op(x, y);
  }

  Elem inverse(Elem x) const {
    Elem r = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      const auto c = (x / strides_[i]) % moduli_[i];
      r += ((moduli_[i] - c) % moduli_[i]) * strides_[i];
    }
    return r;
  }

  std::vector<std::uint32_t> coords(Elem x) const {
    check(x);
    std::vector<std::uint32_t> c(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i) c[i] = (x / strides_[i]) % moduli_[i];
    return c;
  }

  /// Coordinates are reduced modulo each factor, so negative inputs are fine.
  Elem index(const std::vector<std::int64_t>& coords) const {
    if (coords.size() != moduli_.size())
      throw GroupError("expected " + std::to_string(moduli_.size()) + " coordinates for " + name());
    Elem r = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      const auto m = static_cast<std::int64_t>(moduli_[i]);
      r += static_cast<Elem>(((coords[i] % m) + m) % m) * strides_[i];
    }
    return r;
  }

  std::string label(Elem x) const {
    const auto c = coords(x);
    if (c.empty()) return "0";
    if (c.size() == 1) return std::to_string(c[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c[i]);
    }
    return s + ")";
  }

 private:
  static constexpr std::uint64_t kTableLimit = 1024;

  void check(Elem x) const {
    if (x >= order_) throw std::out_of_range("element index " + std::to_string(x) + " out of range");
  }

  Elem compute_op(Elem x, Elem y) const {
    Elem r = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      const auto a = (x / strides_[i]) % moduli_[i];
      const auto b = (y / strides_[i]) % moduli_[i];
      r += ((a + b) % moduli_[i]) * strides_[i];
    }
    return r;
  }

  std::vector<std::uint32_t> moduli_;
  std::vector<Elem> strides_;
  std::uint64_t order_ = 1;
  std::vector<Elem> table_;
};

/// Arbitrary finite group given by its operation table. Index 0 is the
/// identity. Construction validates identity, Latin-square, and
/// associativity laws (exhaustive up to kExhaustiveAssocLimit elements,
/// a fixed pseudo-random sample of triples above).
class CayleyGroup {
 public:
  static constexpr std::size_t kExhaustiveAssocLimit = 128;
  static constexpr std::size_t kMaxOrder = 4096;

  CayleyGroup(std::size_t n, std::vector<Elem> table, std::string name = "cayley",
              std::vector<std::string> labels = {})
      : n_(n), table_(std::move(table)), name_(std::move(name)), labels_(std::move(labels)) {
    validate();
    inverse_.assign(n_, 0);
    for (Elem x = 0; x < n_; ++x)
      for (Elem y = 0; y < n_; ++y)
        if (at(x, y) == kIdentity) inverse_[x] = y;
    abelian_ = true;
    for (Elem x = 0; x < n_ && abelian_; ++x)
      for (Elem y = x + 1; y < n_; ++y)
        if (at(x, y) != at(y, x)) {
          abelian_ = false;
          break;
        }
  }

  /// Exports any group handle as a table, preserving element indices.
  template <FiniteGroup G>
  static CayleyGroup from_group(const G& g) {
    const auto n = g.order();
    if (n > kMaxOrder) throw GroupError("group too large for a Cayley table");
    std::vector<Elem> t(n * n);
    std::vector<std::string> labels(n);
    for (Elem x = 0; x < n; ++x) {
      labels[x] = g.label(x);
      for (Elem y = 0; y < n; ++y) t[x * n + y] = g.op(x, y);
    }
    return CayleyGroup(n, std::move(t), g.name(), std::move(labels));
  }

  std::size_t order() const { return n_; }
  bool is_abelian() const { return abelian_; }
  const std::string& name() const { return name_; }
  Elem op(Elem x, Elem y) const { return at(x, y); }
  Elem inverse(Elem x) const { return inverse_[x]; }

  std::string label(Elem x) const {
    if (x < labels_.size() && !labels_[x].empty()) return labels_[x];
    return std::to_string(x);
  }

  void set_name(std::string name) { name_ = std::move(name); }

 private:
  Elem at(Elem x, Elem y) const { return table_[static_cast<std::size_t>(x) * n_ + y]; }

  void validate() const {
    if (n_ < 1) throw GroupError("Cayley table must have order >= 1");
    if (n_ > kMaxOrder) throw GroupError("Cayley table order " + std::to_string(n_) + " exceeds limit");
    if (table_.size() != n_ * n_) throw GroupError("Cayley table must have n*n entries");
    for (auto v : table_)
      if (v >= n_) throw GroupError("table entry " + std::to_string(v) + " out of range");
    for (Elem i = 0; i < n_; ++i) {
      if (at(0, i) != i || at(i, 0) != i)
        throw GroupError("identity law fails: element 0 is not the identity at (0," +
                         std::to_string(i) + ")");
    }
    std::vector<std::uint8_t> seen(n_);
    for (Elem i = 0; i < n_; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      for (Elem j = 0; j < n_; ++j) {
        if (seen[at(i, j)]++) throw GroupError("row " + std::to_string(i) + " is not a permutation");
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (Elem j = 0; j < n_; ++j) {
        if (seen[at(j, i)]++) throw GroupError("column " + std::to_string(i) + " is not a permutation");
      }
    }
    auto check_triple = [&](Elem a, Elem b, Elem c) {
      if (at(at(a, b), c) != at(a, at(b, c)))
        throw GroupError("associativity fails for triple (" + std::to_string(a) + "," +
                         std::to_string(b) + "," + std::to_string(c) + ")");
    };
    if (n_ <= kExhaustiveAssocLimit) {
      for (Elem a = 0; a < n_; ++a)
        for (Elem b = 0; b < n_; ++b)
          for (Elem c = 0; c < n_; ++c) check_triple(a, b, c);
    } else {
      std::mt19937_64 rng(0x5eedu);
      std::uniform_int_distribution<Elem> d(0, static_cast<Elem>(n_ - 1));
      for (int t = 0; t < 200000; ++t) check_triple(d(rng), d(rng), d(rng));
    }
  }

  std::size_t n_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::string name_;
  std::vector<std::string> labels_;
  bool abelian_ = true;
};

/// Checked table lookup.
inline Elem cayley_op(const CayleyGroup& g, Elem i, Elem j) {
  if (i >= g.order() || j >= g.order())
    throw std::out_of_range("cayley_op: index out of range for group of order " +
                            std::to_string(g.order()));
  return g.op(i, j);
}

/// Reads the text table format: first the order n, then n rows of n indices.
inline CayleyGroup load_cayley_table(std::istream& in, std::string name = "cayley") {
  long long n = 0;
  if (!(in >> n) || n < 1) throw GroupError("Cayley table: expected a positive order on line 1");
  if (static_cast<std::size_t>(n) > CayleyGroup::kMaxOrder) throw GroupError("Cayley table: order too large");
  const auto un = static_cast<std::size_t>(n);
  std::vector<Elem> t(un * un);
  for (std::size_t i = 0; i < un * un; ++i) {
    long long v = 0;
    if (!(in >> v))
      throw GroupError("Cayley table: missing entry at row " + std::to_string(i / un) + ", column " +
                       std::to_string(i % un));
    if (v < 0 || v >= n)
      throw GroupError("Cayley table: entry " + std::to_string(v) + " out of range at row " +
                       std::to_string(i / un));
    t[i] = static_cast<Elem>(v);
  }
  return CayleyGroup(un, std::move(t), std::move(name));
}

template <FiniteGroup G>
void write_cayley_table(std::ostream& out, const G& g) {
  const auto n = g.order();
  out << n << "\n";
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) out << (y ? " " : "") << g.op(x, y);
    out << "\n";
  }
}

namespace detail {

using Perm = std::vector<std::uint8_t>;

// x + y means "apply x, then y".
inline Perm compose(const Perm& x, const Perm& y) {
  Perm r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = y[x[i]];
  return r;
}

inline std::string cycle_notation(const Perm& p) {
  std::string s;
  std::vector<bool> done(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) continue;
    s += "(";
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) s += " ";
      s += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

// Closure of the generators under composition; identity first, remaining
// elements in lexicographic order of their image vectors.
inline CayleyGroup permutation_group(std::size_t degree, const std::vector<Perm>& gens,
                                     std::string name, std::size_t limit) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      auto p = compose(elems[i], g);
      if (std::find(elems.begin(), elems.end(), p) == elems.end()) {
        elems.push_back(std::move(p));
        if (elems.size() > limit) throw GroupError("group too large for table construction");
      }
    }
  }
  std::sort(elems.begin() + 1, elems.end());
  const auto n = elems.size();
  std::vector<Elem> t(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = cycle_notation(elems[x]);
    for (std::size_t y = 0; y < n; ++y) {
      const auto p = compose(elems[x], elems[y]);
      t[x * n + y] = static_cast<Elem>(std::find(elems.begin(), elems.end(), p) - elems.begin());
    }
  }
  return CayleyGroup(n, std::move(t), std::move(name), std::move(labels));
}

}  // namespace detail

/// Named small groups: "cyclic" n, "sym" n (n <= 5), "alternating" n
/// (3 <= n <= 5), "dihedral" n (order 2n), "dicyclic" n (order 4n;
/// "quaternion" is dicyclic 2).
inline CayleyGroup builtin_group(const std::string& tag, std::uint32_t param) {
  using detail::Perm;
  if (tag == "cyclic") {
    if (param < 1 || param > CayleyGroup::kMaxOrder) throw GroupError("cyclic: order out of range");
    auto g = CayleyGroup::from_group(AbelianGroup::cyclic(param));
    g.set_name("C" + std::to_string(param));
    return g;
  }
  if (tag == "sym" || tag == "alternating") {
    if (param < 1 || param > 5) throw GroupError(tag + ": degree must be in 1..5");
    std::vector<Perm> gens;
    Perm cyc(param), tr(param);
    std::iota(tr.begin(), tr.end(), 0);
    for (std::uint32_t i = 0; i < param; ++i) cyc[i] = static_cast<std::uint8_t>((i + 1) % param);
    if (tag == "sym") {
      if (param >= 2) std::swap(tr[0], tr[1]);
      gens = {cyc, tr};
      return detail::permutation_group(param, gens, "Sym" + std::to_string(param), 120);
    }
    if (param < 3) throw GroupError("alternating: degree must be in 3..5");
    // 3-cycles (1 2 k) generate A_n
    for (std::uint32_t k = 2; k < param; ++k) {
      Perm p(param);
      std::iota(p.begin(), p.end(), 0);
      p[0] = 1;
      p[1] = static_cast<std::uint8_t>(k);
      p[k] = 0;
      gens.push_back(p);
    }
    return detail::permutation_group(param, gens, "Alt" + std::to_string(param), 60);
  }
  if (tag == "dihedral") {
    if (param < 1 || param > CayleyGroup::kMaxOrder / 2) throw GroupError("dihedral: parameter out of range");
    // elements r^i (index i) and r^i s (index n+i); s r = r^{-1} s
    const std::uint32_t n = param;
    const std::size_t ord = 2 * n;
    std::vector<Elem> t(ord * ord);
    std::vector<std::string> labels(ord);
    for (std::uint32_t x = 0; x < ord; ++x) {
      labels[x] = x < n ? "r" + std::to_string(x) : "s" + std::to_string(x - n);
      for (std::uint32_t y = 0; y < ord; ++y) {
        const std::uint32_t i = x % n, j = y % n;
        const bool fx = x >= n, fy = y >= n;
        // (r^i s^a)(r^j s^b) = r^{i + (-1)^a j} s^{a+b}
        const std::uint32_t rot = fx ? (i + n - j) % n : (i + j) % n;
        t[x * ord + y] = (fx != fy) ? n + rot : rot;
      }
    }
    return CayleyGroup(ord, std::move(t), "D" + std::to_string(n), std::move(labels));
  }
  if (tag == "dicyclic" || tag == "quaternion") {
    const std::uint32_t n = tag == "quaternion" ? 2 : param;
    if (n < 2 || 4ull * n > CayleyGroup::kMaxOrder) throw GroupError("dicyclic: parameter out of range");
    // <a, x | a^{2n} = 1, x^2 = a^n, x^{-1} a x = a^{-1}>; elements a^i (i) and a^i x (2n+i)
    const std::uint32_t m = 2 * n;
    const std::size_t ord = 2 * m;
    std::vector<Elem> t(ord * ord);
    std::vector<std::string> labels(ord);
    for (std::uint32_t p = 0; p < ord; ++p) {
      labels[p] = p < m ? "a" + std::to_string(p) : "a" + std::to_string(p - m) + "x";
      for (std::uint32_t q = 0; q < ord; ++q) {
        const std::uint32_t i = p % m, j = q % m;
        const bool xp = p >= m, xq = q >= m;
        Elem r;
        if (!xp && !xq) r = (i + j) % m;
        else if (!xp && xq) r = m + (i + j) % m;
        else if (xp && !xq) r = m + (i + m - j) % m;  // a^i x a^j = a^{i-j} x
        else r = (i + m - j + n) % m;                 // a^i x a^j x = a^{i-j} x^2 = a^{i-j+n}
        t[p * ord + q] = r;
      }
    }
    return CayleyGroup(ord, std::move(t), tag == "quaternion" ? "Q8" : "Dic" + std::to_string(n),
                       std::move(labels));
  }
  throw GroupError("unknown builtin group tag '" + tag + "'");
}

/// Parses names such as "sym3", "dihedral4", "quaternion", "cyclic5", "Q8",
/// "S3", "D4", "A4", "C5", "Dic3".
inline CayleyGroup builtin_group_by_name(const std::string& name) {
  std::size_t split = name.size();
  while (split > 0 && std::isdigit(static_cast<unsigned char>(name[split - 1]))) --split;
  std::string tag = name.substr(0, split);
  for (auto& c : tag) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  const std::string digits = name.substr(split);
  if (tag == "quaternion" || (tag == "q" && digits == "8")) return builtin_group("quaternion", 2);
  if (digits.empty()) throw GroupError("builtin group name '" + name + "' needs a size parameter");
  const auto param = static_cast<std::uint32_t>(std::stoul(digits));
  if (tag == "s") tag = "sym";
  else if (tag == "a" || tag == "alt") tag = "alternating";
  else if (tag == "d") tag = "dihedral";
  else if (tag == "c" || tag == "z") tag = "cyclic";
  else if (tag == "dic") tag = "dicyclic";
  return builtin_group(tag, param);
}

}  // namespace psums
