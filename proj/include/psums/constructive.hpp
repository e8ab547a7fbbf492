#pragma once

// Search-free simple orderings.
//
// order_small_abelian covers zero-sum sets without inverse pairs of size at
// most 9 in abelian groups; order_small_general covers any set of size at
// most 5 in any group. Both follow a fixed case tree keyed on which small
// subsets sum to zero, pick a concrete labeling a_1..a_k for the branch, and
// emit the branch's ordering. Every output is re-checked with is_simple; a
// failed check is reported as a case gap and answered by exhaustive search
// instead.
//
// Labeling rule: the sets a branch names (T_1, Q_1, ...) are taken as the
// first qualifying subsets in lexicographic order of their element
// positions, and within each block of labels the elements are assigned in
// ascending ambient order.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iostream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "psums/group.hpp"
#include "psums/ordering.hpp"

namespace psums {

/// Which case of which construction produced an ordering.
struct CaseLabel {
  std::string theorem;  // "abelian8", "abelian9", "general5", or "search"
  std::string branch;   // full path, e.g. "abelian9/case2/sumT1!=0/sumT2=0/sumT3=0"

  friend bool operator==(const CaseLabel&, const CaseLabel&) = default;
};

struct ConstructiveResult {
  Ordering ordering;
  CaseLabel label;
  /// True when the case tree produced no valid ordering and exhaustive
  /// search answered instead.
  bool fallback = false;
  std::string gap_detail;
};

/// Subsets are bitmasks over positions in the (sorted) element list of A.
using PositionMask = std::uint32_t;

struct ZeroSumSubsetIndex {
  std::vector<PositionMask> triples;
  std::vector<PositionMask> quads;

  bool empty() const { return triples.empty() && quads.empty(); }
};

/// Raised when a precondition of a constructive routine is violated.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline int popcount(PositionMask m) { return std::popcount(m); }

inline std::vector<int> positions(PositionMask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1u) out.push_back(i);
  return out;
}

template <FiniteGroup G>
Elem mask_sum(const G& g, std::span<const Elem> elems, PositionMask m) {
  Elem s = kIdentity;
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (m >> i & 1u) s = g.op(s, elems[i]);
  return s;
}

// Internal signal that a branch cannot be realized on this input.
struct CaseGap {
  std::string what;
};

}  // namespace detail

/// All 3- and 4-subsets of A summing to zero, in lexicographic order of
/// positions. Requires an abelian ambient and |A| <= 9.
template <FiniteGroup G>
ZeroSumSubsetIndex zero_sum_index(const G& g, std::span<const Elem> elems) {
  if (elems.size() > 9) throw HypothesisError("zero_sum_index: |A| must be at most 9");
  if (!g.is_abelian()) throw HypothesisError("zero_sum_index: ambient group must be abelian");
  ZeroSumSubsetIndex idx;
  const int k = static_cast<int>(elems.size());
  auto sum = [&](std::initializer_list<int> ps) {
    Elem s = kIdentity;
    for (int p : ps) s = g.op(s, elems[p]);
    return s;
  };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int l = j + 1; l < k; ++l) {
        if (sum({i, j, l}) == kIdentity) idx.triples.push_back((1u << i) | (1u << j) | (1u << l));
      }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int l = j + 1; l < k; ++l)
        for (int m = l + 1; m < k; ++m)
          if (sum({i, j, l, m}) == kIdentity)
            idx.quads.push_back((1u << i) | (1u << j) | (1u << l) | (1u << m));
  return idx;
}

namespace detail {

// Labels 1..k mapped to positions in A.
class Labeling {
 public:
  explicit Labeling(int k) : k_(k), pos_(static_cast<std::size_t>(k) + 1, -1) {}

  // Assigns the positions of `m`, ascending, to `labels` in order.
  Labeling& assign(std::initializer_list<int> labels, PositionMask m) {
    const auto ps = positions(m);
    if (ps.size() != labels.size()) throw CaseGap{"labeling block size mismatch"};
    std::size_t i = 0;
    for (int l : labels) pos_[l] = ps[i++];
    return *this;
  }

  // Rotates labels by `shift` modulo k: new a_i = old a_{i+shift}.
  Labeling rotated(int shift) const {
    Labeling r(k_);
    for (int i = 1; i <= k_; ++i) r.pos_[i] = pos_[((i - 1 + shift) % k_) + 1];
    return r;
  }

  int operator[](int label) const { return pos_[label]; }

  void check_complete() const {
    PositionMask seen = 0;
    for (int i = 1; i <= k_; ++i) {
      if (pos_[i] < 0) throw CaseGap{"label a" + std::to_string(i) + " unassigned"};
      seen |= 1u << pos_[i];
    }
    if (popcount(seen) != k_) throw CaseGap{"labeling is not a bijection"};
  }

 private:
  int k_;
  std::vector<int> pos_;
};

template <FiniteGroup G>
class AbelianCases {
 public:
  AbelianCases(const G& g, std::span<const Elem> elems)
      : g_(g), a_(elems.begin(), elems.end()), k_(static_cast<int>(a_.size())),
        full_(k_ >= 32 ? ~0u : (1u << k_) - 1u), idx_(zero_sum_index(g, a_)) {}

  std::pair<Ordering, std::string> run() {
    if (k_ <= 5) return {a_, "abelian8/|A|<=5"};
    if (idx_.empty()) return {a_, "no-zero-sum-subset"};
    switch (k_) {
      case 6: return six();
      case 7: return seven();
      case 8: return eight();
      default: return nine();
    }
  }

  const ZeroSumSubsetIndex& index() const { return idx_; }

 private:
  using L = std::initializer_list<int>;

  bool zero(const Labeling& lab, L labels) const {
    Elem s = kIdentity;
    for (int l : labels) s = g_.op(s, a_[lab[l]]);
    return s == kIdentity;
  }

  Ordering make(const Labeling& lab, L labels) const {
    lab.check_complete();
    Ordering o;
    for (int l : labels) o.push_back(a_[lab[l]]);
    return o;
  }

  PositionMask rest(PositionMask m) const { return full_ & ~m; }

  std::vector<PositionMask> other_triples(PositionMask t) const {
    std::vector<PositionMask> out;
    for (auto m : idx_.triples)
      if (m != t) out.push_back(m);
    return out;
  }

  static std::string cond(const std::string& name, bool is_zero) {
    return name + (is_zero ? "=0" : "!=0");
  }

  // |A| = 6: one zero-sum triple B and its complement.
  std::pair<Ordering, std::string> six() {
    const auto b = idx_.triples.at(0);
    Labeling lab(6);
    lab.assign({1, 2, 3}, b).assign({4, 5, 6}, rest(b));
    return {make(lab, {1, 2, 4, 3, 5, 6}), "abelian8/|A|=6"};
  }

  std::pair<Ordering, std::string> seven() {
    const auto t1 = idx_.triples.at(0);
    const auto others = other_triples(t1);
    Labeling lab(7);
    if (others.empty()) {
      lab.assign({1, 2, 3}, t1).assign({4, 5, 6, 7}, rest(t1));
      return {make(lab, {1, 2, 4, 3, 5, 6, 7}), "abelian8/|A|=7/unique-T"};
    }
    const auto t2 = others[0];
    if (popcount(t1 & t2) != 1) throw CaseGap{"|A|=7: |T1 n T2| != 1"};
    lab.assign({3}, t1 & t2)
        .assign({1, 2}, t1 & ~t2)
        .assign({4, 5}, t2 & ~t1)
        .assign({6, 7}, rest(t1 | t2));
    if (!zero(lab, {1, 5, 7}))
      return {make(lab, {1, 2, 4, 3, 6, 5, 7}), "abelian8/|A|=7/two-T/a1+a5+a7!=0"};
    return {make(lab, {1, 4, 2, 3, 5, 6, 7}), "abelian8/|A|=7/two-T/a1+a5+a7=0"};
  }

  std::pair<Ordering, std::string> eight() {
    Labeling lab(8);
    if (!idx_.quads.empty()) {
      if (!idx_.triples.empty()) {
        const auto t = idx_.triples[0];
        auto q = idx_.quads[0];
        if (popcount(q & t) == 1) q = rest(q);
        if (popcount(q & t) != 2) throw CaseGap{"|A|=8 case1: |Q n T| not in {1,2}"};
        lab.assign({3, 4}, q & t).assign({1, 2}, q & ~t).assign({5}, t & ~q).assign({6, 7, 8}, rest(q | t));
        if (!zero(lab, {2, 3, 6}))
          return {make(lab, {1, 2, 3, 6, 4, 5, 7, 8}), "abelian8/|A|=8/case1/QT/a2+a3+a6!=0"};
        return {make(lab, {1, 2, 3, 7, 4, 5, 6, 8}), "abelian8/|A|=8/case1/QT/a2+a3+a6=0"};
      }
      const auto q = idx_.quads[0];
      lab.assign({1, 2, 3, 4}, q).assign({5, 6, 7, 8}, rest(q));
      if (!zero(lab, {3, 4, 5, 6}))
        return {make(lab, {1, 2, 3, 5, 4, 6, 7, 8}), "abelian8/|A|=8/case1/no-T/a3+a4+a5+a6!=0"};
      return {make(lab, {1, 2, 3, 5, 4, 7, 6, 8}), "abelian8/|A|=8/case1/no-T/a3+a4+a5+a6=0"};
    }
    const auto t1 = idx_.triples.at(0);
    const auto others = other_triples(t1);
    if (others.empty()) {
      lab.assign({1, 2, 3}, t1).assign({4, 5, 6, 7, 8}, rest(t1));
      return {make(lab, {1, 2, 4, 3, 5, 6, 7, 8}), "abelian8/|A|=8/case2/unique-T"};
    }
    const auto t2 = others[0];
    if (popcount(t1 & t2) != 1) throw CaseGap{"|A|=8 case2: |T1 n T2| != 1"};
    lab.assign({3}, t1 & t2)
        .assign({1, 2}, t1 & ~t2)
        .assign({4, 5}, t2 & ~t1)
        .assign({6, 7, 8}, rest(t1 | t2));
    if (!zero(lab, {1, 4, 8}))
      return {make(lab, {1, 4, 2, 3, 5, 6, 7, 8}), "abelian8/|A|=8/case2/two-T/a1+a4+a8!=0"};
    return {make(lab, {1, 4, 2, 3, 5, 6, 8, 7}), "abelian8/|A|=8/case2/two-T/a1+a4+a8=0"};
  }

  std::pair<Ordering, std::string> nine() {
    if (idx_.quads.empty()) return nine_no_quad();
    if (idx_.quads.size() == 1) return nine_case1();
    for (std::size_t i = 0; i < idx_.quads.size(); ++i)
      for (std::size_t j = i + 1; j < idx_.quads.size(); ++j)
        if (popcount(idx_.quads[i] & idx_.quads[j]) == 2) return nine_case2(idx_.quads[i], idx_.quads[j]);
    return nine_case3();
  }

  std::pair<Ordering, std::string> nine_no_quad() {
    Labeling lab(9);
    const auto t1 = idx_.triples.at(0);
    const auto others = other_triples(t1);
    if (others.empty()) {
      lab.assign({1, 2, 3}, t1).assign({4, 5, 6, 7, 8, 9}, rest(t1));
      return {make(lab, {1, 2, 4, 3, 5, 6, 7, 8, 9}), "abelian9/no-Q/unique-T"};
    }
    for (auto t2 : others) {
      if ((t1 & t2) != 0) continue;
      lab.assign({1, 2, 3}, t1).assign({4, 5, 6}, t2).assign({7, 8, 9}, rest(t1 | t2));
      if (!zero(lab, {3, 5, 7}))
        return {make(lab, {1, 2, 4, 3, 5, 7, 6, 8, 9}), "abelian9/no-Q/caseA/a3+a5+a7!=0"};
      return {make(lab, {1, 2, 4, 3, 6, 7, 5, 8, 9}), "abelian9/no-Q/caseA/a3+a5+a7=0"};
    }
    const auto t2 = others[0];
    if (popcount(t1 & t2) != 1) throw CaseGap{"|A|=9 caseB: |T1 n T2| != 1"};
    lab.assign({3}, t1 & t2)
        .assign({1, 2}, t1 & ~t2)
        .assign({4, 5}, t2 & ~t1)
        .assign({6, 7, 8, 9}, rest(t1 | t2));
    if (!zero(lab, {1, 8, 9}))
      return {make(lab, {1, 2, 4, 3, 6, 5, 7, 8, 9}), "abelian9/no-Q/caseB/a1+a8+a9!=0"};
    return {make(lab, {1, 2, 4, 3, 6, 5, 8, 7, 9}), "abelian9/no-Q/caseB/a1+a8+a9=0"};
  }

  std::pair<Ordering, std::string> nine_case1() {
    Labeling lab(9);
    const auto q1 = idx_.quads[0];
    if (idx_.triples.empty()) {
      lab.assign({1, 2, 3, 4}, q1).assign({5, 6, 7, 8, 9}, rest(q1));
      return {make(lab, {1, 2, 3, 5, 4, 6, 7, 8, 9}), "abelian9/case1.1"};
    }
    for (auto t1 : idx_.triples) {
      if (popcount(q1 & t1) != 1) continue;
      lab.assign({4}, q1 & t1).assign({1, 2, 3}, q1 & ~t1).assign({5, 6}, t1 & ~q1).assign({7, 8, 9}, rest(q1 | t1));
      if (zero(lab, {1, 2, 9})) return {make(lab, {1, 2, 5, 4, 7, 6, 8, 9, 3}), "abelian9/case1.2/sumT2=0"};
      if (zero(lab, {1, 8, 9})) return {make(lab, {1, 2, 3, 5, 4, 8, 6, 7, 9}), "abelian9/case1.2/sumT3=0"};
      if (!zero(lab, {2, 3, 5}))
        return {make(lab, {1, 2, 3, 5, 4, 7, 6, 8, 9}), "abelian9/case1.2/sumT2,T3!=0/a2+a3+a5!=0"};
      return {make(lab, {1, 2, 3, 6, 4, 7, 5, 8, 9}), "abelian9/case1.2/sumT2,T3!=0/a2+a3+a5=0"};
    }
    const auto t1 = idx_.triples[0];
    if (popcount(q1 & t1) != 2) throw CaseGap{"|A|=9 case1.3: |Q1 n T1| != 2"};
    lab.assign({3, 4}, q1 & t1).assign({1, 2}, q1 & ~t1).assign({5}, t1 & ~q1).assign({6, 7, 8, 9}, rest(q1 | t1));
    if (!zero(lab, {2, 4, 6})) return {make(lab, {1, 5, 3, 2, 4, 6, 7, 8, 9}), "abelian9/case1.3/a2+a4+a6!=0"};
    return {make(lab, {1, 5, 3, 2, 4, 7, 6, 8, 9}), "abelian9/case1.3/a2+a4+a6=0"};
  }

  std::pair<Ordering, std::string> nine_case2(PositionMask q1, PositionMask q2) {
    Labeling lab(9);
    lab.assign({3, 4}, q1 & q2).assign({1, 2}, q1 & ~q2).assign({5, 6}, q2 & ~q1).assign({7, 8, 9}, rest(q1 | q2));
    const std::string p = "abelian9/case2";
    if (zero(lab, {2, 4, 7})) return {make(lab, {1, 2, 3, 7, 4, 5, 6, 8, 9}), p + "/sumT1=0"};
    if (zero(lab, {3, 4, 7})) {
      const bool t3 = zero(lab, {1, 3, 5});
      const bool q4 = zero(lab, {4, 6, 7, 8});
      if (!t3 && !q4) return {make(lab, {1, 3, 5, 4, 7, 6, 8, 9, 2}), p + "/sumT2=0/sumT3!=0/sumQ4!=0"};
      if (!t3 && q4) return {make(lab, {1, 3, 5, 4, 7, 6, 9, 8, 2}), p + "/sumT2=0/sumT3!=0/sumQ4=0"};
      return {make(lab, {1, 2, 3, 5, 4, 7, 6, 8, 9}), p + "/sumT2=0/sumT3=0"};
    }
    if (zero(lab, {1, 6, 8, 9})) {
      if (!zero(lab, {1, 3, 7})) return {make(lab, {1, 3, 7, 4, 5, 6, 8, 9, 2}), p + "/sumQ3=0/a1+a3+a7!=0"};
      return {make(lab, {1, 4, 7, 3, 5, 6, 8, 9, 2}), p + "/sumQ3=0/a1+a3+a7=0"};
    }
    const bool t4 = zero(lab, {3, 5, 7});
    const bool t5 = zero(lab, {1, 6, 9});
    const std::string q = p + "/sumT1,T2,Q3!=0";
    if (!t4) return {make(lab, {1, 2, 4, 7, 3, 5, 6, 8, 9}), q + "/sumT4!=0"};
    if (!t5) return {make(lab, {1, 2, 7, 4, 3, 5, 8, 6, 9}), q + "/sumT4=0/sumT5!=0"};
    return {make(lab, {1, 2, 7, 4, 3, 5, 9, 6, 8}), q + "/sumT4=0/sumT5=0"};
  }

  std::pair<Ordering, std::string> nine_case3() {
    const auto q1 = idx_.quads[0];
    const auto q2 = idx_.quads[1];
    for (std::size_t i = 0; i < idx_.quads.size(); ++i)
      for (std::size_t j = i + 1; j < idx_.quads.size(); ++j)
        if (popcount(idx_.quads[i] & idx_.quads[j]) != 1) throw CaseGap{"|A|=9 case3: quads not pairwise 1-intersecting"};
    if (idx_.quads.size() > 3) throw CaseGap{"|A|=9 case3: more than three zero-sum quads"};
    Labeling lab(9);
    if (idx_.quads.size() == 2) {
      lab.assign({4}, q1 & q2).assign({1, 2, 3}, q1 & ~q2).assign({5, 6, 7}, q2 & ~q1).assign({8, 9}, rest(q1 | q2));
      const bool t1 = zero(lab, {4, 6, 8});
      const bool t2 = zero(lab, {3, 4, 5});
      const bool t3 = zero(lab, {2, 3, 5});
      const bool t4 = zero(lab, {1, 3, 5});
      const bool t5 = zero(lab, {1, 7, 9});
      const std::string p = "abelian9/case3/two-Q";
      if (t1) {
        if (t2 || t3) return {make(lab, {2, 1, 4, 6, 3, 5, 8, 7, 9}), p + "/sumT1=0/sumT2=0|sumT3=0"};
        const bool t6 = zero(lab, {1, 7, 8});
        const std::string q = p + "/sumT1=0/sumT2,T3!=0";
        if (t4) return {make(lab, {2, 1, 4, 5, 3, 7, 9, 6, 8}), q + "/sumT4=0"};
        if (t6) return {make(lab, {2, 1, 3, 5, 4, 6, 9, 7, 8}), q + "/sumT4!=0/sumT6=0"};
        return {make(lab, {1, 2, 3, 5, 4, 6, 9, 7, 8}), q + "/sumT6!=0"};
      }
      if (t2) {
        if (!t5) return {make(lab, {1, 3, 2, 5, 4, 6, 8, 7, 9}), p + "/sumT1!=0/sumT2=0/sumT5!=0"};
        return {make(lab, {2, 3, 1, 5, 4, 6, 8, 7, 9}), p + "/sumT1!=0/sumT2=0/sumT5=0"};
      }
      const bool t7 = zero(lab, {2, 7, 9});
      const std::string q = p + "/sumT1,T2!=0";
      if (t3 && t7) return {make(lab, {1, 2, 7, 3, 5, 4, 6, 8, 9}), q + "/sumT3=sumT7=0"};
      if ((t3 && !t7) || (t5 && !t4))
        return {make(lab, {2, 1, 3, 5, 4, 6, 8, 7, 9}), q + "/sumT3=0,sumT7!=0|sumT5=0,sumT4!=0"};
      if (t5 && t4) return {make(lab, {3, 2, 1, 5, 4, 6, 8, 7, 9}), q + "/sumT5=sumT4=0"};
      return {make(lab, {1, 2, 3, 5, 4, 6, 8, 7, 9}), q + "/sumT3,T5!=0"};
    }
    const auto q3 = idx_.quads[2];
    lab.assign({4}, q1 & q2)
        .assign({1}, q1 & q3)
        .assign({7}, q2 & q3)
        .assign({2, 3}, q1 & ~q2 & ~q3)
        .assign({5, 6}, q2 & ~q1 & ~q3)
        .assign({8, 9}, q3 & ~q1 & ~q2);
    const std::string p = "abelian9/case3/three-Q";
    std::string rot;
    if (zero(lab, {1, 3, 5})) {
      rot = "/sumT1=0";
    } else if (zero(lab, {4, 6, 8})) {
      lab = lab.rotated(3);
      rot = "/sumT2=0(rot3)";
    } else if (zero(lab, {2, 7, 9})) {
      lab = lab.rotated(6);
      rot = "/sumT3=0(rot6)";
    } else {
      return {make(lab, {2, 1, 3, 5, 4, 6, 8, 7, 9}), p + "/sumT1,T2,T3!=0"};
    }
    if (zero(lab, {2, 7, 9})) return {make(lab, {2, 1, 4, 5, 3, 7, 9, 6, 8}), p + rot + "/sumT3=0"};
    if (zero(lab, {4, 5, 8})) {
      if (!zero(lab, {3, 7, 8}))
        return {make(lab, {3, 1, 6, 5, 4, 2, 9, 7, 8}), p + rot + "/sumT4=0/a3+a7+a8!=0"};
      return {make(lab, {2, 1, 3, 6, 4, 5, 9, 7, 8}), p + rot + "/sumT4=0/a3+a7+a8=0"};
    }
    return {make(lab, {2, 1, 3, 6, 4, 5, 8, 7, 9}), p + rot + "/sumT3,T4!=0"};
  }

  const G& g_;
  std::vector<Elem> a_;
  int k_;
  PositionMask full_;
  ZeroSumSubsetIndex idx_;
};

// Sets of size <= 5 in an arbitrary group; sums are left-to-right.
template <FiniteGroup G>
class GeneralCases {
 public:
  GeneralCases(const G& g, std::span<const Elem> elems) : g_(g), a_(elems.begin(), elems.end()) {}

  std::pair<Ordering, std::string> run() {
    const auto k = a_.size();
    if (k <= 2) return {a_, "general5/|A|<=2"};
    // inverse pairs (x, -x), x < -x, sorted by x
    std::vector<std::pair<Elem, Elem>> pairs;
    std::vector<Elem> singles;
    for (auto x : a_) {
      const auto nx = g_.inverse(x);
      const bool paired = nx != x && std::find(a_.begin(), a_.end(), nx) != a_.end();
      if (!paired) singles.push_back(x);
      else if (x < nx) pairs.emplace_back(x, nx);
    }
    const auto p = pairs.size();
    const std::string tag = "general5/|A|=" + std::to_string(k) + "/p=" + std::to_string(p);
    if (k == 3) {
      if (p == 0) return {a_, tag};
      return {{pairs[0].first, singles[0], pairs[0].second}, tag};
    }
    if (k == 4) {
      if (p == 0) {
        if (sum({a_[1], a_[2], a_[3]}) != kIdentity) return {a_, tag + "/a2+a3+a4!=0"};
        return {{a_[1], a_[0], a_[2], a_[3]}, tag + "/a2+a3+a4=0"};
      }
      if (p == 1) {
        const auto [a1, m1] = pairs[0];
        return {{singles[0], a1, singles[1], m1}, tag};
      }
      return {{pairs[0].first, pairs[1].first, pairs[0].second, pairs[1].second}, tag};
    }
    if (p == 0) {
      std::array<Elem, 5> b{};
      std::copy(a_.begin(), a_.end(), b.begin());
      return five_p0(b, tag, 0);
    }
    if (p == 1) {
      const auto [a1, m1] = pairs[0];
      const Elem a3 = singles[0], a4 = singles[1], a5 = singles[2];
      if (sum({a1, a3, a4}) != kIdentity && sum({m1, a3, a4}) != kIdentity)
        return {{a5, a1, a3, a4, m1}, tag + "/+-a1+a3+a4!=0"};
      const bool plus = sum({a1, a3, a4}) == kIdentity;
      const Elem e = plus ? a1 : m1;
      const Elem me = plus ? m1 : a1;
      const std::string q = tag + (plus ? "/a1+a3+a4=0" : "/-a1+a3+a4=0");
      if (sum({a5, a4}) != e) return {{a3, e, a5, a4, me}, q + "/a5+a4!=e*a1"};
      return {{e, a5, a3, a4, me}, q + "/a5+a4=e*a1"};
    }
    const auto [a1, a2] = pairs[0];
    const auto [a3, a4] = pairs[1];
    const Elem a5 = singles[0];
    if (sum({a1, a3, a2, a4}) != kIdentity) return {{a5, a1, a3, a2, a4}, tag + "/a1+a3-a1-a3!=0"};
    if (sum({a3, a2, a5}) != kIdentity) return {{a4, a1, a3, a2, a5}, tag + "/a1+a3-a1-a3=0/a3-a1+a5!=0"};
    return {{a4, a2, a3, a1, a5}, tag + "/a1+a3-a1-a3=0/a3-a1+a5=0"};
  }

 private:
  Elem sum(std::initializer_list<Elem> xs) const {
    Elem s = kIdentity;
    for (auto x : xs) s = g_.op(s, x);
    return s;
  }

  // b[0..4] are a_1..a_5.
  std::pair<Ordering, std::string> five_p0(const std::array<Elem, 5>& b, const std::string& tag, int depth) {
    const Elem a1 = b[0], a2 = b[1], a3 = b[2], a4 = b[3], a5 = b[4];
    const bool s2345 = sum({a2, a3, a4, a5}) == kIdentity;
    const bool s345 = sum({a3, a4, a5}) == kIdentity;
    const bool s234 = sum({a2, a3, a4}) == kIdentity;
    if (!s2345 && !s345 && !s234) return {{a1, a2, a3, a4, a5}, tag + "/plain"};
    if (s2345) {
      if (sum({a1, a3, a4}) != kIdentity) return {{a2, a1, a3, a4, a5}, tag + "/a2+a3+a4+a5=0/a1+a3+a4!=0"};
      return star(b, tag + "/a2+a3+a4+a5=0/a1+a3+a4=0");
    }
    if (s345) {
      if (sum({a1, a3, a4, a2}) != kIdentity) return {{a5, a1, a3, a4, a2}, tag + "/a3+a4+a5=0"};
      return star({a5, a1, a3, a4, a2}, tag + "/a3+a4+a5=0/a1+a3+a4+a2=0");
    }
    if (depth > 0) throw CaseGap{"|A|=5 p=0: relabeling did not reach a terminal case"};
    return five_p0({a1, a5, a2, a3, a4}, tag + "/a2+a3+a4=0(relabel)", depth + 1);
  }

  std::pair<Ordering, std::string> star(const std::array<Elem, 5>& b, const std::string& tag) {
    const Elem a1 = b[0], a2 = b[1], a3 = b[2], a4 = b[3], a5 = b[4];
    if (sum({a3, a5, a4}) != kIdentity) return {{a2, a1, a3, a5, a4}, tag + "/a3+a5+a4!=0"};
    return {{a5, a3, a2, a4, a1}, tag + "/a3+a5+a4=0"};
  }

  const G& g_;
  std::vector<Elem> a_;
};

template <FiniteGroup G>
ConstructiveResult finish(const G& g, std::span<const Elem> elems, Ordering ordering, std::string branch,
                          std::string theorem, std::optional<std::string> gap) {
  ConstructiveResult r;
  if (!gap && !is_simple(g, ordering)) gap = "branch " + branch + " produced a non-simple ordering";
  if (!gap) {
    r.ordering = std::move(ordering);
    r.label = {std::move(theorem), std::move(branch)};
    return r;
  }
  std::clog << "psums: case gap in " << theorem << " on " << g.name() << " {";
  for (std::size_t i = 0; i < elems.size(); ++i) std::clog << (i ? "," : "") << g.label(elems[i]);
  std::clog << "}: " << *gap << "; falling back to exhaustive search\n";
  auto found = find_simple_ordering(g, elems, false);
  if (!found) throw std::logic_error("no simple ordering exists for a set covered by " + theorem);
  r.ordering = std::move(*found);
  r.label = {"search", theorem + "/fallback"};
  r.fallback = true;
  r.gap_detail = std::move(*gap);
  return r;
}

inline std::vector<Elem> sorted_copy(std::span<const Elem> elems) {
  std::vector<Elem> v(elems.begin(), elems.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace detail

/// Simple ordering of a zero-sum set A (|A| <= 9, 0 not in A, no inverse
/// pair) in an abelian group, built from the case analysis for |A| <= 8 and
/// |A| = 9.
template <FiniteGroup G>
ConstructiveResult order_small_abelian(const G& g, std::span<const Elem> set) {
  const auto elems = detail::sorted_copy(set);
  if (!g.is_abelian()) throw HypothesisError("order_small_abelian: ambient group must be abelian");
  if (elems.size() > 9) throw HypothesisError("order_small_abelian: |A| must be at most 9");
  validate_ordering(g, elems);
  if (contains_inverse_pair(g, std::span<const Elem>(elems)))
    throw HypothesisError("order_small_abelian: A contains an inverse pair");
  if (sum_of(g, std::span<const Elem>(elems)) != kIdentity)
    throw HypothesisError("order_small_abelian: A does not sum to zero");
  detail::AbelianCases<G> cases(g, elems);
  const std::string theorem = elems.size() == 9 ? "abelian9" : "abelian8";
  try {
    auto [o, branch] = cases.run();
    return detail::finish(g, std::span<const Elem>(elems), std::move(o), std::move(branch), theorem, std::nullopt);
  } catch (const detail::CaseGap& gap) {
    return detail::finish(g, std::span<const Elem>(elems), {}, {}, theorem, gap.what);
  }
}

template <FiniteGroup G>
ConstructiveResult order_small_abelian(const G& g, const SubsetCandidate& a) {
  return order_small_abelian(g, std::span<const Elem>(a.elements));
}

/// Simple ordering of any set of at most 5 non-identity elements in any
/// group (inverse pairs allowed).
template <FiniteGroup G>
ConstructiveResult order_small_general(const G& g, std::span<const Elem> set) {
  const auto elems = detail::sorted_copy(set);
  if (elems.size() > 5) throw HypothesisError("order_small_general: |A| must be at most 5");
  validate_ordering(g, elems);
  detail::GeneralCases<G> cases(g, elems);
  try {
    auto [o, branch] = cases.run();
    return detail::finish(g, std::span<const Elem>(elems), std::move(o), std::move(branch), "general5", std::nullopt);
  } catch (const detail::CaseGap& gap) {
    return detail::finish(g, std::span<const Elem>(elems), {}, {}, "general5", gap.what);
  }
}

template <FiniteGroup G>
ConstructiveResult order_small_general(const G& g, const SubsetCandidate& a) {
  return order_small_general(g, std::span<const Elem>(a.elements));
}

}  // namespace psums
