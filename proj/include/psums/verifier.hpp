#pragma once

// Batch checks of the simple-ordering conjectures over families of small
// groups: subset cursors, per-subset strategy, parallel chunked runs,
// resumable JSON checkpoints and reports.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "psums/constructive.hpp"
#include "psums/group.hpp"
#include "psums/ordering.hpp"

namespace psums {

enum class Conjecture { kAlspach, kAdms, kZeroSum };

inline const char* to_string(Conjecture c) {
  switch (c) {
    case Conjecture::kAlspach: return "alspach";
    case Conjecture::kAdms: return "adms";
    case Conjecture::kZeroSum: return "zero_sum";
  }
  return "?";
}

inline Conjecture parse_conjecture(const std::string& s) {
  if (s == "alspach") return Conjecture::kAlspach;
  if (s == "adms") return Conjecture::kAdms;
  if (s == "zero_sum" || s == "zero-sum") return Conjecture::kZeroSum;
  throw std::invalid_argument("unknown conjecture '" + s + "' (alspach, adms, zero-sum)");
}

inline constexpr std::uint32_t kMaxVerifyOrder = 64;

struct GroupFamily {
  enum class Kind { kAbelianUpTo, kCyclicUpTo, kCayleyList };
  Kind kind = Kind::kCyclicUpTo;
  std::uint32_t n = 0;
  std::vector<CayleyGroup> groups;  // kCayleyList only

  static GroupFamily abelian_up_to(std::uint32_t n) { return {Kind::kAbelianUpTo, n, {}}; }
  static GroupFamily cyclic_up_to(std::uint32_t n) { return {Kind::kCyclicUpTo, n, {}}; }
  static GroupFamily cayley_list(std::vector<CayleyGroup> gs) { return {Kind::kCayleyList, 0, std::move(gs)}; }

  std::string describe() const {
    switch (kind) {
      case Kind::kAbelianUpTo: return "abelian_up_to(" + std::to_string(n) + ")";
      case Kind::kCyclicUpTo: return "cyclic_up_to(" + std::to_string(n) + ")";
      case Kind::kCayleyList: {
        std::string s = "cayley_list(";
        for (std::size_t i = 0; i < groups.size(); ++i) s += (i ? "," : "") + groups[i].name();
        return s + ")";
      }
    }
    return "?";
  }
};

struct VerificationJob {
  Conjecture conjecture = Conjecture::kZeroSum;
  GroupFamily family;
  std::optional<std::uint32_t> subset_size_limit;
  bool store_witnesses = false;
};

/// Materializes the family as tables, in report order.
inline std::vector<CayleyGroup> family_groups(const GroupFamily& f) {
  std::vector<CayleyGroup> out;
  auto check = [](std::uint64_t n) {
    if (n > kMaxVerifyOrder)
      throw GroupError("verification is limited to groups of order <= " + std::to_string(kMaxVerifyOrder));
  };
  switch (f.kind) {
    case GroupFamily::Kind::kCyclicUpTo:
      check(f.n);
      for (std::uint32_t v = 1; v <= f.n; ++v) {
        auto g = CayleyGroup::from_group(AbelianGroup::cyclic(v));
        out.push_back(std::move(g));
      }
      break;
    case GroupFamily::Kind::kAbelianUpTo:
      check(f.n);
      for (std::uint32_t v = 1; v <= f.n; ++v)
        for (const auto& spec : enumerate_abelian_groups(v)) out.push_back(CayleyGroup::from_group(AbelianGroup(spec)));
      break;
    case GroupFamily::Kind::kCayleyList:
      for (const auto& g : f.groups) {
        check(g.order());
        out.push_back(g);
      }
      break;
  }
  return out;
}

// ---------------------------------------------------------------- filters

/// Set of all products x_{s(1)} ... x_{s(k)} over orderings s, as a bitmask
/// over element indices (order <= 64).
template <FiniteGroup G>
std::uint64_t all_ordering_products(const G& g, std::span<const Elem> elems) {
  if (g.order() > 64) throw std::invalid_argument("all_ordering_products: order > 64");
  const auto k = elems.size();
  if (k > 24) throw std::invalid_argument("all_ordering_products: too many elements");
  std::vector<std::uint64_t> reach(std::size_t{1} << k, 0);
  reach[0] = std::uint64_t{1} << kIdentity;
  for (std::size_t m = 1; m < reach.size(); ++m) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(m >> i & 1)) continue;
      for (auto prev = reach[m ^ (std::size_t{1} << i)]; prev; prev &= prev - 1)
        r |= std::uint64_t{1} << g.op(static_cast<Elem>(std::countr_zero(prev)), elems[i]);
    }
    reach[m] = r;
  }
  return reach.back();
}

/// Exact hypothesis test for each conjecture. Alspach: no ordering of A sums
/// to the identity (for abelian groups, sum(A) != 0). ADMS: any nonempty set
/// of non-identity elements. Zero-sum: abelian, sum(A) = 0, no {x,-x}.
template <FiniteGroup G>
bool admits(Conjecture c, const G& g, std::span<const Elem> elems) {
  if (elems.empty()) return false;
  for (auto a : elems)
    if (a == kIdentity || a >= g.order()) return false;
  switch (c) {
    case Conjecture::kAdms: return true;
    case Conjecture::kZeroSum:
      return g.is_abelian() && sum_of(g, elems) == kIdentity && !contains_inverse_pair(g, elems);
    case Conjecture::kAlspach:
      if (g.is_abelian()) return sum_of(g, elems) != kIdentity;
      return !(all_ordering_products(g, elems) & 1);
  }
  return false;
}

// ---------------------------------------------------------------- cursors

/// Maps an integer cursor to a subset. For adms/alspach the cursor is the
/// characteristic vector over non-identity elements (bit i is element i+1).
/// For zero_sum it is a mixed-radix number with one digit per involution
/// (none / x) and one per inverse pair (none / x / -x); slot 0 is the least
/// significant digit. Cursor 0 is the empty set and is never visited.
class SubsetCursor {
 public:
  template <FiniteGroup G>
  SubsetCursor(Conjecture c, const G& g) : zero_sum_(c == Conjecture::kZeroSum) {
    const auto n = g.order();
    if (!zero_sum_) {
      for (Elem x = 1; x < n; ++x) slots_.push_back({x, x});
    } else {
      for (Elem x = 1; x < n; ++x) {
        const auto y = g.inverse(x);
        if (y < x) continue;
        slots_.push_back({x, y});
      }
    }
    end_ = 1;
    for (const auto& s : slots_) {
      const std::uint64_t base = s.a == s.b ? 2 : 3;
      if (end_ > ~std::uint64_t{0} / base) throw GroupError("subset space too large to enumerate");
      end_ *= base;
    }
  }

  /// One past the last cursor.
  std::uint64_t end() const { return end_; }

  std::vector<Elem> decode(std::uint64_t cursor) const {
    std::vector<Elem> out;
    for (const auto& s : slots_) {
      const std::uint64_t base = s.a == s.b ? 2 : 3;
      const auto d = cursor % base;
      cursor /= base;
      if (d == 1) out.push_back(s.a);
      else if (d == 2) out.push_back(s.b);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Slot {
    Elem a, b;
  };
  bool zero_sum_;
  std::vector<Slot> slots_;
  std::uint64_t end_ = 1;
};

// ---------------------------------------------------------------- one subset

struct SubsetOutcome {
  bool found = false;
  Ordering ordering;
  CaseLabel strategy;
  bool constructive = false;  // answered by a case construction
  bool fallback = false;      // case construction gap answered by search
  std::uint64_t nodes = 0;
};

/// Orders one admitted subset, verifying any witness before returning it.
template <FiniteGroup G>
SubsetOutcome check_subset(Conjecture c, const G& g, std::span<const Elem> elems) {
  if (!admits(c, g, elems)) throw HypothesisError(std::string("subset does not meet the ") + to_string(c) + " hypotheses");
  SubsetOutcome out;
  std::optional<ConstructiveResult> cr;
  if (c == Conjecture::kZeroSum && g.is_abelian() && elems.size() <= 9) cr = order_small_abelian(g, elems);
  else if (c == Conjecture::kAdms && elems.size() <= 5) cr = order_small_general(g, elems);
  if (cr) {
    out.found = true;
    out.ordering = std::move(cr->ordering);
    out.strategy = std::move(cr->label);
    out.fallback = cr->fallback;
    out.constructive = !cr->fallback;
  } else {
    const bool zero_free = c == Conjecture::kAlspach;
    SearchStats stats;
    auto found = find_simple_ordering(g, elems, zero_free, &stats);
    out.nodes = stats.nodes;
    out.strategy = {"search", zero_free ? "search/dfs-zero-free" : "search/dfs"};
    if (found) {
      out.found = true;
      out.ordering = std::move(*found);
    }
  }
  if (out.found) {
    const bool ok = c == Conjecture::kAlspach ? is_zero_free_simple(g, out.ordering) : is_simple(g, out.ordering);
    std::vector<Elem> a(out.ordering), b(elems.begin(), elems.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (!ok || a != b) throw std::logic_error("check_subset: witness failed re-validation");
  }
  return out;
}

// ---------------------------------------------------------------- reports

struct Counterexample {
  std::vector<Elem> subset;
  std::vector<std::string> labels;
  std::uint64_t cursor = 0;
  std::string search_space;  // k!
  std::uint64_t nodes = 0;
};

struct GroupReport {
  std::string group;
  std::uint64_t order = 0;
  bool abelian = true;
  std::uint64_t cursor = 1;  // next cursor to visit
  std::uint64_t cursor_end = 1;
  std::uint64_t examined = 0;
  std::uint64_t witnesses = 0;
  std::uint64_t constructive = 0;
  std::uint64_t brute_force = 0;
  std::uint64_t fallbacks = 0;
  std::vector<Counterexample> counterexamples;
  double seconds = 0;

  bool complete() const { return cursor >= cursor_end; }
};

struct VerificationReport {
  std::string conjecture;
  std::string family;
  std::string job_hash;
  std::optional<std::uint32_t> subset_size_limit;
  std::vector<GroupReport> groups;
  bool complete = false;
  double seconds = 0;

  std::uint64_t total_counterexamples() const {
    std::uint64_t n = 0;
    for (const auto& g : groups) n += g.counterexamples.size();
    return n;
  }
};

using nlohmann::json;

inline json to_json(const Counterexample& c) {
  return json{{"subset", c.labels},
              {"elements", c.subset},
              {"cursor", c.cursor},
              {"size", c.subset.size()},
              {"search_space", c.search_space},
              {"nodes", c.nodes}};
}

inline Counterexample counterexample_from_json(const json& j) {
  Counterexample c;
  c.labels = j.at("subset").get<std::vector<std::string>>();
  c.subset = j.at("elements").get<std::vector<Elem>>();
  c.cursor = j.at("cursor").get<std::uint64_t>();
  c.search_space = j.at("search_space").get<std::string>();
  c.nodes = j.at("nodes").get<std::uint64_t>();
  return c;
}

/// Timing stays out of this block so reruns are byte-identical.
inline json to_json(const GroupReport& g) {
  json ces = json::array();
  for (const auto& c : g.counterexamples) ces.push_back(to_json(c));
  return json{{"group", g.group},
              {"order", g.order},
              {"abelian", g.abelian},
              {"cursor", g.cursor},
              {"cursor_end", g.cursor_end},
              {"complete", g.complete()},
              {"examined", g.examined},
              {"witnesses", g.witnesses},
              {"constructive", g.constructive},
              {"brute_force", g.brute_force},
              {"fallbacks", g.fallbacks},
              {"counterexamples", ces}};
}

inline GroupReport group_report_from_json(const json& j) {
  GroupReport g;
  g.group = j.at("group").get<std::string>();
  g.order = j.at("order").get<std::uint64_t>();
  g.abelian = j.at("abelian").get<bool>();
  g.cursor = j.at("cursor").get<std::uint64_t>();
  g.cursor_end = j.at("cursor_end").get<std::uint64_t>();
  g.examined = j.at("examined").get<std::uint64_t>();
  g.witnesses = j.at("witnesses").get<std::uint64_t>();
  g.constructive = j.at("constructive").get<std::uint64_t>();
  g.brute_force = j.at("brute_force").get<std::uint64_t>();
  g.fallbacks = j.at("fallbacks").get<std::uint64_t>();
  for (const auto& c : j.at("counterexamples")) g.counterexamples.push_back(counterexample_from_json(c));
  return g;
}

inline json to_json(const VerificationReport& r, bool with_timing = true) {
  json groups = json::array();
  std::uint64_t examined = 0, witnesses = 0, ces = 0;
  for (const auto& g : r.groups) {
    groups.push_back(to_json(g));
    examined += g.examined;
    witnesses += g.witnesses;
    ces += g.counterexamples.size();
  }
  json j{{"conjecture", r.conjecture},
         {"family", r.family},
         {"job_hash", r.job_hash},
         {"subset_size_limit", r.subset_size_limit ? json(*r.subset_size_limit) : json(nullptr)},
         {"complete", r.complete},
         {"groups", groups},
         {"totals", {{"examined", examined}, {"witnesses", witnesses}, {"counterexamples", ces}}}};
  if (with_timing) {
    json t = json::array();
    for (const auto& g : r.groups) t.push_back({{"group", g.group}, {"seconds", g.seconds}});
    j["timing"] = {{"groups", t}, {"total_seconds", r.seconds}};
  }
  return j;
}

// ---------------------------------------------------------------- job hash

inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 14695981039346656037ull) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

/// Identifies a job: conjecture, family, size cap, mode and every group
/// table in order.
inline std::string job_hash(const VerificationJob& job, const std::vector<CayleyGroup>& groups) {
  std::string key = std::string("psums-job-v1|") + to_string(job.conjecture) + "|" + job.family.describe() + "|" +
                    (job.subset_size_limit ? std::to_string(*job.subset_size_limit) : "none") + "|" +
                    (job.store_witnesses ? "store" : "exists");
  std::uint64_t h = fnv1a(key);
  for (const auto& g : groups) {
    std::string t = "|" + g.name() + ":" + std::to_string(g.order()) + ":";
    for (Elem x = 0; x < g.order(); ++x)
      for (Elem y = 0; y < g.order(); ++y) t += std::to_string(g.op(x, y)) + ",";
    h = fnv1a(t, h);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------- checkpoint

class CheckpointError : public std::runtime_error {
 public:
  CheckpointError(const std::string& what, std::size_t offset) : std::runtime_error(what), offset(offset) {}
  std::size_t offset;
};

struct Checkpoint {
  std::string job_hash;
  std::vector<GroupReport> groups;  // completed groups, then the current one
  std::uint64_t witness_offset = 0;
};

inline json to_json(const Checkpoint& c) {
  json gs = json::array();
  for (const auto& g : c.groups) gs.push_back(to_json(g));
  return json{{"format", "psums-checkpoint"}, {"version", 1}, {"job_hash", c.job_hash},
              {"witness_offset", c.witness_offset}, {"groups", gs}};
}

/// Parse errors report the byte offset where reading failed.
inline Checkpoint read_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError("cannot open checkpoint " + path, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CheckpointError("corrupt checkpoint " + path + " at byte " + std::to_string(e.byte) + ": " + e.what(),
                          e.byte);
  }
  try {
    if (j.at("format") != "psums-checkpoint" || j.at("version") != 1)
      throw CheckpointError("checkpoint " + path + " has an unknown format", 0);
    Checkpoint c;
    c.job_hash = j.at("job_hash").get<std::string>();
    c.witness_offset = j.at("witness_offset").get<std::uint64_t>();
    for (const auto& g : j.at("groups")) c.groups.push_back(group_report_from_json(g));
    return c;
  } catch (const json::exception& e) {
    throw CheckpointError("corrupt checkpoint " + path + ": " + e.what(), text.size());
  }
}

/// Writes to a temporary file and renames it over the target.
inline void write_checkpoint(const std::string& path, const Checkpoint& c) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
    out << to_json(c).dump(1) << "\n";
    if (!out.flush()) throw std::runtime_error("cannot write checkpoint " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

// ---------------------------------------------------------------- driver

struct RunOptions {
  unsigned workers = 1;
  std::optional<double> budget_seconds;
  std::string checkpoint_path;  // empty: no checkpoint
  std::string witness_path;     // used when the job stores witnesses
  std::uint64_t chunk = 2048;   // cursors per work unit
};

namespace detail {

struct ChunkResult {
  std::uint64_t examined = 0, witnesses = 0, constructive = 0, brute_force = 0, fallbacks = 0;
  std::vector<Counterexample> counterexamples;
  std::string witness_lines;
};

inline ChunkResult run_chunk(const VerificationJob& job, const CayleyGroup& g, const SubsetCursor& cur,
                             std::uint64_t lo, std::uint64_t hi) {
  ChunkResult r;
  for (std::uint64_t c = lo; c < hi; ++c) {
    const auto a = cur.decode(c);
    if (job.subset_size_limit && a.size() > *job.subset_size_limit) continue;
    if (!admits(job.conjecture, g, std::span<const Elem>(a))) continue;
    ++r.examined;
    const auto o = check_subset(job.conjecture, g, std::span<const Elem>(a));
    if (o.found) {
      ++r.witnesses;
      if (o.constructive) ++r.constructive;
      else ++r.brute_force;
      if (o.fallback) ++r.fallbacks;
      if (job.store_witnesses) {
        r.witness_lines += g.name() + " " + std::to_string(c);
        for (auto x : o.ordering) r.witness_lines += " " + g.label(x);
        r.witness_lines += "\n";
      }
    } else {
      Counterexample ce;
      ce.subset = a;
      for (auto x : a) ce.labels.push_back(g.label(x));
      ce.cursor = c;
      ce.search_space = factorial_string(a.size());
      ce.nodes = o.nodes;
      r.counterexamples.push_back(std::move(ce));
    }
  }
  return r;
}

}  // namespace detail

/// Visits every admitted subset of every group of the family in cursor
/// order. Work is split into chunks processed by `workers` threads and merged
/// in cursor order, so the report does not depend on scheduling. Stops
/// early (complete = false) once the budget is spent; a checkpoint lets a
/// later run resume.
inline VerificationReport run_verification(const VerificationJob& job, const RunOptions& opt = {}) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  if (job.conjecture == Conjecture::kZeroSum && job.family.kind == GroupFamily::Kind::kCayleyList)
    for (const auto& g : job.family.groups)
      if (!g.is_abelian()) throw GroupError("zero_sum verification needs abelian groups; " + g.name() + " is not");
  const auto groups = family_groups(job.family);

  VerificationReport rep;
  rep.conjecture = to_string(job.conjecture);
  rep.family = job.family.describe();
  rep.job_hash = job_hash(job, groups);
  rep.subset_size_limit = job.subset_size_limit;

  Checkpoint ck;
  ck.job_hash = rep.job_hash;
  const bool checkpointing = !opt.checkpoint_path.empty();
  if (checkpointing && std::filesystem::exists(opt.checkpoint_path)) {
    ck = read_checkpoint(opt.checkpoint_path);
    if (ck.job_hash != rep.job_hash)
      throw CheckpointError("checkpoint belongs to job " + ck.job_hash + ", not " + rep.job_hash, 0);
    if (ck.groups.size() > groups.size()) throw CheckpointError("checkpoint lists more groups than the job", 0);
  }

  std::ofstream witness_out;
  if (job.store_witnesses) {
    if (opt.witness_path.empty()) throw std::invalid_argument("store_witnesses needs a witness path");
    if (ck.witness_offset > 0 && std::filesystem::exists(opt.witness_path))
      std::filesystem::resize_file(opt.witness_path, ck.witness_offset);
    else
      std::ofstream(opt.witness_path, std::ios::trunc);
    witness_out.open(opt.witness_path, std::ios::app | std::ios::binary);
  }

  const unsigned workers = std::max(1u, opt.workers);
  const std::uint64_t chunk = std::max<std::uint64_t>(1, opt.chunk);
  bool out_of_time = false;

  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const auto& g = groups[gi];
    const SubsetCursor cur(job.conjecture, g);
    GroupReport gr;
    if (gi < ck.groups.size()) {
      gr = ck.groups[gi];
      if (gr.group != g.name()) throw CheckpointError("checkpoint group mismatch at " + g.name(), 0);
    } else {
      gr.group = g.name();
      gr.order = g.order();
      gr.abelian = g.is_abelian();
      gr.cursor = 1;
      gr.cursor_end = cur.end();
    }
    const auto tg = clock::now();
    while (!gr.complete() && !out_of_time) {
      const std::uint64_t wave_lo = gr.cursor;
      const std::uint64_t span = chunk * workers * 4;
      const std::uint64_t wave_hi = gr.cursor_end - wave_lo > span ? wave_lo + span : gr.cursor_end;
      const auto nchunks = static_cast<std::size_t>((wave_hi - wave_lo + chunk - 1) / chunk);
      std::vector<detail::ChunkResult> results(nchunks);
      std::atomic<std::size_t> next{0};
      std::exception_ptr err;
      std::mutex err_mu;
      auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < nchunks;) {
          try {
            const auto lo = wave_lo + i * chunk;
            results[i] = detail::run_chunk(job, g, cur, lo, std::min(lo + chunk, wave_hi));
          } catch (...) {
            std::lock_guard lock(err_mu);
            if (!err) err = std::current_exception();
          }
        }
      };
      if (workers == 1 || nchunks == 1) {
        work();
      } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < std::min<std::size_t>(workers, nchunks); ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
      }
      if (err) std::rethrow_exception(err);
      for (auto& r : results) {
        gr.examined += r.examined;
        gr.witnesses += r.witnesses;
        gr.constructive += r.constructive;
        gr.brute_force += r.brute_force;
        gr.fallbacks += r.fallbacks;
        for (auto& c : r.counterexamples) gr.counterexamples.push_back(std::move(c));
        if (job.store_witnesses) witness_out << r.witness_lines;
      }
      gr.cursor = wave_hi;
      if (checkpointing) {
        if (job.store_witnesses) {
          witness_out.flush();
          ck.witness_offset = static_cast<std::uint64_t>(std::filesystem::file_size(opt.witness_path));
        }
        ck.groups.resize(gi);
        ck.groups.push_back(gr);
        write_checkpoint(opt.checkpoint_path, ck);
      }
      if (opt.budget_seconds && std::chrono::duration<double>(clock::now() - t0).count() >= *opt.budget_seconds)
        out_of_time = true;
    }
    gr.seconds = std::chrono::duration<double>(clock::now() - tg).count();
    if (gr.examined != gr.witnesses + gr.counterexamples.size())
      throw std::logic_error("verification tallies do not add up for " + gr.group);
    // groups with nothing to visit never reach the in-loop write
    if (checkpointing && ck.groups.size() <= gi) {
      ck.groups.push_back(gr);
      write_checkpoint(opt.checkpoint_path, ck);
    }
    rep.groups.push_back(std::move(gr));
    if (out_of_time) break;
  }
  rep.complete = !out_of_time && rep.groups.size() == groups.size() &&
                 std::all_of(rep.groups.begin(), rep.groups.end(), [](const GroupReport& g) { return g.complete(); });
  rep.seconds = std::chrono::duration<double>(clock::now() - t0).count();
  return rep;
}

}  // namespace psums
