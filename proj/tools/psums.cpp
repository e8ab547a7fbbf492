// psums: command-line front end.
//
// Exit codes: 0 witness / success, 2 exhausted search found nothing (or a
// counterexample / violation was certified), 1 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "psums/constructive.hpp"
#include "psums/edge_lengths.hpp"
#include "psums/group.hpp"
#include "psums/heffter.hpp"
#include "psums/ordering.hpp"
#include "psums/verifier.hpp"

using nlohmann::json;
using namespace psums;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kNotFound = 2;

struct Globals {
  std::string format = "text";
  unsigned workers = 0;
  double budget = 0;
};

void emit(const Globals& g, const json& doc, const std::string& text) {
  if (g.format == "json") std::cout << doc.dump(2) << "\n";
  else std::cout << text;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

template <FiniteGroup G>
std::vector<std::string> labels(const G& g, const std::vector<Elem>& xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(g.label(x));
  return out;
}

// Splits on commas that are not inside parentheses.
std::vector<std::string> split_elements(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<std::int64_t> parse_ints(const std::string& s) {
  std::vector<std::int64_t> out;
  for (const auto& tok : split_elements(s)) {
    std::size_t used = 0;
    out.push_back(std::stoll(tok, &used));
    if (used != tok.size()) throw std::invalid_argument("'" + tok + "' is not an integer");
  }
  return out;
}

Elem parse_element(const AbelianGroup& g, const std::string& tok) {
  std::string body = tok;
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw std::invalid_argument("unbalanced element '" + tok + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<std::int64_t> coords;
  try {
    coords = parse_ints(body);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse element '" + tok + "' of " + g.name());
  }
  if (coords.size() != g.moduli().size())
    throw std::invalid_argument("element '" + tok + "' needs " + std::to_string(g.moduli().size()) + " coordinates");
  return g.index(coords);
}

Elem parse_element(const CayleyGroup& g, const std::string& tok) {
  for (Elem x = 0; x < g.order(); ++x)
    if (g.label(x) == tok) return x;
  std::size_t used = 0;
  long long v = -1;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || v < 0 || static_cast<std::size_t>(v) >= g.order())
    throw std::invalid_argument("'" + tok + "' is not an element of " + g.name());
  return static_cast<Elem>(v);
}

template <FiniteGroup G>
std::vector<Elem> parse_set(const G& g, const std::string& spec) {
  std::vector<Elem> out;
  if (spec == "all-nonidentity") {
    for (Elem x = 1; x < g.order(); ++x) out.push_back(x);
    return out;
  }
  for (const auto& tok : split_elements(spec)) out.push_back(parse_element(g, tok));
  return out;
}

CayleyGroup load_cayley(const std::string& spec) {
  if (std::filesystem::exists(spec)) {
    std::ifstream in(spec);
    return load_cayley_table(in, std::filesystem::path(spec).stem().string());
  }
  return builtin_group_by_name(spec);
}

bool is_abelian_spec(const std::string& s) { return std::regex_match(s, std::regex(R"(Z\d+(xZ\d+)*)")); }

AbelianGroup parse_abelian(const std::string& s) {
  std::vector<std::uint32_t> moduli;
  const std::regex re(R"(Z(\d+))");
  for (auto it = std::sregex_iterator(s.begin(), s.end(), re); it != std::sregex_iterator(); ++it)
    moduli.push_back(static_cast<std::uint32_t>(std::stoul((*it)[1])));
  if (moduli.size() == 1 && moduli[0] == 1) moduli.clear();
  return AbelianGroup(moduli);
}

// ------------------------------------------------------------------ order

struct OrderArgs {
  std::string group, cayley, set;
  bool zero_free = false, constructive_only = false;
};

template <FiniteGroup G>
int run_order(const Globals& gl, const G& g, const OrderArgs& a) {
  const auto elems = parse_set(g, a.set);
  validate_ordering(g, elems);
  if (elems.empty()) throw std::invalid_argument("the set is empty");
  std::optional<Ordering> found;
  std::string theorem, branch;
  std::uint64_t nodes = 0;
  const bool abelian_ok = g.is_abelian() && elems.size() <= 9 && sum_of(g, elems) == kIdentity &&
                          !contains_inverse_pair(g, elems);
  std::optional<ConstructiveResult> cr;
  if (!a.zero_free || a.constructive_only) {
    if (abelian_ok) cr = order_small_abelian(g, elems);
    else if (elems.size() <= 5) cr = order_small_general(g, elems);
  }
  if (cr && a.zero_free && !is_zero_free_simple(g, cr->ordering)) cr.reset();
  if (cr) {
    found = cr->ordering;
    theorem = cr->label.theorem;
    branch = cr->label.branch;
  } else if (a.constructive_only) {
    throw std::invalid_argument("no case construction applies to this set");
  } else {
    SearchStats st;
    found = find_simple_ordering(g, elems, a.zero_free, &st);
    nodes = st.nodes;
    theorem = "search";
    branch = a.zero_free ? "search/dfs-zero-free" : "search/dfs";
  }
  json doc{{"command", "order"}, {"group", g.name()}, {"set", labels(g, elems)}, {"zero_free", a.zero_free}};
  std::ostringstream text;
  text << "group " << g.name() << "\nset {" << join(labels(g, elems)) << "}\n";
  if (!found) {
    doc["result"] = "not_found";
    doc["certificate"] = {{"search_space", factorial_string(elems.size())}, {"nodes", nodes}};
    text << "NotFound: no " << (a.zero_free ? "zero-free " : "") << "simple ordering; exhausted "
         << factorial_string(elems.size()) << " orderings (" << nodes << " search nodes)\n";
    emit(gl, doc, text.str());
    return kNotFound;
  }
  const bool ok = a.zero_free ? is_zero_free_simple(g, *found) : is_simple(g, *found);
  if (!ok) throw std::logic_error("internal error: ordering failed re-validation");
  const auto trace = partial_sums(g, *found);
  doc["result"] = "found";
  doc["ordering"] = labels(g, *found);
  doc["partial_sums"] = labels(g, trace);
  doc["strategy"] = {{"theorem", theorem}, {"branch", branch}};
  text << "ordering (" << join(labels(g, *found)) << ")\n"
       << "partial sums (" << join(labels(g, trace)) << ")\n"
       << "strategy " << branch << "\n";
  emit(gl, doc, text.str());
  return kOk;
}

int cmd_order(const Globals& gl, const OrderArgs& a) {
  if (a.group.empty() == a.cayley.empty()) throw std::invalid_argument("give exactly one of --group or --cayley");
  if (!a.group.empty() && is_abelian_spec(a.group)) return run_order(gl, parse_abelian(a.group), a);
  return run_order(gl, load_cayley(a.group.empty() ? a.cayley : a.group), a);
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string conjecture;
  std::uint32_t abelian_up_to = 0, cyclic_up_to = 0, limit_order = 0, max_size = 0;
  std::vector<std::string> cayley;
  std::string checkpoint, witnesses;
};

std::string render_report(const VerificationReport& r) {
  std::ostringstream o;
  o << "conjecture " << r.conjecture << " over " << r.family << "  job " << r.job_hash << "\n";
  for (const auto& g : r.groups) {
    o << "  " << g.group << " (order " << g.order << "): examined " << g.examined << ", witnesses " << g.witnesses
      << " (constructive " << g.constructive << ", search " << g.brute_force << ")";
    if (g.fallbacks) o << ", case gaps " << g.fallbacks;
    o << ", counterexamples " << g.counterexamples.size();
    if (!g.complete()) o << "  [stopped at cursor " << g.cursor << " of " << g.cursor_end << "]";
    o << "\n";
    for (const auto& c : g.counterexamples)
      o << "    counterexample {" << join(c.labels) << "}: no ordering among " << c.search_space
        << " (" << c.nodes << " search nodes)\n";
  }
  o << "total counterexamples " << r.total_counterexamples() << (r.complete ? "" : "  (incomplete: budget spent)")
    << "\n";
  return o.str();
}

int cmd_verify(const Globals& gl, const VerifyArgs& a) {
  VerificationJob job;
  job.conjecture = parse_conjecture(a.conjecture);
  const int families = (a.abelian_up_to > 0) + (a.cyclic_up_to > 0) + (!a.cayley.empty());
  if (families != 1) throw std::invalid_argument("give exactly one of --abelian-up-to, --cyclic-up-to, --cayley");
  if (a.abelian_up_to) {
    job.family = GroupFamily::abelian_up_to(a.limit_order ? std::min(a.abelian_up_to, a.limit_order) : a.abelian_up_to);
  } else if (a.cyclic_up_to) {
    job.family = GroupFamily::cyclic_up_to(a.limit_order ? std::min(a.cyclic_up_to, a.limit_order) : a.cyclic_up_to);
  } else {
    std::vector<CayleyGroup> gs;
    for (const auto& c : a.cayley) {
      auto g = load_cayley(c);
      if (!a.limit_order || g.order() <= a.limit_order) gs.push_back(std::move(g));
    }
    job.family = GroupFamily::cayley_list(std::move(gs));
  }
  if (a.max_size) job.subset_size_limit = a.max_size;
  job.store_witnesses = !a.witnesses.empty();
  RunOptions opt;
  opt.workers = gl.workers ? gl.workers : std::max(1u, std::thread::hardware_concurrency());
  if (gl.budget > 0) opt.budget_seconds = gl.budget;
  opt.checkpoint_path = a.checkpoint;
  opt.witness_path = a.witnesses;
  const auto rep = run_verification(job, opt);
  json doc = to_json(rep);
  doc["command"] = "verify";
  emit(gl, doc, render_report(rep));
  return rep.total_counterexamples() ? kNotFound : kOk;
}

// ------------------------------------------------------------------ heffter

std::vector<std::string> numbers(const std::vector<Residue>& xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(std::to_string(x));
  return out;
}

json system_json(const HeffterSystem& h) {
  return json{{"v", h.v}, {"k", h.k}, {"parts", h.parts}};
}

int heffter_violation(const Globals& gl, const HeffterViolation& bad) {
  json doc{{"command", "heffter"},
           {"result", "violation"},
           {"violation", {{"kind", to_string(bad.kind)}, {"detail", bad.detail}, {"elements", bad.elements}}}};
  emit(gl, doc, std::string("violation ") + to_string(bad.kind) + ": " + bad.detail +
                    (bad.elements.empty() ? "" : " {" + join(numbers(bad.elements)) + "}") + "\n");
  return kNotFound;
}

int cmd_heffter(const Globals& gl, const std::string& action, const std::string& file,
                const std::vector<std::uint32_t>& find) {
  if (!find.empty()) {
    if (find.size() != 2) throw std::invalid_argument("--find takes v and k");
    const auto h = find_heffter_system(find[0], find[1]);
    json doc{{"command", "heffter-find"}, {"v", find[0]}, {"k", find[1]}};
    if (!h) {
      doc["result"] = "not_found";
      emit(gl, doc, "NotFound: no D(" + std::to_string(find[0]) + "," + std::to_string(find[1]) + ") exists\n");
      return kNotFound;
    }
    const auto recheck = validate_heffter(h->v, h->k, [&] {
      std::vector<std::vector<std::int64_t>> p;
      for (const auto& part : h->parts) p.emplace_back(part.begin(), part.end());
      return p;
    }());
    if (!std::holds_alternative<HeffterSystem>(recheck)) throw std::logic_error("found system failed validation");
    doc["result"] = "found";
    doc["system"] = system_json(*h);
    std::string text = std::to_string(h->v) + " " + std::to_string(h->k) + "\n";
    for (const auto& p : h->parts) text += join(numbers(p), " ") + "\n";
    emit(gl, doc, text);
    return kOk;
  }
  if (action.empty() || file.empty()) throw std::invalid_argument("usage: heffter build|validate|develop FILE, or heffter --find v k");
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open " + file);
  const auto raw = parse_heffter_text(in);
  const auto checked = validate_heffter(raw.v, raw.k, raw.parts);
  if (const auto* bad = std::get_if<HeffterViolation>(&checked)) return heffter_violation(gl, *bad);
  const auto& h = std::get<HeffterSystem>(checked);
  if (action == "validate") {
    json doc{{"command", "heffter-validate"}, {"result", "valid"}, {"system", system_json(h)}};
    emit(gl, doc, "valid D(" + std::to_string(h.v) + "," + std::to_string(h.k) + ")\n");
    return kOk;
  }
  if (action != "build" && action != "develop") throw std::invalid_argument("unknown heffter action '" + action + "'");
  const auto built = build_base_cycles(h);
  if (const auto* none = std::get_if<NoSimpleOrdering>(&built)) {
    json doc{{"command", "heffter-" + action},
             {"result", "not_found"},
             {"part", none->part},
             {"certificate", {{"search_space", none->search_space}, {"nodes", none->nodes}}}};
    emit(gl, doc, "NotFound: part {" + join(numbers(none->part)) + "} has no simple ordering\n");
    return kNotFound;
  }
  const auto& base = std::get<BaseCycles>(built);
  json bases = json::array();
  std::string text = "base cycles\n";
  for (std::size_t i = 0; i < base.cycles.size(); ++i) {
    const auto diffs = difference_list(base.cycles[i], h.v);
    if (diffs != signed_multiset(base.orderings[i], h.v)) throw std::logic_error("difference list mismatch");
    bases.push_back({{"ordering", base.orderings[i]},
                     {"strategy", base.strategies[i].branch},
                     {"cycle", base.cycles[i].vertices},
                     {"canonical", base.cycles[i].canonical().vertices},
                     {"differences", diffs}});
    text += to_string(base.cycles[i]) + "  from (" + join(numbers(base.orderings[i])) + ")  [" +
            base.strategies[i].branch + "]\n";
  }
  json doc{{"command", "heffter-" + action},
           {"result", "found"},
           {"system", system_json(h)},
           {"base_cycles", bases},
           {"differences_cover_nonzero_residues", true}};
  text += "differences cover Z" + std::to_string(h.v) + " \\ {0} exactly once\n";
  if (action == "develop") {
    const auto sys = develop_system(base.cycles, h.v);
    json cycles = json::array();
    for (const auto& c : sys.cycles) cycles.push_back(c.vertices);
    const std::uint64_t kv_edges = static_cast<std::uint64_t>(h.v) * (h.v - 1) / 2;
    doc["decomposition"] = {{"cycle_count", sys.cycles.size()},
                            {"cycle_length", h.k},
                            {"edges_covered", sys.edges_covered},
                            {"edges_of_complete_graph", kv_edges},
                            {"verified", sys.verified_decomposition},
                            {"cycles", cycles}};
    text += std::to_string(sys.cycles.size()) + " cycles cover all " + std::to_string(sys.edges_covered) +
            " edges of K" + std::to_string(h.v) + " exactly once\n";
    for (const auto& c : sys.cycles) text += to_string(c) + "\n";
  }
  emit(gl, doc, text);
  return kOk;
}

// ------------------------------------------------------------------ lengths

RealizeTarget parse_target(const std::string& t) {
  if (t == "cycle") return RealizeTarget::kCycle;
  if (t == "path" || t == "hamiltonian_path") return RealizeTarget::kHamiltonianPath;
  if (t == "factor" || t == "near_one_factor") return RealizeTarget::kNearOneFactor;
  throw std::invalid_argument("unknown target '" + t + "' (cycle, path, factor)");
}

json condition_json(const ConditionResult& r) {
  json j{{"pass", r.pass}};
  if (r.violating_divisor) j["violating_divisor"] = *r.violating_divisor;
  return j;
}

// Conditions that apply to this list, in a fixed order.
std::vector<std::pair<std::string, ConditionResult>> applicable_conditions(const LengthList& l,
                                                                            std::optional<SignAssignment>& signs) {
  std::vector<std::pair<std::string, ConditionResult>> out;
  if (l.size() == l.v() - 1) out.emplace_back("bhr", check_bhr_condition(l));
  if (l.v() % 2 == 1 && l.size() == (l.v() - 1) / 2) out.emplace_back("mpp", check_mpp_condition(l));
  signs = check_signed_sum_condition(l);
  out.emplace_back("signed_sum", ConditionResult{signs.has_value(), std::nullopt});
  const auto red = reduce_by_gcd(l);
  out.emplace_back("divisor_count", check_divisor_count_condition(red.reduced));
  return out;
}

// Residue-list form of the Hamiltonian path problem: signs and an order whose
// partial sums are Z_v \ {0}.
int cmd_bhr(const Globals& gl, const std::string& list) {
  const auto [v, residues] = parse_residue_list(list);
  const auto l = lengths_of_residues(v, residues);
  if (l.size() != v - 1) throw std::invalid_argument("bhr needs v-1 residues");
  const auto cond = check_bhr_condition(l);
  json doc{{"command", "lengths-bhr"}, {"v", v}, {"residues", residues}, {"bhr", condition_json(cond)}};
  std::string text = std::string("bhr: ") + (cond.pass ? "pass" : "fail") + "\n";
  const auto seq = bhr_signed_sequence(v, residues);
  if (!seq) {
    doc["result"] = "not_found";
    emit(gl, doc, text + "NotFound: no signed ordering has partial sums Z" + std::to_string(v) + " \\ {0}\n");
    return kNotFound;
  }
  std::vector<std::uint32_t> sums = seq->partial_sums;
  std::sort(sums.begin(), sums.end());
  for (std::uint32_t i = 0; i < sums.size(); ++i)
    if (sums[i] != i + 1) throw std::logic_error("signed sequence failed re-validation");
  std::vector<std::string> terms, ps;
  for (std::size_t i = 0; i < seq->ordering.size(); ++i) {
    terms.push_back((seq->signs[i] > 0 ? "" : "-") + std::to_string(seq->ordering[i]));
    ps.push_back(std::to_string(seq->partial_sums[i]));
  }
  doc["result"] = "found";
  doc["sequence"] = terms;
  doc["partial_sums"] = seq->partial_sums;
  emit(gl, doc, text + "sequence (" + join(terms) + ")\npartial sums " + join(ps) + "\n");
  return kOk;
}

int cmd_lengths(const Globals& gl, const std::string& action, const std::string& list, const std::string& target) {
  if (action == "bhr") return cmd_bhr(gl, list);
  const auto l = LengthList::parse(list);
  json doc{{"command", "lengths-" + action}, {"list", l.to_string()}};
  if (action == "reduce") {
    const auto r = reduce_by_gcd(l);
    doc["gcd"] = r.d;
    doc["reduced"] = r.reduced.to_string();
    emit(gl, doc, r.reduced.to_string() + "  (divided by " + std::to_string(r.d) + ")\n");
    return kOk;
  }
  std::optional<SignAssignment> signs;
  const auto conds = applicable_conditions(l, signs);
  json cj = json::object();
  std::string text;
  bool all_pass = true;
  for (const auto& [name, r] : conds) {
    cj[name] = condition_json(r);
    all_pass = all_pass && r.pass;
    text += name + ": " + (r.pass ? "pass" : "fail");
    if (r.violating_divisor) text += " (divisor " + std::to_string(*r.violating_divisor) + ")";
    text += "\n";
  }
  if (signs) {
    std::string s;
    for (std::size_t i = 0; i < signs->entries.size(); ++i)
      s += (signs->signs[i] > 0 ? (i ? "+" : "") : "-") + std::to_string(signs->entries[i]);
    cj["signed_sum"]["witness"] = s;
  }
  doc["conditions"] = cj;
  doc["necessary_conditions_pass"] = all_pass;
  if (action == "check") {
    emit(gl, doc, text);
    return kOk;
  }
  if (action != "realize") throw std::invalid_argument("unknown lengths action '" + action + "'");
  const auto t = parse_target(target);
  const auto out = realize(l, t);
  doc["target"] = to_string(t);
  doc["nodes"] = out.nodes;
  if (!out.witness) {
    doc["result"] = "not_found";
    text += std::string("NotFound: no ") + to_string(t) + " realizes " + l.to_string() + " (exhaustive, " +
            std::to_string(out.nodes) + " nodes)" + (all_pass ? "; the necessary conditions above all pass" : "") +
            "\n";
    emit(gl, doc, text);
    return kNotFound;
  }
  const auto& w = *out.witness;
  if (!(lengths_of_subgraph(l.v(), w.edges) == l)) throw std::logic_error("witness failed re-validation");
  doc["result"] = "found";
  if (!w.vertices.empty()) doc["vertices"] = w.vertices;
  json edges = json::array();
  for (const auto& [x, y] : w.edges) edges.push_back({x, y});
  doc["edges"] = edges;
  if (!w.vertices.empty()) {
    std::vector<std::string> vs;
    for (auto x : w.vertices) vs.push_back(std::to_string(x));
    text += std::string(to_string(t)) + " (" + join(vs) + ")\n";
  } else {
    std::vector<std::string> es;
    for (const auto& [x, y] : w.edges) es.push_back("[" + std::to_string(x) + "," + std::to_string(y) + "]");
    text += std::string(to_string(t)) + " " + join(es, " ") + "\n";
  }
  emit(gl, doc, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simple orderings of group subsets, Heffter cycle systems and edge-length lists"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--workers", gl.workers, "Worker threads (default: all cores)")->envname("PSUMS_WORKERS");
  app.add_option("--budget", gl.budget, "Wall-clock budget in seconds for verify runs");

  OrderArgs oa;
  auto* order = app.add_subcommand("order", "Find a simple ordering of a subset");
  order->add_option("--group", oa.group, "Abelian group such as Z25 or Z4xZ2, or a builtin name");
  order->add_option("--cayley", oa.cayley, "Cayley table file or builtin name (sym3, D4, Q8, ...)");
  order->add_option("--set", oa.set, "Comma-separated elements, or all-nonidentity")->required();
  order->add_flag("--zero-free", oa.zero_free, "Also forbid the identity as a partial sum");
  order->add_flag("--constructive-only", oa.constructive_only, "Only use the case constructions");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a conjecture on every qualifying subset of a family");
  verify->add_option("conjecture", va.conjecture, "alspach, adms or zero-sum")->required();
  verify->add_option("--abelian-up-to", va.abelian_up_to, "All abelian groups of order <= N");
  verify->add_option("--cyclic-up-to", va.cyclic_up_to, "Cyclic groups of order <= N");
  verify->add_option("--cayley", va.cayley, "Cayley table files or builtin names")->expected(1, -1);
  verify->add_option("--limit-order", va.limit_order, "Skip groups above this order");
  verify->add_option("--max-size", va.max_size, "Only subsets with at most this many elements");
  verify->add_option("--checkpoint", va.checkpoint, "Resumable checkpoint file");
  verify->add_option("--witnesses", va.witnesses, "Store one witness ordering per subset in this file");

  std::string h_action, h_file;
  std::vector<std::uint32_t> h_find;
  auto* heffter = app.add_subcommand("heffter", "Heffter systems and the cycle systems they generate");
  heffter->add_option("action", h_action, "build, validate or develop")
      ->check(CLI::IsMember({"build", "validate", "develop"}));
  heffter->add_option("file", h_file, "System file: 'v k' then one part per line");
  heffter->add_option("--find", h_find, "Search for a D(v,k)")->expected(2);

  std::string l_action, l_list, l_target = "cycle";
  auto* lengths = app.add_subcommand("lengths", "Edge-length lists of subgraphs of K_v");
  lengths->add_option("action", l_action, "check, realize, reduce or bhr")
      ->required()
      ->check(CLI::IsMember({"check", "realize", "reduce", "bhr"}));
  lengths->add_option("list", l_list, "List such as \"11: 1^2 2 3 5^2\"")->required();
  lengths->add_option("--target", l_target, "cycle, path or factor");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*order) return cmd_order(gl, oa);
    if (*verify) return cmd_verify(gl, va);
    if (*heffter) return cmd_heffter(gl, h_action, h_file, h_find);
    if (*lengths) return cmd_lengths(gl, l_action, l_list, l_target);
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e)) {
      std::cerr << "error: " << e.what() << "\n";
      return kInputError;
    }
    std::cerr << "internal error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
