#include "sdlab/harness.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>

#include "sdlab/corpus.hpp"
#include "sdlab/generators.hpp"
#include "sdlab/io.hpp"

namespace sdlab {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

Monomial mono(const char* text, int n) { return parse_monomial(text, n); }

int count_divisible(const std::vector<Monomial>& set, int t) { return static_cast<int>(restrict_to_var(set, t).size()); }

/// The reference P_b for the bad instance (b = x1*x4).
Partition bad_listed_pb() {
  auto iv = [](const char* lo, const char* hi) { return Interval{mono(lo, 6), mono(hi, 6)}; };
  return Partition({iv("x2", "x1*x2*x3"), iv("x3", "x1*x3*x5"), iv("x1*x5", "x1*x2*x5"), iv("x2*x5", "x2*x3*x5"),
                    iv("x4*x5", "x1*x4*x5"), iv("x5*x6", "x4*x5*x6"), iv("x1*x2*x3*x5", "x1*x2*x3*x5")});
}

void observe_bad(json& obs) {
  const QuotientPair bad = corpus_instance("bad");
  const Monomial b = mono("x1*x4", 6);
  const Partition pb = bad_listed_pb();
  const QuotientPair reduced = build_reduced_pair(bad, b);
  obs["bad.pb_verifies"] = verify_partition(reduced, pb).ok;
  obs["bad.pb_value"] = pb.sdepth_value();
  const HMap h = build_h(bad, b, pb);
  json hs = json::object();
  for (const auto& [x, c] : h.map) hs[to_string(x)] = to_string(c);
  obs["bad.h"] = hs;
  const PathReport paths = find_paths(h, mono("x1*x5", 6));
  json first = json::array();
  if (!paths.paths.empty()) {
    for (Monomial a : paths.paths.front().nodes) first.push_back(to_string(a));
    obs["bad.path_maximal"] = paths.paths.front().maximal;
    obs["bad.path_weak"] = paths.paths.front().weak;
  }
  obs["bad.path"] = first;
  json reach = json::array();
  for (Monomial a : paths.reachable) reach.push_back(to_string(a));
  obs["bad.T1"] = reach;
  const DriverRun walk = surgery_walk(bad, b, pb);
  if (walk.outcome && std::holds_alternative<SubidealWitness>(*walk.outcome)) {
    const auto& w = std::get<SubidealWitness>(*walk.outcome);
    obs["bad.witness"] = to_string(w.ideal);
    const QuotientPair inner(w.ideal, w.denominator);
    obs["bad.witness_sdepth_at_most_2"] = std::holds_alternative<Unsat>(sdepth_at_least(inner, 3));
    obs["bad.witness_certified"] = certify_outcome(bad, *walk.outcome).ok;
  } else {
    obs["bad.witness"] = nullptr;
  }
  obs["bad.sdepth"] = sdepth(bad).value;
  obs["bad.depth"] = depth(bad).depth;
}

}  // namespace

json corpus_expectations() {
  return {
      {"ex3.depth_char0", 3},
      {"ex3.depth_char2", 3},
      {"ex1.d", 2},
      {"ex1.r", 3},
      {"ex1.s", 7},
      {"ex1.q", 4},
      {"ex1.sdepth", 3},
      {"ex1.unsat_at_4", true},
      {"ex1.depth", 3},
      {"ex1.main_verdict_applicable", true},
      {"ex1.main_verdict_consistent", true},
      // B∩(x4) has four elements for this instance (see README).
      {"eex1.B_x1", 5},
      {"eex1.B_x4", 4},
      {"eex1.C_x1", 3},
      {"eex1.C_x4", 3},
      {"eex1.depth", 3},
      {"eex1.U1_sdepth_bound_fires", true},
      {"ex.c_in_C", true},
      {"ex.b_in_B", true},
      {"ex.b_divides_c", true},
      {"ex.b_in_W_B", false},
      {"bad.pb_verifies", true},
      {"bad.pb_value", 3},
      {"bad.h",
       {{"x2", "x1*x2*x3"}, {"x3", "x1*x3*x5"}, {"x1*x5", "x1*x2*x5"}, {"x2*x5", "x2*x3*x5"},
        {"x4*x5", "x1*x4*x5"}, {"x5*x6", "x4*x5*x6"}}},
      {"bad.path", {"x1*x5", "x2*x5"}},
      {"bad.path_maximal", true},
      {"bad.path_weak", true},
      {"bad.T1", {"x1*x5", "x2*x5"}},
      {"bad.witness", "x1*x4, x4*x5, x5*x6"},
      {"bad.witness_sdepth_at_most_2", true},
      {"bad.witness_certified", true},
      {"bad.sdepth", 2},
      {"bad.depth", 2},
      {"rp2.depth_char0", 3},
      {"rp2.depth_char2", 2},
      {"rp2.reisner_char0", 3},
      {"rp2.reisner_char2", 2},
      {"herzog.equal", {{"1", true}, {"2", true}, {"3", true}, {"4", true}, {"5", true}, {"6", false},
                        {"7", true}, {"9", true}, {"11", true}}},
      {"corpus.verdicts_consistent", true},
      {"corpus.audits_ok", true},
  };
}

json corpus_observations() {
  json obs = json::object();

  const QuotientPair ex3 = corpus_instance("ex3");
  obs["ex3.depth_char0"] = depth(ex3).depth;
  obs["ex3.depth_char2"] = depth(ex3.with_field(Field(2))).depth;

  const QuotientPair ex1 = corpus_instance("ex1");
  const StrataReport st1 = strata(ex1);
  obs["ex1.d"] = st1.d;
  obs["ex1.r"] = st1.r;
  obs["ex1.s"] = st1.s;
  obs["ex1.q"] = st1.q;
  obs["ex1.sdepth"] = sdepth(ex1).value;
  obs["ex1.unsat_at_4"] = std::holds_alternative<Unsat>(sdepth_decide(ex1, 4));
  obs["ex1.depth"] = depth(ex1).depth;
  for (const Verdict& v : bounds_report(ex1)) {
    if (v.rule != "conjecture_r_at_most_3") continue;
    obs["ex1.main_verdict_applicable"] = v.applicable;
    obs["ex1.main_verdict_consistent"] = v.consistent;
  }

  const QuotientPair eex1 = corpus_instance("eex1");
  const StrataReport ste = strata(eex1);
  obs["eex1.B_x1"] = count_divisible(ste.B, 1);
  obs["eex1.B_x4"] = count_divisible(ste.B, 4);
  obs["eex1.C_x1"] = count_divisible(ste.C, 1);
  obs["eex1.C_x4"] = count_divisible(ste.C, 4);
  obs["eex1.depth"] = depth(eex1).depth;
  {
    const Ideal x1 = Ideal::principal(5, Monomial::variable(1));
    const QuotientPair u1 = form_quotient(intersect(eex1.numerator(), x1), eex1.denominator());
    bool fires = false;
    for (const Verdict& v : bounds_report(u1)) fires = fires || (v.rule == "excess_b_over_c_sdepth" && v.applicable && v.consistent);
    obs["eex1.U1_sdepth_bound_fires"] = fires;
  }

  const QuotientPair ex = corpus_instance("ex");
  const StrataReport stx = strata(ex);
  const Monomial c = mono("x1*x2*x3*x4", 4);
  const Monomial b = mono("x1*x2*x4", 4);
  obs["ex.c_in_C"] = contains_sorted(stx.C, c);
  obs["ex.b_in_B"] = contains_sorted(stx.B, b);
  obs["ex.b_divides_c"] = b.divides(c);
  obs["ex.b_in_W_B"] = contains_sorted(stx.W_B, b);

  observe_bad(obs);

  const QuotientPair rp2 = corpus_instance("rp2");
  obs["rp2.depth_char0"] = depth(rp2).depth;
  obs["rp2.depth_char2"] = depth(rp2.with_field(Field(2))).depth;
  obs["rp2.reisner_char0"] = reisner_depth_oracle(rp2_ideal(), Field{});
  obs["rp2.reisner_char2"] = reisner_depth_oracle(rp2_ideal(), Field(2));

  json herzog = json::object();
  for (int n : {1, 2, 3, 4, 5, 6, 7, 9, 11}) herzog[std::to_string(n)] = herzog_question(n).equal;
  obs["herzog.equal"] = herzog;

  bool consistent = true;
  bool audits = true;
  for (const CorpusInstance& inst : corpus_instances()) {
    for (int p : {0, 2}) {
      const QuotientPair q = parse_input(inst.text, Field(p));
      consistent = consistent && all_consistent(bounds_report(q));
      audits = audits && consistency_audit(q).ok();
    }
  }
  obs["corpus.verdicts_consistent"] = consistent;
  obs["corpus.audits_ok"] = audits;
  return obs;
}

bool CorpusReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const GoldenCheck& c) { return c.ok; });
}

json CorpusReport::to_json() const {
  json rows = json::array();
  for (const GoldenCheck& c : checks) rows.push_back({{"key", c.key}, {"expected", c.expected}, {"observed", c.observed}, {"ok", c.ok}});
  return {{"ok", ok()}, {"checks", rows}, {"seconds", seconds}};
}

CorpusReport run_corpus(const json& expected) {
  const auto start = Clock::now();
  const json observed = corpus_observations();
  CorpusReport rep;
  for (const auto& [key, value] : expected.items()) {
    GoldenCheck c{key, value, observed.contains(key) ? observed.at(key) : json(nullptr), false};
    c.ok = observed.contains(key) && observed.at(key) == value;
    rep.checks.push_back(std::move(c));
  }
  for (const auto& [key, value] : observed.items()) {
    if (!expected.contains(key)) rep.checks.push_back({key, nullptr, value, false});
  }
  rep.seconds = since(start);
  return rep;
}

bool FuzzSummary::ok() const { return inconsistent == 0 && audit_failures == 0; }

json FuzzSummary::to_json() const {
  return {{"instances", instances},
          {"skipped", skipped},
          {"inconsistent", inconsistent},
          {"audit_failures", audit_failures},
          {"findings", findings},
          {"ml1_instances", ml1_instances},
          {"ml1_certified", ml1_certified},
          {"ml1_driver_failures", ml1_driver_failures},
          {"ml1_disjunction_confirmed", ml1_disjunction_confirmed},
          {"seconds", seconds},
          {"ok", ok()}};
}

std::uint64_t instance_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 step at position index of the stream started at master.
  std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

bool ml1_disjunction_direct(const QuotientPair& q, const SearchLimits& limits) {
  const StrataReport st = strata(q);
  const int k = st.d + 2;
  if (std::holds_alternative<Partition>(sdepth_at_least(q, k, limits))) return true;
  std::vector<Monomial> pool = st.f_list;
  pool.insert(pool.end(), st.B.begin(), st.B.end());
  if (pool.size() > 20) throw BudgetExceeded("too many candidate generators for a direct check");
  const int n = q.ambient();
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << pool.size()); ++mask) {
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if ((mask >> i) & 1U) gens.push_back(pool[i]);
    }
    const Ideal sub = minimalize(n, gens);
    if (sub == q.numerator()) continue;
    const Ideal den = intersect(q.denominator(), sub);
    if (den.contains(sub)) continue;
    const Ideal killed = sum(q.denominator(), sub);
    if (killed.contains(q.numerator())) continue;
    if (module_depth(q.numerator(), killed, q.field()) < st.d + 1) continue;
    if (std::holds_alternative<Unsat>(sdepth_at_least(QuotientPair(sub, den, q.field()), k, limits))) return true;
  }
  return false;
}

namespace {

/// Runs the surgery driver on the first admissible b, preferring `preferred`.
json ml1_section(const QuotientPair& q, std::optional<Monomial> preferred, const SearchLimits& limits,
                 std::vector<json>& findings, const json& instance) {
  if (q.normalization_warning()) return nullptr;
  const StrataReport st = strata(q);
  if (st.r != 2) return nullptr;
  std::vector<Monomial> bs;
  if (preferred) bs.push_back(*preferred);
  for (Monomial b : st.B) {
    if (b != preferred && st.f_list[0].divides(b) != st.f_list[1].divides(b)) bs.push_back(b);
  }
  for (Monomial b : bs) {
    if (!check_ml1_hypotheses(q, b, limits).ok()) continue;
    const DriverRun run = ml1_driver(q, b, {limits, false});
    json out = {{"b", to_string(b)}, {"route", run.route}, {"anomalies", run.anomalies}};
    if (run.outcome) {
      const OutcomeCheck check = certify_outcome(q, *run.outcome, limits);
      out["outcome"] = std::holds_alternative<UpgradedPartition>(*run.outcome) ? "upgraded_partition" : "subideal_witness";
      out["certified"] = check.ok;
      if (!check.ok) {
        out["certification_error"] = check.message;
        out["disjunction_direct"] = ml1_disjunction_direct(q, limits);
      }
    } else {
      out["outcome"] = nullptr;
      out["certified"] = false;
      out["disjunction_direct"] = ml1_disjunction_direct(q, limits);
    }
    if (!run.anomalies.empty() || !out["certified"].get<bool>()) {
      findings.push_back({{"kind", "ml1_driver"}, {"instance", instance}, {"detail", out}});
    }
    return out;
  }
  return nullptr;
}

}  // namespace

json fuzz_instance(const FuzzConfig& config, std::uint64_t index, std::vector<json>& findings) {
  const std::uint64_t seed = instance_seed(config.seed, index);
  std::mt19937_64 rng(seed);
  const int lo = std::min(3, config.n);
  int n = std::uniform_int_distribution<int>(lo, config.n)(rng);
  const bool hunt = config.ml1_every != 0 && index % config.ml1_every == config.ml1_every - 1;
  std::optional<QuotientPair> q;
  std::optional<Monomial> preferred;
  if (hunt) {
    n = std::max(n, std::min(config.n, 5));
    for (int tries = 0; tries < 200 && !q; ++tries) {
      if (auto cand = random_ml1_candidate(rng, n)) {
        q = cand->pair;
        preferred = cand->b;
      }
    }
  }
  if (!q) q = random_quotient(rng, n);

  json instance = {{"n", n}, {"I", to_string(q->numerator())}, {"J", to_string(q->denominator())}};
  json rec = {{"index", index}, {"seed", seed}, {"kind", hunt ? "ml1" : "random"}, {"instance", instance}};
  try {
    const StrataReport st = strata(*q);
    rec["strata"] = {{"d", st.d}, {"r", st.r}, {"s", st.s}, {"q", st.q}};
    const SdepthResult sd = sdepth(*q, config.limits);
    const int hd = hdepth1(hilbert_series(*q)).value;
    rec["sdepth"] = sd.value;
    rec["hdepth"] = hd;
    json depths = json::object();
    json verdicts = json::array();
    json audits = json::object();
    bool consistent = true;
    bool audit_ok = true;
    for (int p : {0, 2}) {
      const QuotientPair qp = q->with_field(Field(p));
      const int dp = depth(qp).depth;
      depths[std::to_string(p)] = dp;
      for (const Verdict& v : bounds_report(qp, {sd.value, dp, hd, Field(p)})) {
        if (!v.applicable) continue;
        verdicts.push_back({{"rule", v.rule}, {"field", p}, {"bound", v.bound}, {"observed", v.observed}, {"consistent", v.consistent}});
        consistent = consistent && v.consistent;
      }
      const AuditRecord audit = consistency_audit(qp);
      audits[std::to_string(p)] = audit.ok();
      audit_ok = audit_ok && audit.ok();
      if (!audit.ok()) rec["audit_violations"] = to_json(audit);
      if (sd.value < dp) {
        findings.push_back({{"kind", "sdepth_below_depth"}, {"instance", instance}, {"field", p}, {"sdepth", sd.value}, {"depth", dp}});
      }
    }
    rec["depth"] = depths;
    rec["verdicts"] = verdicts;
    rec["consistent"] = consistent;
    rec["audit"] = audits;
    rec["audit_ok"] = audit_ok;
    rec["ml1"] = ml1_section(*q, preferred, config.limits, findings, instance);
  } catch (const BudgetExceeded& e) {
    rec["skipped"] = e.what();
  }
  return rec;
}

std::string findings_path(const std::string& log_path) {
  return (std::filesystem::path(log_path).parent_path() / "findings.jsonl").string();
}

FuzzSummary run_fuzz(const FuzzConfig& config, const std::string& log_path) {
  const auto start = Clock::now();
  std::ofstream log(log_path);
  std::ofstream finds(findings_path(log_path));
  if (!log || !finds) throw InputError("cannot write " + log_path);
  FuzzSummary sum;
  for (std::uint64_t i = 0; i < config.count; ++i) {
    std::vector<json> findings;
    const json rec = fuzz_instance(config, i, findings);
    log << rec.dump() << '\n';
    for (const json& f : findings) finds << json{{"index", i}, {"seed", rec["seed"]}, {"finding", f}}.dump() << '\n';
    ++sum.instances;
    sum.findings += findings.size();
    if (rec.contains("skipped")) {
      ++sum.skipped;
      continue;
    }
    if (!rec["consistent"].get<bool>()) ++sum.inconsistent;
    if (!rec["audit_ok"].get<bool>()) ++sum.audit_failures;
    const json& ml1 = rec["ml1"];
    if (!ml1.is_null()) {
      ++sum.ml1_instances;
      if (ml1["certified"].get<bool>()) {
        ++sum.ml1_certified;
      } else {
        ++sum.ml1_driver_failures;
        if (ml1.value("disjunction_direct", false)) ++sum.ml1_disjunction_confirmed;
      }
    }
  }
  sum.seconds = since(start);
  return sum;
}

}  // namespace sdlab
