#include "sdlab/report.hpp"

#include <sstream>

#include "sdlab/io.hpp"

namespace sdlab {

namespace {

json monomials(const std::vector<Monomial>& ms) {
  json out = json::array();
  for (Monomial m : ms) out.push_back(to_string(m));
  return out;
}

std::string big(const BigInt& v) { return v.str(); }

}  // namespace

json to_json(const QuotientPair& q) {
  return {{"n", q.ambient()},
          {"I", to_string(q.numerator())},
          {"J", to_string(q.denominator())},
          {"field", q.field().characteristic()},
          {"normalization_warning", q.normalization_warning()}};
}

json to_json(const StrataReport& st) {
  return {{"d", st.d},           {"r", st.r},
          {"s", st.s},           {"q", st.q},
          {"f", monomials(st.f_list)}, {"E", monomials(st.E)},
          {"B", monomials(st.B)}, {"C", monomials(st.C)},
          {"W_B", monomials(st.W_B)}, {"W_all", monomials(st.W_all)},
          {"C2", monomials(st.C2)}, {"C3", monomials(st.C3)}};
}

json to_json(const Partition& p) {
  json out = json::array();
  for (const Interval& iv : p.intervals()) out.push_back({to_string(iv.lo), to_string(iv.hi)});
  return out;
}

json to_json(const SdepthResult& r) {
  json out = {{"value", r.value}, {"certificate", to_json(r.certificate)}};
  out["refutation"] = r.refutation ? json{{"k", r.refutation->k}, {"nodes", r.refutation->nodes}} : json(nullptr);
  return out;
}

json to_json(const DepthResult& r) {
  return {{"value", r.depth},
          {"pd", r.pd},
          {"witness_degree", to_string(r.witness_degree)},
          {"field", r.field.characteristic()}};
}

json to_json(const HdepthResult& r) {
  json out = {{"value", r.value}};
  out["failing_index"] = r.failing_index ? json(*r.failing_index) : json(nullptr);
  out["failing_coefficient"] = r.failing_coefficient ? json(big(*r.failing_coefficient)) : json(nullptr);
  return out;
}

json to_json(const Verdict& v) {
  json hyps = json::array();
  for (const Hypothesis& h : v.hypotheses) hyps.push_back({{"name", h.name}, {"value", h.value}, {"holds", h.holds}});
  return {{"rule", v.rule},
          {"statement", v.statement},
          {"hypotheses", hyps},
          {"applicable", v.applicable},
          {"implied", to_string(v.quantity) + " " + to_string(v.relation) + " " + std::to_string(v.bound)},
          {"observed", v.observed},
          {"consistent", v.consistent}};
}

json to_json(const std::vector<Verdict>& vs) {
  json out = json::array();
  for (const Verdict& v : vs) out.push_back(to_json(v));
  return out;
}

json to_json(const AuditRecord& rec) {
  json violations = json::array();
  for (const AuditCheck& c : rec.violations()) violations.push_back({{"check", c.name}, {"detail", c.detail}});
  json out = {{"ok", rec.ok()}, {"checks", rec.checks.size()}, {"violations", violations}};
  if (!rec.instance.empty()) out["instance"] = rec.instance;
  return out;
}

json to_json(const SurgeryOutcome& outcome) {
  if (const auto* up = std::get_if<UpgradedPartition>(&outcome)) {
    return {{"kind", "upgraded_partition"}, {"partition", to_json(up->partition)}, {"value", up->partition.sdepth_value()}};
  }
  const auto& w = std::get<SubidealWitness>(outcome);
  return {{"kind", "subideal_witness"},
          {"ideal", to_string(w.ideal)},
          {"denominator", to_string(w.denominator)},
          {"quotient_partition", to_json(w.quotient_partition)},
          {"quotient_depth", w.quotient_depth},
          {"refutation", {{"k", w.refutation.k}, {"nodes", w.refutation.nodes}}}};
}

json to_json(const DriverRun& run) {
  json out = {{"route", run.route}, {"solver_assisted", run.solver_assisted}, {"anomalies", run.anomalies}};
  out["outcome"] = run.outcome ? to_json(*run.outcome) : json(nullptr);
  if (!run.trace.empty()) out["trace"] = run.trace;
  return out;
}

json analyze_report(const QuotientPair& q, const SearchLimits& limits) {
  const StrataReport st = strata(q);
  const SdepthResult sd = sdepth(q, limits);
  const DepthResult dp = depth(q);
  const HdepthResult hd = hdepth1(hilbert_series(q));
  const Measurements m{sd.value, dp.depth, hd.value, q.field()};
  const auto verdicts = bounds_report(q, m);
  const AuditRecord audit = consistency_audit(q);
  return {{"instance", to_json(q)},
          {"strata", to_json(st)},
          {"sdepth", to_json(sd)},
          {"depth", to_json(dp)},
          {"hdepth", to_json(hd)},
          {"verdicts", to_json(verdicts)},
          {"consistent", all_consistent(verdicts)},
          {"audit", to_json(audit)},
          {"observations", {{"sdepth_at_least_depth", sd.value >= dp.depth}}}};
}

std::string render_text(const json& report) {
  std::ostringstream out;
  const json& inst = report["instance"];
  const json& st = report["strata"];
  out << "n = " << inst["n"] << ", field characteristic " << inst["field"] << "\n";
  out << "I = " << inst["I"].get<std::string>() << "\nJ = " << inst["J"].get<std::string>() << "\n";
  if (inst["normalization_warning"].get<bool>()) out << "warning: J has a generator of degree <= d\n";
  out << "d = " << st["d"] << ", r = " << st["r"] << ", s = " << st["s"] << ", q = " << st["q"] << "\n";
  out << "sdepth = " << report["sdepth"]["value"] << "\n";
  out << "depth = " << report["depth"]["value"] << " (pd " << report["depth"]["pd"] << ")\n";
  out << "hdepth1 = " << report["hdepth"]["value"] << "\n";
  out << "verdicts:\n";
  for (const json& v : report["verdicts"]) {
    if (!v["applicable"].get<bool>()) continue;
    out << "  " << (v["consistent"].get<bool>() ? "ok   " : "FAIL ") << v["rule"].get<std::string>() << ": "
        << v["implied"].get<std::string>() << ", observed " << v["observed"] << "\n";
  }
  const json& audit = report["audit"];
  out << "audit: " << audit["checks"] << " checks, " << (audit["ok"].get<bool>() ? "all hold" : "VIOLATIONS") << "\n";
  for (const json& v : audit["violations"]) out << "  " << v["check"].get<std::string>() << " (" << v["detail"].get<std::string>() << ")\n";
  if (!report["observations"]["sdepth_at_least_depth"].get<bool>()) out << "observation: sdepth < depth\n";
  return out.str();
}

}  // namespace sdlab
