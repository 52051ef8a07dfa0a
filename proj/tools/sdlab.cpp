// Command-line front end. Exit codes: 0 ok, 1 usage, 2 input, 3 internal
// invariant, 4 verdict inconsistency.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "sdlab/harness.hpp"
#include "sdlab/io.hpp"

namespace {

using namespace sdlab;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInput = 2;
constexpr int kInternal = 3;
constexpr int kInconsistent = 4;

QuotientPair load(const std::string& path, int characteristic) {
  return parse_input(read_file(path), Field(characteristic));
}

int cmd_analyze(const std::string& file, bool as_json, int p) {
  const json report = analyze_report(load(file, p));
  if (as_json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << render_text(report);
  }
  const bool ok = report["consistent"].get<bool>() && report["audit"]["ok"].get<bool>();
  return ok ? kOk : kInconsistent;
}

int cmd_depth(const std::string& file, int p) {
  const DepthResult r = depth(load(file, p));
  std::cout << "depth = " << r.depth << "\npd = " << r.pd << "\nwitness degree = " << to_string(r.witness_degree)
            << "\nfield characteristic = " << r.field.characteristic() << "\n";
  return kOk;
}

int cmd_sdepth(const std::string& file, std::optional<int> decide) {
  const QuotientPair q = load(file, 0);
  if (decide) {
    const Decision dec = sdepth_decide(q, *decide);
    if (const auto* p = std::get_if<Partition>(&dec)) {
      std::cout << "sdepth >= " << *decide << "\ncertificate:\n";
      for (const Interval& iv : p->intervals()) std::cout << "  " << to_string(iv) << "\n";
    } else {
      std::cout << "sdepth < " << *decide << " (search exhausted after " << std::get<Unsat>(dec).nodes << " nodes)\n";
    }
    return kOk;
  }
  const SdepthResult r = sdepth(q);
  std::cout << "sdepth = " << r.value << "\ncertificate:\n";
  for (const Interval& iv : r.certificate.intervals()) std::cout << "  " << to_string(iv) << "\n";
  if (r.refutation) std::cout << "no partition of sdepth " << r.refutation->k << " (" << r.refutation->nodes << " nodes)\n";
  return kOk;
}

int cmd_hdepth(const std::string& file) {
  const HdepthResult r = hdepth1(hilbert_series(load(file, 0)));
  std::cout << "hdepth1 = " << r.value << "\n";
  if (r.failing_index) {
    std::cout << "coefficient " << *r.failing_index << " of (1-t)^" << r.value + 1 << " H(t) is "
              << r.failing_coefficient->str() << "\n";
  }
  return kOk;
}

int cmd_herzog(int n) {
  const HerzogComparison c = herzog_question(n);
  std::cout << "n = " << c.n << "\nhdepth1(m) = " << c.hdepth_maximal << "\nhdepth1(S+m) = " << c.hdepth_free_plus_maximal
            << "\n" << (c.equal ? "equal" : "different") << "\n";
  return kOk;
}

int cmd_surgery(const std::string& file, const std::string& b_text, bool trace, bool walk, bool as_json) {
  const QuotientPair q = load(file, 0);
  const Monomial b = parse_monomial(b_text, q.ambient());
  DriverRun run;
  if (walk) {
    const QuotientPair reduced = build_reduced_pair(q, b);
    const Decision dec = sdepth_at_least(reduced, strata(q).d + 2);
    if (!std::holds_alternative<Partition>(dec)) throw PreconditionError("sdepth(I_b/J_b) < d+2, no P_b to walk");
    run = surgery_walk(q, b, std::get<Partition>(dec), {{}, trace});
  } else {
    run = ml1_driver(q, b, {{}, trace});
  }
  const json out = to_json(run);
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const std::string& line : run.trace) std::cout << "  " << line << "\n";
    std::cout << "route: " << run.route << "\n";
    for (const std::string& a : run.anomalies) std::cout << "anomaly: " << a << "\n";
    if (!run.outcome) {
      std::cout << "no outcome\n";
    } else if (const auto* up = std::get_if<UpgradedPartition>(&*run.outcome)) {
      std::cout << "partition of sdepth " << up->partition.sdepth_value() << ":\n";
      for (const Interval& iv : up->partition.intervals()) std::cout << "  " << to_string(iv) << "\n";
    } else {
      const auto& w = std::get<SubidealWitness>(*run.outcome);
      std::cout << "I' = (" << to_string(w.ideal) << "), sdepth I'/J' <= d+1, depth I/(J,I') = " << w.quotient_depth << "\n";
    }
  }
  if (!run.outcome) return kInternal;
  return certify_outcome(q, *run.outcome).ok ? kOk : kInconsistent;
}

int cmd_corpus(const std::string& expectations, bool as_json) {
  const json expected = expectations.empty() ? corpus_expectations() : json::parse(read_file(expectations));
  const CorpusReport rep = run_corpus(expected);
  if (as_json) {
    std::cout << rep.to_json().dump(2) << "\n";
  } else {
    for (const GoldenCheck& c : rep.checks) {
      std::cout << (c.ok ? "ok   " : "FAIL ") << c.key;
      if (!c.ok) std::cout << ": expected " << c.expected.dump() << ", observed " << c.observed.dump();
      std::cout << "\n";
    }
    std::cout << rep.checks.size() << " checks in " << rep.seconds << " s\n";
  }
  return rep.ok() ? kOk : kInconsistent;
}

int cmd_fuzz(const FuzzConfig& config, const std::string& out) {
  const FuzzSummary sum = run_fuzz(config, out);
  std::cout << sum.to_json().dump(2) << "\n";
  return sum.ok() ? kOk : kInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Depth, Stanley depth and Hilbert depth of squarefree quotients I/J"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false;
  int characteristic = 0;

  auto* analyze = app.add_subcommand("analyze", "Full report: strata, depths, verdicts, audit");
  analyze->add_option("FILE", file, "Instance file")->required();
  analyze->add_flag("--json", as_json, "Emit the JSON report");
  analyze->add_option("--char", characteristic, "Field characteristic (0 or a prime)");

  auto* depth_cmd = app.add_subcommand("depth", "depth(I/J) via Koszul homology");
  depth_cmd->add_option("FILE", file, "Instance file")->required();
  depth_cmd->add_option("--char", characteristic, "Field characteristic (0 or a prime)");

  std::optional<int> decide;
  auto* sdepth_cmd = app.add_subcommand("sdepth", "Stanley depth with certificate");
  sdepth_cmd->add_option("FILE", file, "Instance file")->required();
  sdepth_cmd->add_option("--decide", decide, "Only decide sdepth >= K");

  auto* hdepth_cmd = app.add_subcommand("hdepth", "Hilbert depth hdepth1");
  hdepth_cmd->add_option("FILE", file, "Instance file")->required();

  int herzog_n = 0;
  auto* herzog = app.add_subcommand("herzog", "Compare hdepth1(m) with hdepth1(S+m)");
  herzog->add_option("N", herzog_n, "Number of variables (1..12)")->required();

  std::string b_text;
  bool trace = false;
  bool walk = false;
  auto* surgery = app.add_subcommand("surgery", "Partition surgery for r = 2");
  surgery->add_option("FILE", file, "Instance file")->required();
  surgery->add_option("--b", b_text, "The monomial b in B")->required();
  surgery->add_flag("--trace", trace, "Print every rewrite step");
  surgery->add_flag("--walk", walk, "Any r: take P_b from the solver and run the path machinery only");
  surgery->add_flag("--json", as_json, "Emit JSON");

  std::string expectations;
  auto* corpus = app.add_subcommand("corpus", "Worked examples");
  corpus->require_subcommand(1);
  auto* corpus_run = corpus->add_subcommand("run", "Check every golden value");
  corpus_run->add_option("--expectations", expectations, "JSON file replacing the stored expectations");
  corpus_run->add_flag("--json", as_json, "Emit JSON");
  auto* corpus_dump = corpus->add_subcommand("expectations", "Print the stored expectations as JSON");

  FuzzConfig fuzz_config;
  std::string out;
  auto* fuzz = app.add_subcommand("fuzz", "Seeded random audit of every rule");
  fuzz->add_option("--n", fuzz_config.n, "Largest number of variables")->required()->check(CLI::Range(1, 8));
  fuzz->add_option("--count", fuzz_config.count, "Number of instances")->required();
  fuzz->add_option("--seed", fuzz_config.seed, "Master seed")->required();
  fuzz->add_option("--out", out, "JSONL log; findings.jsonl goes next to it")->required();
  fuzz->add_option("--ml1-every", fuzz_config.ml1_every, "Draw every k-th instance from the r = 2 generator (0 = never)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(file, as_json, characteristic);
    if (*depth_cmd) return cmd_depth(file, characteristic);
    if (*sdepth_cmd) return cmd_sdepth(file, decide);
    if (*hdepth_cmd) return cmd_hdepth(file);
    if (*herzog) return cmd_herzog(herzog_n);
    if (*surgery) return cmd_surgery(file, b_text, trace, walk, as_json);
    if (*corpus_dump) {
      std::cout << corpus_expectations().dump(2) << "\n";
      return kOk;
    }
    if (*corpus_run) return cmd_corpus(expectations, as_json);
    if (*fuzz) return cmd_fuzz(fuzz_config, out);
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.line() << ":" << e.column() << ": " << e.what() << "\n";
    return kInput;
  } catch (const json::exception& e) {
    std::cerr << "bad JSON: " << e.what() << "\n";
    return kInput;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
