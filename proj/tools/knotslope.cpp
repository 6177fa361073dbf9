// knotslope: invariants, corpus verification and oracle cross-checks for
// knots given as PD codes.

#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "knotslope/knotslope.hpp"

namespace {

using namespace knotslope;

enum Exit : int { kOk = 0, kFailed = 1, kParse = 2, kPlanarity = 3, kUnreadable = 4 };

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedSyntax:
    case ErrorKind::LabelOutOfRange:
    case ErrorKind::LabelMultiplicity:
    case ErrorKind::InconsistentOrientation:
    case ErrorKind::InvalidFace:
    case ErrorKind::DuplicateName:
      return kParse;
    case ErrorKind::NonPlanar:
    case ErrorKind::MultiComponent:
      return kPlanarity;
    case ErrorKind::IoError:
      return kUnreadable;
    default:
      return kFailed;
  }
}

struct InvariantsArgs {
  std::optional<std::string> pd;
  bool json = false;
  std::optional<int> outer_face;
};

int cmd_invariants(const InvariantsArgs& args) {
  std::string text;
  if (args.pd) {
    text = *args.pd;
  } else {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  try {
    const auto code = parse_pd(text);
    const auto d = build_diagram(code, args.outer_face);
    const auto report = build_report(d);
    if (args.json)
      std::cout << to_json(report).dump(2) << '\n';
    else
      std::cout << to_text(report);
    return report.error ? kFailed : kOk;
  } catch (const Error& e) {
    std::cerr << "knotslope: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

struct VerifyArgs {
  std::string table;
  bool json = false;
  bool csv = false;
  bool strict = false;
  std::optional<int> max_crossings;
  unsigned threads = 0;
};

int cmd_verify(const VerifyArgs& args) {
  KnotTable table;
  try {
    table = load_table(args.table);
  } catch (const Error& e) {
    std::cerr << "knotslope: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  ReportOptions options;
  options.max_crossings = args.max_crossings;
  const auto corpus = run_corpus(table, options, args.threads);

  if (args.json) {
    std::cout << to_json(corpus).dump(2) << '\n';
  } else if (args.csv) {
    std::cout << to_csv(corpus);
  } else {
    for (const auto& r : corpus.reports) {
      std::cout << r.name << ": " << to_string(r.theorem());
      if (r.skipped) std::cout << " (skipped: " << r.crossings << " crossings)";
      for (const auto& [key, v] : r.checks.fields())
        if (v == Verdict::Fails) std::cout << " [" << key << " fails]";
      if (r.gap_max) std::cout << " gaps (" << *r.gap_max << ", " << *r.gap_min << ")";
      if (r.error) std::cout << " error: " << *r.error;
      std::cout << '\n';
    }
  }
  std::cerr << summary_line(corpus.summary) << '\n';
  if (corpus.summary.checks_failing > 0) return kFailed;
  if (args.strict && corpus.summary.errors > 0) return kFailed;
  return kOk;
}

struct RandomArgs {
  std::uint64_t seed = kDefaultSeed;
  int count = 100;
  int max_crossings = 8;
};

int cmd_random_check(const RandomArgs& args) {
  RandomDiagramGenerator gen(args.seed);
  int disagreements = 0;
  for (int i = 0; i < args.count; ++i) {
    const auto code = gen.next(args.max_crossings);
    const auto d = build_diagram(code);
    const bool bracket_ok = kauffman_bracket(d) == bracket_oracle(d);
    const bool signature_ok = knot_signature(d).sigma_k == signature_oracle(d);
    if (!bracket_ok || !signature_ok) {
      ++disagreements;
      std::cout << "mismatch (" << (bracket_ok ? "" : "bracket ") << (signature_ok ? "" : "signature ")
                << "): " << code.to_string() << '\n';
    }
  }
  std::cout << args.count << " random diagrams, " << disagreements << " disagreements (seed " << args.seed << ")\n";
  return disagreements == 0 ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jones polynomial, signature and checkerboard boundary slopes of knots from PD codes"};
  app.require_subcommand(1);

  InvariantsArgs inv;
  auto* invariants = app.add_subcommand("invariants", "Full invariant report for one PD code (argument or stdin)");
  invariants->add_option("pd", inv.pd, "PD code such as \"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\"");
  invariants->add_flag("--json", inv.json, "Emit JSON");
  invariants->add_option("--outer-face", inv.outer_face, "Face index to treat as unbounded");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Verify the slope theorem and its identities on a knot table");
  verify->add_option("table", ver.table, "Table file")->required();
  auto* json_flag = verify->add_flag("--json", ver.json, "Emit JSON");
  verify->add_flag("--csv", ver.csv, "Emit CSV")->excludes(json_flag);
  verify->add_flag("--strict", ver.strict, "Fail on per-knot errors as well");
  verify->add_option("--max-crossings", ver.max_crossings, "Skip entries with more crossings");
  verify->add_option("--threads", ver.threads, "Worker threads (0 = hardware concurrency)");

  RandomArgs rnd;
  auto* random = app.add_subcommand("random-check", "Compare state sum and Goeritz signature against the oracles");
  random->add_option("--seed", rnd.seed, "Generator seed");
  random->add_option("--count", rnd.count, "Number of diagrams")->check(CLI::PositiveNumber);
  random->add_option("--max-crossings", rnd.max_crossings, "Crossing limit")->check(CLI::Range(1, 10));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kParse;
  }

  if (*invariants) return cmd_invariants(inv);
  if (*verify) return cmd_verify(ver);
  return cmd_random_check(rnd);
}
