// Command-line driver: translate LTL formulae to self-loop alternating
// automata, cross-check the translations against lasso-word oracles, and
// benchmark the three construction modes.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "slaa/backtranslate.hpp"
#include "slaa/hoa.hpp"
#include "slaa/oracle.hpp"
#include "slaa/random.hpp"
#include "slaa/simplify.hpp"
#include "slaa/translate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitCheckFailed = 3;

slaa::Mode parse_mode(const std::string& name) {
  if (name == "basic") return slaa::Mode::Basic;
  if (name == "f") return slaa::Mode::F;
  return slaa::Mode::FG;
}

std::vector<std::string> read_formula_lines(const std::string& path) {
  std::vector<std::string> lines;
  std::istream* in = &std::cin;
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) throw std::runtime_error("cannot open '" + path + "'");
    in = &file;
  }
  std::string line;
  while (std::getline(*in, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      lines.push_back(line);
  return lines;
}

struct TranslateArgs {
  std::string formula;
  std::string file;
  std::string mode = "fg";
  std::string format = "hoa";
  std::string out;
  bool no_simplify = false;
  bool reuse_marks = false;
};

int cmd_translate(const TranslateArgs& args) {
  std::vector<std::string> inputs;
  if (!args.formula.empty()) inputs.push_back(args.formula);
  if (!args.file.empty()) {
    auto lines = read_formula_lines(args.file);
    inputs.insert(inputs.end(), lines.begin(), lines.end());
  }
  if (inputs.empty()) {
    std::cerr << "error: no formula given (use -f or --file)\n";
    return kExitUsage;
  }

  std::ostringstream buffer;
  for (const std::string& text : inputs) {
    slaa::Formula f;
    try {
      f = slaa::parse_formula(text);
    } catch (const slaa::ParseError& e) {
      std::cerr << "parse error in '" << text << "': " << e.what() << "\n";
      return kExitParse;
    }
    slaa::TranslateOptions opt;
    opt.mode = parse_mode(args.mode);
    opt.reuse_marks = args.reuse_marks;
    slaa::Slaa a = slaa::translate(f, opt);
    if (!args.no_simplify) a = slaa::simplify(a);

    if (args.format == "hoa") {
      buffer << slaa::emit_hoa(a);
    } else if (args.format == "dot") {
      buffer << slaa::emit_dot(a);
    } else {
      slaa::SlaaStats st = slaa::stats(a);
      buffer << "states=" << st.reachable_states << " marks=" << st.marks
             << " det=" << (st.is_deterministic ? "true" : "false")
             << " nonalt=" << (st.is_nonalternating ? "true" : "false")
             << "\n";
    }
  }

  if (args.out.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream out(args.out);
    if (!out) {
      std::cerr << "error: cannot write '" << args.out << "'\n";
      return kExitUsage;
    }
    out << buffer.str();
  }
  return kExitOk;
}

struct RandomArgs {
  int count = 100;
  std::uint32_t seed = 1;
  std::string preset = "rand1";
  int words = 20;
  int tree_size = 15;
  int ap_count = 4;
  bool roundtrip = false;
  bool mergeable_only = false;
  std::string out;
};

std::vector<slaa::Formula> generate_formulae(const RandomArgs& args) {
  slaa::GenPriorities pr = slaa::preset_priorities(args.preset);
  std::vector<slaa::Formula> out;
  // Rejection sampling for --mergeable-only, with an attempt cap so a
  // preset with few mergeable formulae cannot loop forever.
  constexpr std::uint64_t kAttemptCap = 1000000;
  std::uint32_t seed = args.seed;
  std::uint64_t attempts = 0;
  while (static_cast<int>(out.size()) < args.count) {
    if (++attempts > kAttemptCap)
      throw std::runtime_error("gave up searching for mergeable formulae");
    slaa::Formula f =
        slaa::random_formula(seed++, args.ap_count, args.tree_size, pr);
    if (args.mergeable_only && !slaa::is_mergeable(f)) continue;
    out.push_back(f);
  }
  return out;
}

int cmd_check(const RandomArgs& args) {
  auto formulae = generate_formulae(args);
  const std::pair<const char*, slaa::Mode> modes[] = {
      {"basic", slaa::Mode::Basic}, {"f", slaa::Mode::F},
      {"fg", slaa::Mode::FG}};
  int failures = 0;
  bool first_failure_reported = false;
  for (std::size_t i = 0; i < formulae.size(); ++i) {
    const slaa::Formula& f = formulae[i];
    slaa::LassoSampler sampler(args.seed + static_cast<std::uint32_t>(i),
                               slaa::atomic_props(f));
    std::vector<slaa::LassoWord> words;
    for (int k = 0; k < args.words; ++k) words.push_back(sampler.next());

    bool failed = false;
    auto report = [&](const std::string& stage, std::size_t word_idx) {
      failed = true;
      if (!first_failure_reported) {
        first_failure_reported = true;
        std::cout << "FAIL formula='" << f.to_string() << "' stage=" << stage
                  << " word=" << words[word_idx].to_string() << "\n";
      }
    };
    for (auto [name, mode] : modes) {
      slaa::Slaa raw = slaa::translate(f, {.mode = mode});
      slaa::Slaa simp = slaa::simplify(raw);
      auto r1 = slaa::cross_check(f, raw, words);
      if (!r1.ok()) report(std::string(name) + "/raw", r1.disagreements[0]);
      auto r2 = slaa::cross_check(f, simp, words);
      if (!r2.ok())
        report(std::string(name) + "/simplified", r2.disagreements[0]);
      if (args.roundtrip) {
        slaa::Formula back = slaa::slaa_to_ltl(simp);
        for (std::size_t w = 0; w < words.size(); ++w)
          if (slaa::eval_lasso(back, words[w]) !=
              slaa::eval_lasso(f, words[w])) {
            report(std::string(name) + "/roundtrip", w);
            break;
          }
      }
    }
    if (failed) ++failures;
  }
  std::cout << (failures ? "FAIL " : "PASS ")
            << (formulae.size() - failures) << "/" << formulae.size() << "\n";
  return failures ? kExitCheckFailed : kExitOk;
}

int cmd_bench(const RandomArgs& args) {
  auto formulae = generate_formulae(args);
  const std::pair<const char*, slaa::Mode> modes[] = {
      {"basic", slaa::Mode::Basic}, {"f", slaa::Mode::F},
      {"fg", slaa::Mode::FG}};

  std::ostringstream csv;
  csv << "# ltl2slaa bench csv v1\n";
  csv << "formula";
  for (auto [name, mode] : modes)
    csv << "," << name << "_states," << name << "_marks," << name << "_det,"
        << name << "_nonalt";
  csv << "\n";

  long total_states[3] = {0, 0, 0};
  long total_marks[3] = {0, 0, 0};
  int det_count[3] = {0, 0, 0};
  int nonalt_count[3] = {0, 0, 0};

  for (const slaa::Formula& f : formulae) {
    csv << '"' << f.to_string() << '"';
    for (int m = 0; m < 3; ++m) {
      slaa::Slaa a = slaa::simplify(slaa::translate(f, {.mode = modes[m].second}));
      slaa::SlaaStats st = slaa::stats(a);
      total_states[m] += st.reachable_states;
      total_marks[m] += st.marks;
      det_count[m] += st.is_deterministic;
      nonalt_count[m] += st.is_nonalternating;
      csv << "," << st.reachable_states << "," << st.marks << ","
          << (st.is_deterministic ? "true" : "false") << ","
          << (st.is_nonalternating ? "true" : "false");
    }
    csv << "\n";
  }

  if (args.out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(args.out);
    if (!out) {
      std::cerr << "error: cannot write '" << args.out << "'\n";
      return kExitUsage;
    }
    out << csv.str();
  }

  std::cout << "cumulative (" << formulae.size() << " formulae, preset "
            << args.preset << ")\n";
  std::cout << "  mode    states  marks\n";
  for (int m = 0; m < 3; ++m)
    std::cout << "  " << modes[m].first << (m == 0 ? "  " : m == 1 ? "      " : "     ")
              << total_states[m] << "  " << total_marks[m] << "\n";
  std::cout << "branching\n";
  std::cout << "  mode    nonalternating  deterministic\n";
  for (int m = 0; m < 3; ++m)
    std::cout << "  " << modes[m].first << (m == 0 ? "  " : m == 1 ? "      " : "     ")
              << nonalt_count[m] << "  " << det_count[m] << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LTL to self-loop alternating automata translator"};
  app.require_subcommand(1);

  TranslateArgs targs;
  CLI::App* translate = app.add_subcommand("translate", "translate LTL to SLAA");
  translate->add_option("-f,--formula", targs.formula, "formula text");
  translate->add_option("--file", targs.file, "file with one formula per line ('-' = stdin)");
  translate->add_option("--mode", targs.mode, "translation mode")
      ->check(CLI::IsMember({"basic", "f", "fg"}))
      ->default_str("fg");
  translate->add_option("--format", targs.format, "output format")
      ->check(CLI::IsMember({"hoa", "dot", "stats"}))
      ->default_str("hoa");
  translate->add_option("--out", targs.out, "output file (default stdout)");
  translate->add_flag("--no-simplify", targs.no_simplify, "skip simplification");
  translate->add_flag("--reuse-marks", targs.reuse_marks,
                      "share orange marks across F-subformulae (f mode)");

  RandomArgs cargs;
  CLI::App* check = app.add_subcommand("check", "cross-check translations against the LTL evaluator");
  check->add_option("--random", cargs.count, "number of random formulae");
  check->add_option("--seed", cargs.seed, "random seed");
  check->add_option("--preset", cargs.preset, "generator preset")
      ->check(CLI::IsMember({"rand1", "rand2", "rand4", "randfg"}));
  check->add_option("--words", cargs.words, "lasso words per formula");
  check->add_option("--tree-size", cargs.tree_size, "formula tree size");
  check->add_option("--ap", cargs.ap_count, "atomic proposition count");
  check->add_flag("--roundtrip", cargs.roundtrip,
                  "also check the SLAA-to-LTL round trip");
  check->add_flag("--mergeable-only", cargs.mergeable_only,
                  "only mergeable formulae");

  RandomArgs bargs;
  CLI::App* bench = app.add_subcommand("bench", "benchmark the three modes");
  bench->add_option("--random", bargs.count, "number of random formulae");
  bench->add_option("--seed", bargs.seed, "random seed");
  bench->add_option("--preset", bargs.preset, "generator preset")
      ->check(CLI::IsMember({"rand1", "rand2", "rand4", "randfg"}));
  bench->add_option("--tree-size", bargs.tree_size, "formula tree size");
  bench->add_option("--ap", bargs.ap_count, "atomic proposition count");
  bench->add_option("--out", bargs.out, "CSV output file (default stdout)");
  bench->add_flag("--mergeable-only", bargs.mergeable_only,
                  "only mergeable formulae");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (targs.reuse_marks && targs.mode != "f") {
    std::cerr << "error: --reuse-marks only applies to --mode f\n";
    return kExitUsage;
  }

  try {
    if (translate->parsed()) return cmd_translate(targs);
    if (check->parsed()) return cmd_check(cargs);
    return cmd_bench(bargs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
