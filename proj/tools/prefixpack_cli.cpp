// prefixpack: decide, construct and inspect two-channel prefix-free codes.
//
// Exit codes: 0 exists/success, 1 not-exists, 2 input error,
// 3 selftest disagreement.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "prefixpack/codes.hpp"
#include "prefixpack/io.hpp"
#include "prefixpack/packer.hpp"
#include "prefixpack/render.hpp"
#include "prefixpack/selftest.hpp"

namespace {

using namespace prefixpack;

constexpr int kExists = 0;
constexpr int kNotExists = 1;
constexpr int kInputError = 2;
constexpr int kDisagreement = 3;

struct Options {
  std::string input;
  std::string output;
  std::string svg;
  std::string format = "detect";
  std::size_t max_m = 4;
  std::uint32_t max_len = 2;
  std::vector<std::uint32_t> arities{2, 3};
};

InputFormat parse_format(const std::string& f) {
  if (f == "json") return InputFormat::json;
  if (f == "text") return InputFormat::text;
  return InputFormat::detect;
}

InstanceFile load(const Options& opt) { return load_instance(opt.input, parse_format(opt.format)); }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
  if (!out) throw InputError("failed writing " + path);
}

Rational file_kraft(const InstanceFile& f) { return kraft_sum(f.q, f.lengths); }

std::optional<ResultEntropy> file_entropy(const InstanceFile& f) {
  if (!f.probs) return std::nullopt;
  auto r = entropy_bound(f.q, f.lengths, SourceDistribution{*f.probs, f.base.value_or(2.0)});
  return ResultEntropy{r.avg_length, r.entropy, r.slack};
}

Decider selftest_decider() {
#ifdef PREFIXPACK_INJECT_FAULT
  return [](const ProblemSpec& s) { return s.lengths.size() == 2 ? !decide_fast(s) : decide_fast(s); };
#else
  return [](const ProblemSpec& s) { return decide_fast(s); };
#endif
}

int cmd_decide(const Options& opt) {
  const bool exists = decide(load(opt).to_spec());
  std::cout << (exists ? "EXISTS" : "NOT-EXISTS") << "\n";
  return exists ? kExists : kNotExists;
}

int cmd_construct(const Options& opt) {
  const InstanceFile file = load(opt);
  const ProblemSpec spec = file.to_spec();
  ResultFile result;
  result.kraft = format_rational(file_kraft(file));
  result.entropy = file_entropy(file);
  if (auto sol = construct(spec)) {
    result.decision = true;
    std::vector<ResultCodeword> words;
    for (const auto& cw : solution_to_codebook(spec, *sol)) {
      words.push_back(ResultCodeword{format_word(cw.c1, spec.arities.q1),
                                     format_word(cw.c2, spec.arities.q2)});
    }
    result.codebook = std::move(words);
  }
  const std::string text = write_result(result);
  if (opt.output.empty()) {
    std::cout << text;
  } else {
    write_file(opt.output, text);
  }
  return result.decision ? kExists : kNotExists;
}

int cmd_kraft(const Options& opt) {
  const Rational sum = file_kraft(load(opt));
  std::cout << format_rational(sum) << " " << (kraft_ok(sum) ? "SATISFIED" : "VIOLATED") << "\n";
  return kExists;
}

int cmd_entropy(const Options& opt) {
  const InstanceFile file = load(opt);
  if (!file.probs) throw InputError("entropy needs \"probs\" in the instance file");
  if (!file.base) throw InputError("entropy needs \"D\" in the instance file");
  const auto r = entropy_bound(file.q, file.lengths, SourceDistribution{*file.probs, *file.base});
  std::ostringstream out;
  out << std::setprecision(12);
  out << "avg_length " << r.avg_length << "\n";
  out << "entropy " << r.entropy << "\n";
  out << "slack " << r.slack << "\n";
  out << "equality " << (r.equality ? "true" : "false") << "\n";
  std::cout << out.str();
  return kExists;
}

int cmd_render(const Options& opt) {
  if (opt.svg.empty()) throw InputError("render needs --svg PATH");
  const ProblemSpec spec = load(opt).to_spec();
  auto sol = construct(spec);
  if (!sol) {
    std::cout << "NOT-EXISTS\n";
    return kNotExists;
  }
  const Codebook cb = solution_to_codebook(spec, *sol);
  write_file(opt.svg, render_svg(render_input_for(spec, *sol, cb)));
  std::cout << "EXISTS\n";
  return kExists;
}

int cmd_selftest(const Options& opt) {
  SelftestBounds bounds{opt.arities, opt.max_m, opt.max_len};
  for (auto q : bounds.arities) {
    if (q < 2) throw InputError("arities must be at least 2");
  }
  const SelftestReport report = run_selftest(bounds, selftest_decider());
  if (!report.passed()) {
    std::cout << "FAIL after " << report.instances << " instances: " << report.detail << "\n";
    std::cout << "instance: " << describe(*report.mismatch) << "\n";
    std::cout << to_instance_json(*report.mismatch) << "\n";
    return kDisagreement;
  }
  std::cout << "PASS " << report.instances << " instances (" << report.packable
            << " packable)\n";
  return kExists;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-channel prefix-free code existence and construction"};
  app.require_subcommand(1);
  Options opt;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "Instance file (JSON or text)")->required();
    sub->add_option("--format", opt.format, "Input format")
        ->check(CLI::IsMember({"detect", "json", "text"}));
  };

  auto* decide_cmd = app.add_subcommand("decide", "Print EXISTS or NOT-EXISTS");
  add_input(decide_cmd);
  auto* construct_cmd = app.add_subcommand("construct", "Write a result file with a codebook");
  add_input(construct_cmd);
  construct_cmd->add_option("--output", opt.output, "Result file (default: stdout)");
  auto* kraft_cmd = app.add_subcommand("kraft", "Exact Kraft sum");
  add_input(kraft_cmd);
  auto* entropy_cmd = app.add_subcommand("entropy", "Average length against entropy");
  add_input(entropy_cmd);
  auto* render_cmd = app.add_subcommand("render", "Draw the packing as SVG");
  add_input(render_cmd);
  render_cmd->add_option("--svg", opt.svg, "SVG output path")->required();
  auto* selftest_cmd = app.add_subcommand("selftest", "Cross-check deciders on small instances");
  selftest_cmd->add_option("--max-m", opt.max_m, "Largest multiset size");
  selftest_cmd->add_option("--max-len", opt.max_len, "Largest codeword length component");
  selftest_cmd->add_option("--arities", opt.arities, "Arity values to combine")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? 0 : kInputError;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e) == 0 ? 0 : kInputError;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (decide_cmd->parsed()) return cmd_decide(opt);
    if (construct_cmd->parsed()) return cmd_construct(opt);
    if (kraft_cmd->parsed()) return cmd_kraft(opt);
    if (entropy_cmd->parsed()) return cmd_entropy(opt);
    if (render_cmd->parsed()) return cmd_render(opt);
    if (selftest_cmd->parsed()) return cmd_selftest(opt);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
