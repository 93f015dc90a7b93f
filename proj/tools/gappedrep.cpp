#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gappedrep/classification.hpp"
#include "gappedrep/gap_constraints.hpp"
#include "gappedrep/oracle.hpp"
#include "gappedrep/repeats.hpp"
#include "gappedrep/runs.hpp"
#include "gappedrep/serialize.hpp"
#include "gappedrep/theory_checks.hpp"
#include "gappedrep/wordgen.hpp"

namespace {

using gappedrep::Word;
using json = nlohmann::ordered_json;

constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct StreamOptions {
  std::string input = "-";
  std::string constraint;
  std::string format = "jsonl";
  std::string checks;
  int max_n = 65536;
  int jobs = 1;
  bool use_oracle = false;
};

std::vector<std::string> read_words(const StreamOptions& opts) {
  std::vector<std::string> words;
  std::istream* in = &std::cin;
  std::ifstream file;
  if (opts.input != "-") {
    file.open(opts.input, std::ios::binary);
    if (!file) throw std::ios_base::failure("cannot open input: " + opts.input);
    in = &file;
  }
  std::string line;
  while (std::getline(*in, line)) {
    if (line.empty()) continue;
    if (static_cast<int>(line.size()) > opts.max_n)
      throw std::ios_base::failure("input word longer than --max-n (" +
                                   std::to_string(opts.max_n) + ")");
    words.push_back(line);
  }
  return words;
}

// Constraint domain per word: copy lengths stay below n, generation
// windows range up to 2|r| <= 2n.
gappedrep::GapConstraint bind_for(const gappedrep::ConstraintSpec& spec, int n) {
  return spec.bind(std::max(2, 2 * n));
}

std::vector<std::string> parse_checks(const std::string& checks) {
  std::vector<std::string> ids;
  std::stringstream ss(checks);
  std::string id;
  while (std::getline(ss, id, ',')) {
    if (!id.empty()) ids.push_back(id);
  }
  return ids;
}

// Renders every word independently (optionally across threads) and emits
// the outputs in input order.
template <typename Fn>
void emit_per_word(const std::vector<std::string>& words, int jobs, const Fn& render) {
  std::vector<std::string> outputs(words.size());
  if (jobs <= 1) {
    for (size_t k = 0; k < words.size(); ++k) outputs[k] = render(words[k]);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    for (int t = 0; t < jobs; ++t) {
      workers.emplace_back([&, t] {
        try {
          for (size_t k = next.fetch_add(1); k < words.size(); k = next.fetch_add(1))
            outputs[k] = render(words[k]);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : workers) th.join();
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
  }
  for (const std::string& out : outputs) std::cout << out;
}

// TSV streams carry one header line; emit it before the first word's rows.
template <typename PerWord>
void stream_records(const std::vector<std::string>& words, const StreamOptions& opts,
                    const json& sample, const PerWord& per_word) {
  bool header_needed = opts.format == "tsv" && !words.empty();
  if (header_needed) std::cout << gappedrep::tsv_header(sample) << '\n';
  emit_per_word(words, opts.jobs, [&](const std::string& text) {
    std::string out;
    per_word(text, [&](const json& record) {
      out += opts.format == "tsv" ? gappedrep::tsv_row(record) : record.dump();
      out.push_back('\n');
    });
    return out;
  });
}

int cmd_repeats(const StreamOptions& opts) {
  const auto spec = gappedrep::ConstraintSpec::parse(opts.constraint);
  const auto words = read_words(opts);
  const json sample = gappedrep::repeat_record(gappedrep::GappedRepeat{1, 1, 2});
  stream_records(words, opts, sample, [&](const std::string& text, const auto& emit) {
    const Word w(text);
    const auto con = bind_for(spec, w.size());
    const auto all = opts.use_oracle ? gappedrep::oracle::naive_maximal_gapped_repeats(w)
                                     : gappedrep::enumerate_maximal_gapped_repeats(w);
    for (const auto& rep : gappedrep::filter_repeats(all, con))
      emit(gappedrep::repeat_record(rep));
  });
  return 0;
}

int cmd_runs(const StreamOptions& opts) {
  const auto words = read_words(opts);
  const json sample = gappedrep::run_record(gappedrep::Run{1, 2, 1});
  stream_records(words, opts, sample, [&](const std::string& text, const auto& emit) {
    const Word w(text);
    const auto runs =
        opts.use_oracle ? gappedrep::oracle::naive_runs(w) : gappedrep::enumerate_runs(w);
    for (const auto& r : runs) emit(gappedrep::run_record(r));
  });
  return 0;
}

int cmd_classify(const StreamOptions& opts) {
  const auto spec = gappedrep::ConstraintSpec::parse(opts.constraint);
  const auto words = read_words(opts);
  json sample = gappedrep::repeat_record(gappedrep::GappedRepeat{1, 1, 2});
  sample["class"] = "";
  sample["subclass"] = nullptr;
  sample["semi_prefix"] = false;
  sample["semi_suffix"] = false;
  sample["gen_side"] = nullptr;
  stream_records(words, opts, sample, [&](const std::string& text, const auto& emit) {
    const Word w(text);
    const auto con = bind_for(spec, w.size());
    const gappedrep::RunIndex index(gappedrep::enumerate_runs(w));
    const auto all = gappedrep::enumerate_maximal_gapped_repeats(w);
    for (const auto& rep : gappedrep::filter_repeats(all, con))
      emit(gappedrep::classified_record(gappedrep::classify_repeat(w, rep, index)));
  });
  return 0;
}

int cmd_verify(const StreamOptions& opts) {
  const auto spec = gappedrep::ConstraintSpec::parse(opts.constraint);
  const auto ids = parse_checks(opts.checks);
  const auto words = read_words(opts);
  std::atomic<bool> any_failed{false};
  gappedrep::CheckReport sample_report;
  sample_report.id = "C1";
  const json sample = gappedrep::check_record(sample_report);
  stream_records(words, opts, sample, [&](const std::string& text, const auto& emit) {
    const Word w(text);
    const auto con = bind_for(spec, w.size());
    for (const auto& report : gappedrep::check_word(w, con, ids)) {
      if (report.status == gappedrep::CheckReport::Status::fail) any_failed = true;
      emit(gappedrep::check_record(report));
    }
  });
  return any_failed ? kExitCheckFailure : 0;
}

int cmd_bound(const StreamOptions& opts) {
  const auto spec = gappedrep::ConstraintSpec::parse(opts.constraint);
  const auto words = read_words(opts);
  const json sample = gappedrep::bound_record(1, gappedrep::ConstraintStats{}, 0);
  stream_records(words, opts, sample, [&](const std::string& text, const auto& emit) {
    const Word w(text);
    const auto con = bind_for(spec, w.size());
    const long long count = gappedrep::count_admitted_repeats(w, con);
    emit(gappedrep::bound_record(w.size(), gappedrep::stats(con), count));
  });
  return 0;
}

struct GenOptions {
  std::string kind = "random";
  long long length = 0;
  int alphabet = 2;
  std::uint64_t seed = 0;
  std::string block;
  long long count = 0;
};

int cmd_gen(const GenOptions& opts) {
  gappedrep::GeneratorSpec spec;
  if (opts.kind == "random")
    spec = gappedrep::GeneratorSpec::random(opts.length, opts.alphabet, opts.seed);
  else if (opts.kind == "fibonacci")
    spec = gappedrep::GeneratorSpec::fibonacci(opts.length);
  else if (opts.kind == "thue-morse")
    spec = gappedrep::GeneratorSpec::thue_morse(opts.length);
  else if (opts.kind == "power")
    spec = gappedrep::GeneratorSpec::power(opts.block, opts.count);
  else
    throw CLI::ValidationError("--kind", "expected random|fibonacci|thue-morse|power");
  std::cout << gappedrep::generate(spec).str() << '\n';
  return 0;
}

void add_stream_flags(CLI::App* cmd, StreamOptions& opts, bool needs_constraint) {
  cmd->add_option("-i,--input", opts.input, "Input file of newline-separated words ('-' = stdin)");
  cmd->add_option("-f,--format", opts.format, "Output format")
      ->check(CLI::IsMember({"jsonl", "tsv"}))
      ->capture_default_str();
  cmd->add_option("--max-n", opts.max_n, "Reject words longer than this")->capture_default_str();
  cmd->add_option("-j,--jobs", opts.jobs, "Worker threads across input words")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  auto* con = cmd->add_option("-c,--constraint", opts.constraint,
                              "Gap constraint: alpha:<rat> | band:<rat>:<rat> | "
                              "affine:<a>:<b>:<c>:<d> | table:<path>");
  if (needs_constraint) con->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal gapped repeats, runs, and their counting calculus"};
  app.require_subcommand(1);

  StreamOptions repeats_opts, runs_opts, classify_opts, verify_opts, bound_opts;
  GenOptions gen_opts;

  auto* repeats_cmd = app.add_subcommand("repeats", "Constraint-admitted maximal gapped repeats");
  add_stream_flags(repeats_cmd, repeats_opts, true);
  repeats_cmd->add_flag("--oracle", repeats_opts.use_oracle, "Use the brute-force enumerator")
      ->group("");

  auto* runs_cmd = app.add_subcommand("runs", "Maximal repetitions");
  add_stream_flags(runs_cmd, runs_opts, false);
  runs_cmd->add_flag("--oracle", runs_opts.use_oracle, "Use the brute-force enumerator")
      ->group("");

  auto* classify_cmd = app.add_subcommand("classify", "Admitted repeats with their taxonomy");
  add_stream_flags(classify_cmd, classify_opts, true);

  auto* verify_cmd = app.add_subcommand("verify", "Run the structural check catalogue");
  add_stream_flags(verify_cmd, verify_opts, true);
  verify_cmd->add_option("--checks", verify_opts.checks,
                         "Comma-separated check ids (default: all of C1..C22)");

  auto* bound_cmd = app.add_subcommand("bound", "Admitted-repeat count vs the linear bound");
  add_stream_flags(bound_cmd, bound_opts, true);

  auto* gen_cmd = app.add_subcommand("gen", "Write a deterministic word to stdout");
  gen_cmd->add_option("--kind", gen_opts.kind, "random|fibonacci|thue-morse|power")
      ->capture_default_str();
  gen_cmd->add_option("--length", gen_opts.length, "Word length");
  gen_cmd->add_option("--alphabet", gen_opts.alphabet, "Alphabet size (random)")
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen_opts.seed, "Seed (random)");
  gen_cmd->add_option("--block", gen_opts.block, "Block to repeat (power)");
  gen_cmd->add_option("--count", gen_opts.count, "Repetition count (power)");

  try {
    app.parse(argc, argv);
    if (repeats_cmd->parsed()) return cmd_repeats(repeats_opts);
    if (runs_cmd->parsed()) return cmd_runs(runs_opts);
    if (classify_cmd->parsed()) return cmd_classify(classify_opts);
    if (verify_cmd->parsed()) return cmd_verify(verify_opts);
    if (bound_cmd->parsed()) return cmd_bound(bound_opts);
    if (gen_cmd->parsed()) return cmd_gen(gen_opts);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "gappedrep: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gappedrep: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "gappedrep: " << e.what() << '\n';
    return kExitIo;
  }
  return 0;
}
