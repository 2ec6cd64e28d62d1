#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "trialmatch/pipeline.hpp"
#include "trialmatch/text_util.hpp"

namespace tmatch = trialmatch;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

struct Overrides {
  std::string config;
  std::string data_dir;
  std::string trials_dir;
  std::string corpus;
  std::string topics;
  std::string output_dir;
  std::string run_specs;
  std::string qrels;
  std::string medians;
  std::vector<std::string> runs;
  std::vector<std::string> run_files;
  std::optional<double> k1;
  std::optional<double> b;
  std::optional<long long> depth;
  std::optional<int> threads;
  std::optional<std::string> format;
  std::optional<std::string> failed;
  bool strict = false;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "JSON pipeline config");
  cmd->add_option("--data-dir", o.data_dir, "directory holding default data files");
  cmd->add_option("--out", o.output_dir, "output directory");
  cmd->add_option("--threads", o.threads, "worker thread cap");
  cmd->add_flag("--strict", o.strict, "treat skipped inputs as errors");
}

void add_ingest(CLI::App* cmd, Overrides& o) { cmd->add_option("--trials", o.trials_dir, "trial XML directory"); }

void add_run(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--corpus", o.corpus, "corpus store");
  cmd->add_option("--topics", o.topics, "topics XML");
  cmd->add_option("--runs", o.runs, "runs to execute (default: all)")->delimiter(',');
  cmd->add_option("--run-specs", o.run_specs, "INI run definitions");
  cmd->add_option("--k1", o.k1, "BM25 k1");
  cmd->add_option("--b", o.b, "BM25 b");
  cmd->add_option("--depth", o.depth, "results per topic");
}

void add_eval(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--qrels", o.qrels, "qrels file");
  cmd->add_option("--medians", o.medians, "per-topic medians file");
  cmd->add_option("--format", o.format, "report format: text or tsv");
  cmd->add_option("--failed", o.failed, "failed-topic rule: any_depth or top10");
}

tmatch::PipelineConfig make_config(const Overrides& o) {
  tmatch::PipelineConfig c = o.config.empty() ? tmatch::PipelineConfig{} : tmatch::load_pipeline_config(o.config);
  auto set = [](tmatch::fs::path& target, const std::string& v) {
    if (!v.empty()) target = v;
  };
  set(c.data_dir, o.data_dir);
  set(c.trials_dir, o.trials_dir);
  set(c.corpus, o.corpus);
  set(c.topics, o.topics);
  set(c.output_dir, o.output_dir);
  set(c.run_specs, o.run_specs);
  set(c.qrels, o.qrels);
  set(c.medians, o.medians);
  if (!o.runs.empty()) c.runs = o.runs;
  if (o.k1) c.bm25.k1 = *o.k1;
  if (o.b) c.bm25.b = *o.b;
  if (o.depth) {
    if (*o.depth < 1) throw tmatch::Error(tmatch::ErrorCode::kInvalidConfig, "depth must be >= 1");
    c.depth = static_cast<std::size_t>(*o.depth);
  }
  if (o.threads) c.threads = *o.threads;
  if (o.format) c.format = tmatch::output_format_from_string(*o.format);
  if (o.failed) {
    if (*o.failed == "any_depth") c.failed_mode = tmatch::FailedMode::kAnyDepth;
    else if (*o.failed == "top10") c.failed_mode = tmatch::FailedMode::kTop10;
    else throw tmatch::Error(tmatch::ErrorCode::kInvalidConfig, "--failed must be any_depth or top10");
  }
  if (o.strict) c.strict = true;
  tmatch::resolve_defaults(c);
  return c;
}

void print_warnings(const tmatch::Diagnostics& diag) {
  for (const auto& w : diag.warnings) std::cerr << "warning: " << w << '\n';
}

void check_strict(const tmatch::PipelineConfig& c, const tmatch::Diagnostics& diag) {
  if (c.strict && !diag.warnings.empty()) {
    throw tmatch::Error(tmatch::ErrorCode::kInvalidConfig, std::to_string(diag.warnings.size()) + " warning(s) under --strict");
  }
}

void do_ingest(const tmatch::PipelineConfig& c, const tmatch::Resources& r) {
  tmatch::Diagnostics diag;
  auto corpus = tmatch::run_ingest(c, r, diag);
  print_warnings(diag);
  std::cout << "parsed " << corpus.stats.total_parsed << " trials, dropped " << corpus.stats.dropped_no_criteria
            << " without criteria, kept " << corpus.trials.size() << "\n"
            << "corpus written to " << c.corpus_path().string() << '\n';
}

std::vector<tmatch::fs::path> do_run(const tmatch::PipelineConfig& c, const tmatch::Resources& r) {
  tmatch::Diagnostics diag;
  auto corpus = tmatch::load_corpus(c.corpus_path());
  auto topics = tmatch::parse_topics(tmatch::read_file(c.topics));
  auto files = tmatch::run_retrieval(c, r, corpus, topics, diag);
  print_warnings(diag);
  for (const auto& f : files) std::cout << "wrote " << f.string() << '\n';
  check_strict(c, diag);
  return files;
}

void do_eval(const tmatch::PipelineConfig& c, const std::vector<tmatch::fs::path>& files) {
  tmatch::Diagnostics diag;
  auto cmp = tmatch::run_eval(c, files, diag);
  print_warnings(diag);
  std::cout << tmatch::format_comparison(cmp, c.format);
  check_strict(c, diag);
}

std::vector<tmatch::fs::path> run_files_for(const tmatch::PipelineConfig& c, const Overrides& o) {
  std::vector<tmatch::fs::path> files(o.run_files.begin(), o.run_files.end());
  if (!files.empty()) return files;
  if (!c.runs.empty()) {
    for (const auto& id : c.runs) files.push_back(c.run_path(id));
    return files;
  }
  for (const auto& spec : c.run_specs.empty() ? tmatch::builtin_run_specs() : tmatch::load_run_specs(c.run_specs)) {
    files.push_back(c.run_path(spec.run_id));
  }
  return files;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Patient to clinical trial matching: ingest, retrieve, evaluate"};
  app.require_subcommand(1);
  Overrides o;

  auto* ingest = app.add_subcommand("ingest", "parse trial XML into a corpus store");
  add_common(ingest, o);
  add_ingest(ingest, o);

  auto* run = app.add_subcommand("run", "build indices and write one run file per selected run");
  add_common(run, o);
  add_run(run, o);

  auto* eval = app.add_subcommand("eval", "score run files against qrels");
  add_common(eval, o);
  add_eval(eval, o);
  eval->add_option("--runs", o.runs, "runs to score (default: all)")->delimiter(',');
  eval->add_option("run_files", o.run_files, "run files (default: run files in the output directory)");

  auto* pipeline = app.add_subcommand("pipeline", "ingest, run and eval in sequence");
  add_common(pipeline, o);
  add_ingest(pipeline, o);
  add_run(pipeline, o);
  add_eval(pipeline, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    tmatch::PipelineConfig c = make_config(o);
    if (ingest->parsed()) {
      tmatch::validate(c, tmatch::Stage::kIngest);
      tmatch::Resources r;
      r.rules = tmatch::CriteriaRules::load(c.criteria_rules);
      do_ingest(c, r);
    } else if (run->parsed()) {
      tmatch::validate(c, tmatch::Stage::kRun);
      do_run(c, tmatch::load_resources(c));
    } else if (eval->parsed()) {
      tmatch::validate(c, tmatch::Stage::kEval);
      do_eval(c, run_files_for(c, o));
    } else if (pipeline->parsed()) {
      tmatch::validate(c, tmatch::Stage::kIngest);
      tmatch::validate(c, tmatch::Stage::kEval);
      tmatch::Diagnostics diag;
      auto r = tmatch::load_resources(c, &diag);
      print_warnings(diag);
      do_ingest(c, r);
      tmatch::validate(c, tmatch::Stage::kRun);
      do_eval(c, do_run(c, r));
    }
  } catch (const tmatch::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}
