#include "trialmatch/pipeline.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include "json.hpp"

#include "trialmatch/text_util.hpp"

namespace trialmatch {

namespace {

using nlohmann::json;

fs::path resolve(const fs::path& base, const std::string& p) {
  fs::path path(p);
  return path.is_relative() && !base.empty() ? base / path : path;
}

void fill(fs::path& target, const fs::path& data_dir, const char* name) {
  if (target.empty()) target = data_dir / name;
}

void require_file(const fs::path& p, const char* what) {
  if (p.empty()) throw Error(ErrorCode::kInvalidConfig, std::string(what) + " path not set");
  if (!fs::exists(p)) throw Error(ErrorCode::kInvalidConfig, std::string(what) + " not found: " + p.string());
}

// Runs body(i) for i in [0, n) in parallel and rethrows the first failure.
template <typename F>
void parallel_for(std::size_t n, F&& body) {
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(trialmatch_parallel_for)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

fs::path PipelineConfig::run_path(const std::string& run_id) const {
  return output_dir / (run_tag_prefix + run_id + ".run");
}

PipelineConfig parse_pipeline_config(std::string_view text, const fs::path& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidConfig, e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::kInvalidConfig, "config must be a JSON object");

  PipelineConfig c;
  const std::pair<const char*, fs::path PipelineConfig::*> paths[] = {
      {"data_dir", &PipelineConfig::data_dir},
      {"trials_dir", &PipelineConfig::trials_dir},
      {"corpus", &PipelineConfig::corpus},
      {"topics", &PipelineConfig::topics},
      {"lexicon", &PipelineConfig::lexicon},
      {"triggers", &PipelineConfig::triggers},
      {"criteria_rules", &PipelineConfig::criteria_rules},
      {"genders", &PipelineConfig::genders},
      {"ranges", &PipelineConfig::ranges},
      {"clinvar_aliases", &PipelineConfig::clinvar_aliases},
      {"family_cues", &PipelineConfig::family_cues},
      {"stopwords", &PipelineConfig::stopwords},
      {"run_specs", &PipelineConfig::run_specs},
      {"output_dir", &PipelineConfig::output_dir},
      {"qrels", &PipelineConfig::qrels},
      {"medians", &PipelineConfig::medians},
  };

  try {
    for (const auto& [key, value] : j.items()) {
      auto p = std::find_if(std::begin(paths), std::end(paths), [&](const auto& e) { return key == e.first; });
      if (p != std::end(paths)) {
        c.*(p->second) = resolve(base_dir, value.get<std::string>());
      } else if (key == "runs") {
        c.runs = value.get<std::vector<std::string>>();
      } else if (key == "run_tag_prefix") {
        c.run_tag_prefix = value.get<std::string>();
      } else if (key == "k1") {
        c.bm25.k1 = value.get<double>();
      } else if (key == "b") {
        c.bm25.b = value.get<double>();
      } else if (key == "depth") {
        auto d = value.get<long long>();
        if (d < 1) throw Error(ErrorCode::kInvalidConfig, "depth must be >= 1");
        c.depth = static_cast<std::size_t>(d);
      } else if (key == "threads") {
        c.threads = value.get<int>();
      } else if (key == "negation_window") {
        c.negation_window = value.get<std::size_t>();
      } else if (key == "strict") {
        c.strict = value.get<bool>();
      } else if (key == "failed") {
        auto f = value.get<std::string>();
        if (f == "any_depth") c.failed_mode = FailedMode::kAnyDepth;
        else if (f == "top10") c.failed_mode = FailedMode::kTop10;
        else throw Error(ErrorCode::kInvalidConfig, "failed must be any_depth or top10");
      } else if (key == "format") {
        c.format = output_format_from_string(value.get<std::string>());
      } else {
        throw Error(ErrorCode::kInvalidConfig, "unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidConfig, e.what());
  }
  return c;
}

PipelineConfig load_pipeline_config(const fs::path& path) {
  return parse_pipeline_config(read_file(path), path.parent_path());
}

void resolve_defaults(PipelineConfig& c) {
  if (c.data_dir.empty()) c.data_dir = TRIALMATCH_DATA_DIR;
  fill(c.lexicon, c.data_dir, "lexicon.tsv");
  fill(c.triggers, c.data_dir, "negex_triggers.tsv");
  fill(c.criteria_rules, c.data_dir, "criteria_rules.txt");
  fill(c.genders, c.data_dir, "gender_synonyms.txt");
  fill(c.ranges, c.data_dir, "reference_ranges.tsv");
  fill(c.clinvar_aliases, c.data_dir, "clinvar_aliases.tsv");
  fill(c.family_cues, c.data_dir, "family_cues.txt");
  fill(c.stopwords, c.data_dir, "stopwords.txt");
}

void validate(const PipelineConfig& c, Stage stage) {
  if (c.depth < 1) throw Error(ErrorCode::kInvalidConfig, "depth must be >= 1");
  if (c.bm25.k1 < 0 || c.bm25.b < 0 || c.bm25.b > 1) throw Error(ErrorCode::kInvalidConfig, "need k1 >= 0, 0 <= b <= 1");
  if (c.output_dir.empty()) throw Error(ErrorCode::kInvalidConfig, "output_dir not set");
  switch (stage) {
    case Stage::kIngest:
      require_file(c.trials_dir, "trials_dir");
      require_file(c.criteria_rules, "criteria_rules");
      break;
    case Stage::kRun:
      require_file(c.corpus_path(), "corpus");
      require_file(c.topics, "topics");
      require_file(c.lexicon, "lexicon");
      require_file(c.triggers, "triggers");
      require_file(c.genders, "genders");
      require_file(c.ranges, "ranges");
      require_file(c.clinvar_aliases, "clinvar_aliases");
      require_file(c.family_cues, "family_cues");
      require_file(c.stopwords, "stopwords");
      if (!c.run_specs.empty()) require_file(c.run_specs, "run_specs");
      break;
    case Stage::kEval:
      require_file(c.qrels, "qrels");
      if (!c.medians.empty()) require_file(c.medians, "medians");
      break;
  }
}

Resources load_resources(const PipelineConfig& c, Diagnostics* diag) {
  Resources r;
  r.rules = CriteriaRules::load(c.criteria_rules);
  r.lexicon = Lexicon::load(c.lexicon, diag);
  r.triggers = TriggerSet::load(c.triggers);
  r.metadata.genders = GenderLexicon::load(c.genders);
  r.metadata.variables = ClinicalVariables::load(c.ranges, c.clinvar_aliases);
  r.metadata.family = FamilyCues::load(c.family_cues);
  r.analyzer = Analyzer(Tokenizer::load(c.stopwords));
  r.runs = c.run_specs.empty() ? builtin_run_specs() : load_run_specs(c.run_specs);
  return r;
}

std::vector<const RunSpec*> selected_runs(const PipelineConfig& c, const Resources& r) {
  std::vector<const RunSpec*> out;
  if (c.runs.empty()) {
    for (const auto& spec : r.runs) out.push_back(&spec);
  } else {
    for (const auto& id : c.runs) out.push_back(&find_run(r.runs, id));
  }
  return out;
}

Corpus run_ingest(const PipelineConfig& c, const Resources& r, Diagnostics& diag) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(c.trials_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".xml") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  Corpus corpus;
  for (const auto& file : files) {
    try {
      corpus.add(parse_trial_xml(read_file(file)));
    } catch (const Error& e) {
      if (c.strict) throw Error(e.code(), file.string() + ": " + e.what());
      diag.warn("skipped " + file.string() + ": " + e.what());
    }
  }
  corpus.stats.total_parsed = corpus.trials.size();
  corpus = drop_uncriterioned(std::move(corpus), r.rules);

  fs::create_directories(c.corpus_path().parent_path().empty() ? fs::path(".") : c.corpus_path().parent_path());
  save_corpus(corpus, c.corpus_path());
  return corpus;
}

std::vector<fs::path> run_retrieval(const PipelineConfig& c, const Resources& r, const Corpus& corpus,
                                    const std::vector<Topic>& topics, Diagnostics& diag) {
  if (c.threads > 0) omp_set_num_threads(c.threads);
  fs::create_directories(c.output_dir);

  std::vector<const TrialDoc*> trials;
  for (const auto& [_, t] : corpus.trials) trials.push_back(&t);

  ExtractionContext ctx{r.lexicon, r.triggers, r.metadata, NegationParams{c.negation_window}};
  std::vector<fs::path> written;
  for (const RunSpec* spec : selected_runs(c, r)) {
    std::vector<Representation> reprs(trials.size());
    parallel_for(trials.size(), [&](std::size_t i) { reprs[i] = build_trial_repr(*trials[i], *spec, ctx); });

    std::vector<Query> queries;
    for (const auto& topic : topics) {
      queries.push_back({topic.topic_id, build_topic_repr(topic, *spec, ctx).fields.at(std::string(kUnifiedField))});
    }

    auto index_of = [&](std::string_view field) {
      std::vector<IndexedDocument> docs;
      docs.reserve(reprs.size());
      for (const auto& repr : reprs) docs.push_back({repr.doc_id, repr.fields.at(std::string(field))});
      return build_index(docs, r.analyzer);
    };

    Diagnostics run_diag;
    std::vector<RankedList> lists;
    if (spec->mode == RetrievalMode::kSingleIndex) {
      lists = batch_search(index_of(kUnifiedField), r.analyzer, c.bm25, queries, c.depth, &run_diag);
    } else {
      lists = batch_set_difference(index_of(kInclusionField), index_of(kExclusionField), r.analyzer, c.bm25, queries,
                                   c.depth, &run_diag);
    }
    for (const auto& w : run_diag.warnings) diag.warn(spec->run_id + ": " + w);

    fs::path out = c.run_path(spec->run_id);
    write_file(out, format_run(lists, c.run_tag_prefix + spec->run_id));
    written.push_back(out);
  }
  return written;
}

Comparison run_eval(const PipelineConfig& c, const std::vector<fs::path>& run_files, Diagnostics& diag) {
  Qrels qrels = Qrels::load(c.qrels);
  std::optional<Medians> medians;
  if (!c.medians.empty()) medians = load_medians(c.medians);
  const char* ext = c.format == OutputFormat::kTsv ? ".tsv" : ".txt";

  fs::create_directories(c.output_dir);
  std::vector<EvalReport> reports;
  for (const auto& file : run_files) {
    RunFile run;
    try {
      run = load_run(file);
    } catch (const Error& e) {
      throw Error(e.code(), file.string() + ": " + e.what());
    }
    if (run.run_tag.empty()) run.run_tag = file.stem().string();
    auto report = evaluate_run(run, qrels, medians ? &*medians : nullptr, EvalOptions{c.failed_mode}, &diag);
    write_file(c.output_dir / (file.stem().string() + ".eval" + ext), format_report(report, c.format));
    reports.push_back(std::move(report));
  }
  Comparison cmp = compare_runs(reports);
  write_file(c.output_dir / (std::string("comparison") + ext), format_comparison(cmp, c.format));
  return cmp;
}

}  // namespace trialmatch
