#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "trialmatch/concept_tagger.hpp"
#include "trialmatch/corpus.hpp"
#include "trialmatch/criteria.hpp"
#include "trialmatch/error.hpp"
#include "trialmatch/evaluation.hpp"
#include "trialmatch/metadata.hpp"
#include "trialmatch/negation.hpp"
#include "trialmatch/representation.hpp"
#include "trialmatch/retrieval.hpp"

namespace trialmatch {

namespace fs = std::filesystem;

struct PipelineConfig {
  fs::path data_dir;

  // Inputs. Empty data-file paths resolve against data_dir.
  fs::path trials_dir;
  fs::path corpus;  // defaults to <output_dir>/corpus.jsonl
  fs::path topics;
  fs::path lexicon;
  fs::path triggers;
  fs::path criteria_rules;
  fs::path genders;
  fs::path ranges;
  fs::path clinvar_aliases;
  fs::path family_cues;
  fs::path stopwords;
  fs::path run_specs;  // empty: built-in BL, R1..R5

  fs::path output_dir = "out";

  std::vector<std::string> runs;  // empty: every defined run
  std::string run_tag_prefix = "ittc_";
  Bm25Params bm25;
  std::size_t depth = 1000;
  int threads = 0;  // 0: OpenMP default
  std::size_t negation_window = 5;
  bool strict = false;

  fs::path qrels;
  fs::path medians;
  FailedMode failed_mode = FailedMode::kAnyDepth;
  OutputFormat format = OutputFormat::kText;

  fs::path corpus_path() const { return corpus.empty() ? output_dir / "corpus.jsonl" : corpus; }
  fs::path run_path(const std::string& run_id) const;
};

// JSON object with the field names above ("k1", "b" for BM25; "failed" is
// "any_depth" or "top10"; "format" is "text" or "tsv"). Unknown keys throw
// kInvalidConfig. Relative paths resolve against the config file's directory.
PipelineConfig parse_pipeline_config(std::string_view json, const fs::path& base_dir = {});
PipelineConfig load_pipeline_config(const fs::path& path);

// Fills empty data-file paths from data_dir.
void resolve_defaults(PipelineConfig& config);

enum class Stage { kIngest, kRun, kEval };

// Throws kInvalidConfig for a missing input the stage needs or depth < 1.
void validate(const PipelineConfig& config, Stage stage);

struct Resources {
  CriteriaRules rules;
  Lexicon lexicon;
  TriggerSet triggers;
  MetadataResources metadata;
  Analyzer analyzer{Tokenizer{}};
  std::vector<RunSpec> runs;
};

Resources load_resources(const PipelineConfig& config, Diagnostics* diag = nullptr);

// Parses every *.xml under trials_dir (sorted by path), splits criteria and
// writes the corpus store. Unparseable files are skipped with a warning, or
// rethrown with file context when strict.
Corpus run_ingest(const PipelineConfig& config, const Resources& resources, Diagnostics& diag);

// Writes one run file per selected run; returns their paths.
std::vector<fs::path> run_retrieval(const PipelineConfig& config, const Resources& resources, const Corpus& corpus,
                                    const std::vector<Topic>& topics, Diagnostics& diag);

// Scores each run file, writes <run>.eval and comparison reports to the
// output dir and returns the comparison.
Comparison run_eval(const PipelineConfig& config, const std::vector<fs::path>& run_files, Diagnostics& diag);

std::vector<const RunSpec*> selected_runs(const PipelineConfig& config, const Resources& resources);

}  // namespace trialmatch
