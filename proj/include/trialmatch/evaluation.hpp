#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trialmatch/error.hpp"
#include "trialmatch/retrieval.hpp"

namespace trialmatch {

inline constexpr int kGradeNotRelevant = 0;
inline constexpr int kGradeExcluded = 1;
inline constexpr int kGradeEligible = 2;
inline constexpr std::size_t kApCutoff = 10;

class Qrels {
 public:
  // Lines: topic_id 0 doc_id grade
  static Qrels parse(std::string_view contents);
  static Qrels load(const std::filesystem::path& path);

  // Throws kMalformedQrelsLine for a grade outside 0..2 or a repeated pair
  // with a different grade.
  void add(int topic_id, const std::string& doc_id, int grade);

  bool has_topic(int topic_id) const { return judgments_.contains(topic_id); }
  int grade(int topic_id, const std::string& doc_id) const;  // unjudged -> 0
  std::size_t eligible_count(int topic_id) const;
  std::vector<int> topics() const;

 private:
  std::map<int, std::map<std::string, int>> judgments_;
};

struct MedianEntry {
  double median = 0;
  std::optional<double> best;
};

// Lines: topic_id median [best]
using Medians = std::map<int, MedianEntry>;
Medians parse_medians(std::string_view contents);
Medians load_medians(const std::filesystem::path& path);

struct RunFile {
  std::string run_tag;
  std::map<int, RankedList> topics;  // entries ordered by the rank column
};

// Whitespace-separated "topic Q0 doc rank score tag". Throws
// kMalformedRunLine (with line number) for bad lines or a repeated document,
// kNonMonotoneRanks for repeated ranks or scores rising with rank.
RunFile parse_run(std::string_view contents);
RunFile load_run(const std::filesystem::path& path);

// Throws kTopicNotInQrels.
double ap_at_10(const RankedList& ranked, const Qrels& qrels, int topic_id);

enum class FailedMode { kAnyDepth, kTop10 };

struct EvalOptions {
  FailedMode failed = FailedMode::kAnyDepth;
};

struct EvalReport {
  std::string run_tag;
  std::map<int, double> per_topic;
  double mean_ap10 = 0;
  std::size_t failed = 0;
  std::optional<double> delta_median;
  std::optional<std::size_t> best;
};

// Scores every qrels topic; topics missing from the run score 0 and count as
// failed. Run topics absent from qrels are ignored with a warning.
EvalReport evaluate_run(const RunFile& run, const Qrels& qrels, const Medians* medians = nullptr,
                        const EvalOptions& options = {}, Diagnostics* diag = nullptr);

struct Comparison {
  std::vector<EvalReport> reports;
  // wins[i][j]: topics where run i scores strictly above run j.
  std::vector<std::vector<std::size_t>> wins;
};

// Throws kTopicSetMismatch unless every report covers the same topics.
Comparison compare_runs(const std::vector<EvalReport>& reports);

enum class OutputFormat { kText, kTsv };
OutputFormat output_format_from_string(std::string_view s);  // throws kInvalidConfig

std::string format_report(const EvalReport& report, OutputFormat format);
std::string format_comparison(const Comparison& comparison, OutputFormat format);

}  // namespace trialmatch
