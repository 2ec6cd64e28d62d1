#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trialmatch/criteria.hpp"

namespace trialmatch {

enum class Gender { kAll, kMale, kFemale, kUnspecified };

const char* to_string(Gender g);
Gender gender_from_string(std::string_view s);

struct TrialDoc {
  std::string doc_id;
  std::string title;
  std::optional<std::string> eligibility_raw;
  std::optional<Criteria> criteria;
  Gender gender = Gender::kAll;
  std::optional<int> min_age_months;
  std::optional<int> max_age_months;

  friend bool operator==(const TrialDoc&, const TrialDoc&) = default;
};

struct Topic {
  int topic_id = 0;
  std::string text;

  friend bool operator==(const Topic&, const Topic&) = default;
};

struct CorpusStats {
  std::size_t total_parsed = 0;
  std::size_t dropped_no_criteria = 0;

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

// Trials keyed (and therefore iterated) by doc_id.
struct Corpus {
  std::map<std::string, TrialDoc> trials;
  CorpusStats stats;

  // Throws kDuplicateDocId when the id is already present.
  void add(TrialDoc trial);

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

// Converts registry age strings ("18 Years", "6 Months", "4 Weeks", "N/A")
// to whole months. Weeks and days are floored. Returns nullopt for N/A or
// anything unparseable.
std::optional<int> parse_age_months(std::string_view text);

TrialDoc parse_trial_xml(std::string_view xml);
std::vector<Topic> parse_topics(std::string_view xml);

// Splits criteria for every trial that has not been split yet and drops
// trials that end up with no statements. Idempotent.
Corpus drop_uncriterioned(Corpus corpus, const CriteriaRules& rules);

// Line-delimited store: a header line "trialmatch-corpus\t1", one JSON stats
// record, then one JSON record per trial in doc_id order.
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);
Corpus load_corpus(const std::filesystem::path& path);

}  // namespace trialmatch
