#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trialmatch/concept_tagger.hpp"
#include "trialmatch/corpus.hpp"
#include "trialmatch/error.hpp"

namespace trialmatch {

// Metadata tokens are whitespace-free strings: "age:36", "adult", "female",
// "rr:abnormal", "tachypnea", "family:hypertension".
using MetaToken = std::string;

inline constexpr int kMaxAgeYears = 100;

// ---------------------------------------------------------------------------
// Age

struct AgeBracket {
  std::string_view token;
  int lo;  // inclusive
  int hi;  // exclusive, except the terminal bracket which includes kMaxAgeYears
};

const std::vector<AgeBracket>& mesh_age_brackets();

// All brackets containing the age, in table order. Throws kAgeOutOfRange
// outside [0, 100].
std::vector<MetaToken> mesh_age_group(double age_years);

// "age:<years>" plus the age groups, from the first age mention in a patient
// description. Falls back to the group implied by a gendered-age word
// ("girl", "boy") when there is no explicit age.
std::vector<MetaToken> topic_age_tokens(std::string_view text);

struct AgeRange {
  int lo = 0;
  int hi = kMaxAgeYears;
  bool lo_open = true;  // lower bound was not stated
  bool hi_open = true;  // upper bound was not stated
};

// First age-range statement in criteria text ("18 years and older",
// "between 30 and 45 years old", "under 34 years"). Strict bounds are
// converted to inclusive whole years.
std::optional<AgeRange> parse_age_range(std::string_view text);

// One "age:K" per integer year of the trial's range, then a group token when
// the range starts exactly at a bracket and covers it. Structured bounds win
// over criteria text. Throws kInvertedRange when lo > hi.
std::vector<MetaToken> trial_age_tokens(std::optional<int> min_age_months, std::optional<int> max_age_months,
                                        std::string_view criteria_text);

// ---------------------------------------------------------------------------
// Gender

struct GenderWord {
  std::string word;  // lowercase, or a single uppercase letter matched case-sensitively
  std::string gender;  // "male" or "female"
  std::string age_group;  // optional group implied by the word
};

// TSV: gender <TAB> word [<TAB> age_group]
class GenderLexicon {
 public:
  static GenderLexicon parse(std::string_view contents);
  static GenderLexicon load(const std::filesystem::path& path);

  const std::vector<GenderWord>& words() const { return words_; }
  const GenderWord* find(std::string_view source_word) const;

 private:
  std::vector<GenderWord> words_;
};

// Gender tokens in order of first mention, each at most once, followed by
// any age groups implied by gendered-age words.
std::vector<MetaToken> gender_tokens(std::string_view text, const GenderLexicon& lexicon);
std::vector<MetaToken> trial_gender_tokens(Gender gender);

// ---------------------------------------------------------------------------
// Clinical variables

struct ReferenceRange {
  std::string variable;  // canonical short name: hgb, wbc, rr, bp, ...
  std::vector<std::string> units;  // accepted spellings, normalized; first is canonical
  double normal_low = 0;
  double normal_high = 0;
  std::string low_name;   // token for values below range (may be empty)
  std::string high_name;  // token for values above range (may be empty)
};

// Reference ranges plus surface aliases. Several range rows for the same
// variable describe successive components of a compound reading, e.g.
// systolic then diastolic for "bp 120/80".
class ClinicalVariables {
 public:
  // ranges TSV: variable <TAB> unit[|unit...] <TAB> normal_low <TAB> normal_high [<TAB> name | low_name|high_name]
  // aliases TSV: variable <TAB> alias
  static ClinicalVariables parse(std::string_view ranges_tsv, std::string_view aliases_tsv);
  static ClinicalVariables load(const std::filesystem::path& ranges, const std::filesystem::path& aliases);

  struct Alias {
    std::vector<std::string> words;
    std::string variable;
  };

  const std::vector<ReferenceRange>& ranges() const { return ranges_; }
  const std::vector<Alias>& aliases() const { return aliases_; }
  std::vector<const ReferenceRange*> components(std::string_view variable) const;
  bool is_known_unit(std::string_view normalized_unit) const;

 private:
  std::vector<ReferenceRange> ranges_;
  std::vector<Alias> aliases_;
};

std::string normalize_unit(std::string_view unit);

// For every "<variable> <value> [unit]" mention: "<var>:normal" or
// "<var>:abnormal", plus the out-of-range name when one is defined. A
// mention whose unit does not match the variable is skipped with a warning.
std::vector<MetaToken> clinvar_tokens(std::string_view text, const ClinicalVariables& variables,
                                      Diagnostics* diag = nullptr);

// ---------------------------------------------------------------------------
// Family history

class FamilyCues {
 public:
  // One cue phrase per line.
  static FamilyCues parse(std::string_view contents);
  static FamilyCues load(const std::filesystem::path& path);

  const std::vector<std::vector<std::string>>& cues() const { return cues_; }
  bool matches(const std::vector<WordToken>& words) const;

 private:
  std::vector<std::vector<std::string>> cues_;
};

struct FamilyHistory {
  std::vector<MetaToken> tokens;
  std::vector<Span> consumed;  // entity spans the caller must drop from its entity stream
};

FamilyHistory family_history(std::string_view text, const Lexicon& lexicon, const FamilyCues& cues);
std::vector<MetaToken> family_history_tokens(std::string_view text, const Lexicon& lexicon, const FamilyCues& cues);

struct MetadataResources {
  GenderLexicon genders;
  ClinicalVariables variables;
  FamilyCues family;
};

}  // namespace trialmatch
