#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "trialmatch/concept_tagger.hpp"
#include "trialmatch/text_util.hpp"

namespace trialmatch {

enum class TriggerKind { kPreNegation, kPostNegation, kPseudoNegation, kTermination };

const char* to_string(TriggerKind kind);

struct NegationTrigger {
  std::string phrase;  // lowercase, at most kMaxTriggerWords words
  TriggerKind kind;
};

inline constexpr std::size_t kMaxTriggerWords = 5;

// NegEx-style trigger table. TSV: phrase <TAB> pre_negation|post_negation|
// pseudo_negation|termination.
class TriggerSet {
 public:
  static TriggerSet parse(std::string_view contents);
  static TriggerSet load(const std::filesystem::path& path);

  // Returns false if the phrase is already present (first kind wins).
  bool add(NegationTrigger trigger);

  const std::vector<NegationTrigger>& triggers() const { return triggers_; }
  std::size_t max_words() const { return max_words_; }
  const NegationTrigger* find(const std::vector<WordToken>& words, std::size_t first, std::size_t last) const;

 private:
  std::vector<NegationTrigger> triggers_;
  std::unordered_map<std::string, std::size_t> by_phrase_;
  std::size_t max_words_ = 0;
};

struct NegationParams {
  std::size_t window = 5;  // scope length in words
};

struct PolarityAnnotation {
  Span entity_span;
  Polarity polarity = Polarity::kAffirmed;
  std::optional<Span> trigger_span;  // set iff negated

  friend bool operator==(const PolarityAnnotation&, const PolarityAnnotation&) = default;
};

// One annotation per entity, in input order. Entity spans are relative to
// `sentence`; a span past its end throws kSpanOutOfRange.
std::vector<PolarityAnnotation> detect(std::string_view sentence, const std::vector<TaggedEntity>& entities,
                                       const TriggerSet& triggers, const NegationParams& params = {});

// Sentence spans (trimmed, non-overlapping, in order). Breaks after
// sentence-final punctuation followed by whitespace and a capital, at blank
// lines, and at newlines that start a bullet item.
std::vector<Span> segment_sentences(std::string_view text);

}  // namespace trialmatch
