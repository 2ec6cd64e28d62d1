#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "trialmatch/concept_tagger.hpp"
#include "trialmatch/corpus.hpp"
#include "trialmatch/metadata.hpp"
#include "trialmatch/negation.hpp"

namespace trialmatch {

inline constexpr std::string_view kNegPrefix = "neg:";
inline constexpr std::string_view kEntitySeparator = "__";

inline constexpr std::string_view kUnifiedField = "unified";
inline constexpr std::string_view kInclusionField = "incl";
inline constexpr std::string_view kExclusionField = "excl";

struct Representation {
  std::string doc_id;
  std::map<std::string, std::string> fields;  // unified | incl | excl

  friend bool operator==(const Representation&, const Representation&) = default;
};

enum class RetrievalMode { kSingleIndex, kSetDifference };

// Building blocks of a representation. Entity components are rendered as
// entity strings ("a__b__neg:c"); text components are newline-joined.
enum class Component {
  kTitle,             // trial title
  kInclusionText,     // trial inclusion statements
  kExclusionText,     // trial exclusion statements
  kFullText,          // topic description
  kEntities,          // polarity-marked entities, exclusion polarity flipped
  kEntitiesPlain,     // entities as extracted, no negation handling
  kEntitiesAffirmed,  // affirmed entities only (after the exclusion flip)
  kMetadata,          // age, gender, clinical-variable and family tokens
};

const char* to_string(Component c);

struct RunSpec {
  std::string run_id;
  RetrievalMode mode = RetrievalMode::kSingleIndex;
  std::map<std::string, std::vector<Component>> trial_fields;
  std::vector<Component> topic;

  friend bool operator==(const RunSpec&, const RunSpec&) = default;
};

// INI-style run definitions, one section per run:
//   [R3]
//   mode = set_difference
//   trial_incl = title, inclusion_text
//   trial_excl = exclusion_text
//   topic = full_text
std::vector<RunSpec> parse_run_specs(std::string_view contents);
std::vector<RunSpec> load_run_specs(const std::filesystem::path& path);
const std::vector<RunSpec>& builtin_run_specs();
const RunSpec& find_run(const std::vector<RunSpec>& runs, std::string_view run_id);

// Everything entity and metadata extraction needs.
struct ExtractionContext {
  const Lexicon& lexicon;
  const TriggerSet& triggers;
  const MetadataResources& metadata;
  NegationParams negation;
};

// Sentence-segment, tag, and run negation detection. Spans are relative to
// `text`.
std::vector<TaggedEntity> extract_entities(std::string_view text, const Lexicon& lexicon, const TriggerSet& triggers,
                                           const NegationParams& params = {});

std::vector<TaggedEntity> flip_exclusion_polarity(std::vector<TaggedEntity> entities);

// Entity string: surface forms joined by "__", negated ones prefixed "neg:".
std::string render_entities(const std::vector<TaggedEntity>& entities);

struct TrialEntities {
  std::vector<TaggedEntity> title;
  std::vector<TaggedEntity> inclusion;
  std::vector<TaggedEntity> exclusion;  // polarity as detected, not yet flipped
};

TrialEntities extract_trial_entities(const TrialDoc& trial, const ExtractionContext& ctx);

// Separate inclusion and exclusion entity strings (no flip), and the
// single concatenated string with exclusion polarity flipped.
struct EntityRows {
  std::string inclusion;
  std::string exclusion;
  std::string concatenated;
};
EntityRows criteria_entity_rows(const Criteria& criteria, const ExtractionContext& ctx);

std::vector<MetaToken> trial_metadata_tokens(const TrialDoc& trial, const ExtractionContext& ctx);
std::vector<MetaToken> topic_metadata_tokens(const Topic& topic, const ExtractionContext& ctx);

// Throws kMissingCriteria when the trial has not been split.
Representation build_trial_repr(const TrialDoc& trial, const RunSpec& spec, const ExtractionContext& ctx);
Representation build_topic_repr(const Topic& topic, const RunSpec& spec, const ExtractionContext& ctx);

}  // namespace trialmatch
