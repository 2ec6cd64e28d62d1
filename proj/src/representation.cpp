#include "trialmatch/representation.hpp"

#include <algorithm>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <sstream>

#include "trialmatch/text_util.hpp"

namespace trialmatch {

namespace {

constexpr std::string_view kBuiltinRuns = R"([BL]
mode = single_index
trial_unified = title, inclusion_text, exclusion_text
topic = full_text

[R1]
mode = single_index
trial_unified = entities
topic = entities

[R2]
mode = single_index
trial_unified = title, inclusion_text, entities, metadata
topic = entities, metadata

[R3]
mode = set_difference
trial_incl = title, inclusion_text
trial_excl = exclusion_text
topic = full_text

[R4]
mode = set_difference
trial_incl = title, inclusion_text
trial_excl = exclusion_text
topic = entities_plain

[R5]
mode = set_difference
trial_incl = title, inclusion_text
trial_excl = exclusion_text
topic = entities_affirmed
)";

struct ComponentName {
  Component component;
  std::string_view name;
  bool trial_side;
  bool topic_side;
};

constexpr ComponentName kComponents[] = {
    {Component::kTitle, "title", true, false},
    {Component::kInclusionText, "inclusion_text", true, false},
    {Component::kExclusionText, "exclusion_text", true, false},
    {Component::kFullText, "full_text", false, true},
    {Component::kEntities, "entities", true, true},
    {Component::kEntitiesPlain, "entities_plain", true, true},
    {Component::kEntitiesAffirmed, "entities_affirmed", true, true},
    {Component::kMetadata, "metadata", true, true},
};

const ComponentName& component_info(Component c) {
  for (const auto& info : kComponents) {
    if (info.component == c) return info;
  }
  return kComponents[0];
}

std::vector<Component> parse_components(const std::string& run, const std::string& key, const std::string& value,
                                        bool trial_side) {
  std::vector<Component> out;
  for (auto part : split(value, ',')) {
    std::string name(trim(part));
    if (name.empty()) continue;
    auto it = std::find_if(std::begin(kComponents), std::end(kComponents),
                           [&](const ComponentName& c) { return c.name == name; });
    if (it == std::end(kComponents)) {
      throw Error(ErrorCode::kInvalidConfig, "run " + run + ": unknown component '" + name + "'");
    }
    if (trial_side ? !it->trial_side : !it->topic_side) {
      throw Error(ErrorCode::kInvalidConfig, "run " + run + ": component '" + name + "' not allowed in " + key);
    }
    out.push_back(it->component);
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidConfig, "run " + run + ": " + key + " lists no components");
  return out;
}

bool has(const std::vector<Component>& list, Component c) { return std::find(list.begin(), list.end(), c) != list.end(); }

void append_unique(std::vector<MetaToken>& out, std::vector<MetaToken> more) {
  for (auto& t : more) {
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
  }
}

std::vector<TaggedEntity> without_spans(std::vector<TaggedEntity> entities, const std::vector<Span>& consumed) {
  std::erase_if(entities, [&](const TaggedEntity& e) {
    return std::find(consumed.begin(), consumed.end(), e.span) != consumed.end();
  });
  return entities;
}

std::vector<TaggedEntity> plain(std::vector<TaggedEntity> entities) {
  for (auto& e : entities) e.polarity = Polarity::kAffirmed;
  return entities;
}

std::vector<TaggedEntity> affirmed_only(std::vector<TaggedEntity> entities) {
  std::erase_if(entities, [](const TaggedEntity& e) { return e.polarity == Polarity::kNegated; });
  return entities;
}

std::vector<TaggedEntity> concat(std::initializer_list<const std::vector<TaggedEntity>*> parts) {
  std::vector<TaggedEntity> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

// Title and inclusion statements feed trial metadata; family-history
// entities found there are removed from the entity stream when metadata is
// part of the same representation.
TrialEntities trial_entities(const TrialDoc& trial, const ExtractionContext& ctx, bool drop_family) {
  auto units = [&](std::string_view text, bool metadata_source) {
    auto ents = extract_entities(text, ctx.lexicon, ctx.triggers, ctx.negation);
    if (drop_family && metadata_source) {
      ents = without_spans(std::move(ents), family_history(text, ctx.lexicon, ctx.metadata.family).consumed);
    }
    return ents;
  };
  TrialEntities out;
  out.title = units(trial.title, true);
  for (const auto& s : trial.criteria->inclusion) {
    auto e = units(s, true);
    out.inclusion.insert(out.inclusion.end(), e.begin(), e.end());
  }
  for (const auto& s : trial.criteria->exclusion) {
    auto e = units(s, false);
    out.exclusion.insert(out.exclusion.end(), e.begin(), e.end());
  }
  return out;
}

std::string join_nonempty(const std::vector<std::string>& parts) {
  std::vector<std::string> kept;
  for (const auto& p : parts) {
    if (!p.empty()) kept.push_back(p);
  }
  return join(kept, "\n");
}

}  // namespace

const char* to_string(Component c) { return component_info(c).name.data(); }

std::vector<RunSpec> parse_run_specs(std::string_view contents) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in{std::string(contents)};
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw Error(ErrorCode::kInvalidConfig, e.what());
  }

  std::vector<RunSpec> runs;
  for (const auto& [run_id, section] : tree) {
    RunSpec spec;
    spec.run_id = run_id;
    std::string mode = section.get<std::string>("mode", "single_index");
    if (mode == "single_index") spec.mode = RetrievalMode::kSingleIndex;
    else if (mode == "set_difference") spec.mode = RetrievalMode::kSetDifference;
    else throw Error(ErrorCode::kInvalidConfig, "run " + run_id + ": unknown mode '" + mode + "'");

    for (const auto& [key, value] : section) {
      std::string v = value.get_value<std::string>();
      if (key == "mode") continue;
      if (key == "topic") {
        spec.topic = parse_components(run_id, key, v, false);
      } else if (key.starts_with("trial_")) {
        spec.trial_fields[key.substr(6)] = parse_components(run_id, key, v, true);
      } else {
        throw Error(ErrorCode::kInvalidConfig, "run " + run_id + ": unknown key '" + key + "'");
      }
    }
    std::vector<std::string> fields;
    for (const auto& [name, comps] : spec.trial_fields) fields.push_back(name);
    std::vector<std::string> expected = spec.mode == RetrievalMode::kSingleIndex
                                            ? std::vector<std::string>{std::string(kUnifiedField)}
                                            : std::vector<std::string>{std::string(kExclusionField), std::string(kInclusionField)};
    if (fields != expected) {
      throw Error(ErrorCode::kInvalidConfig, "run " + run_id + ": " + mode + " needs trial fields " + join(expected, ", "));
    }
    if (spec.topic.empty()) throw Error(ErrorCode::kInvalidConfig, "run " + run_id + ": missing topic recipe");
    if (std::any_of(runs.begin(), runs.end(), [&](const RunSpec& r) { return r.run_id == run_id; })) {
      throw Error(ErrorCode::kInvalidConfig, "duplicate run " + run_id);
    }
    runs.push_back(std::move(spec));
  }
  return runs;
}

std::vector<RunSpec> load_run_specs(const std::filesystem::path& path) { return parse_run_specs(read_file(path)); }

const std::vector<RunSpec>& builtin_run_specs() {
  static const std::vector<RunSpec> kRuns = parse_run_specs(kBuiltinRuns);
  return kRuns;
}

const RunSpec& find_run(const std::vector<RunSpec>& runs, std::string_view run_id) {
  for (const auto& r : runs) {
    if (r.run_id == run_id) return r;
  }
  throw Error(ErrorCode::kInvalidConfig, "unknown run '" + std::string(run_id) + "'");
}

std::vector<TaggedEntity> extract_entities(std::string_view text, const Lexicon& lexicon, const TriggerSet& triggers,
                                           const NegationParams& params) {
  std::vector<TaggedEntity> out;
  for (const Span& s : segment_sentences(text)) {
    std::string_view sentence = text.substr(s.begin, s.size());
    auto entities = tag(sentence, lexicon);
    auto polarity = detect(sentence, entities, triggers, params);
    for (std::size_t i = 0; i < entities.size(); ++i) {
      auto& e = entities[i];
      e.polarity = polarity[i].polarity;
      e.span = {e.span.begin + s.begin, e.span.end + s.begin};
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<TaggedEntity> flip_exclusion_polarity(std::vector<TaggedEntity> entities) {
  for (auto& e : entities) e.polarity = flip(e.polarity);
  return entities;
}

std::string render_entities(const std::vector<TaggedEntity>& entities) {
  std::string out;
  for (const auto& e : entities) {
    if (!out.empty()) out.append(kEntitySeparator);
    if (e.polarity == Polarity::kNegated) out.append(kNegPrefix);
    out.append(collapse_whitespace(e.text));
  }
  return out;
}

TrialEntities extract_trial_entities(const TrialDoc& trial, const ExtractionContext& ctx) {
  if (!trial.criteria) throw Error(ErrorCode::kMissingCriteria, trial.doc_id);
  return trial_entities(trial, ctx, false);
}

EntityRows criteria_entity_rows(const Criteria& criteria, const ExtractionContext& ctx) {
  std::vector<TaggedEntity> incl;
  std::vector<TaggedEntity> excl;
  for (const auto& s : criteria.inclusion) {
    auto e = extract_entities(s, ctx.lexicon, ctx.triggers, ctx.negation);
    incl.insert(incl.end(), e.begin(), e.end());
  }
  for (const auto& s : criteria.exclusion) {
    auto e = extract_entities(s, ctx.lexicon, ctx.triggers, ctx.negation);
    excl.insert(excl.end(), e.begin(), e.end());
  }
  auto flipped = flip_exclusion_polarity(excl);
  return {render_entities(incl), render_entities(excl), render_entities(concat({&incl, &flipped}))};
}

std::vector<MetaToken> trial_metadata_tokens(const TrialDoc& trial, const ExtractionContext& ctx) {
  if (!trial.criteria) throw Error(ErrorCode::kMissingCriteria, trial.doc_id);
  std::string inclusion_text = join(trial.criteria->inclusion, "\n");
  std::vector<MetaToken> out;
  try {
    append_unique(out, trial_age_tokens(trial.min_age_months, trial.max_age_months, inclusion_text));
  } catch (const Error& e) {
    // An inverted range read from free text carries no usable age signal.
    if (e.code() != ErrorCode::kInvertedRange) throw;
  }
  append_unique(out, trial_gender_tokens(trial.gender));
  append_unique(out, clinvar_tokens(trial.title + "\n" + inclusion_text, ctx.metadata.variables));
  append_unique(out, family_history_tokens(trial.title, ctx.lexicon, ctx.metadata.family));
  for (const auto& s : trial.criteria->inclusion) {
    append_unique(out, family_history_tokens(s, ctx.lexicon, ctx.metadata.family));
  }
  return out;
}

std::vector<MetaToken> topic_metadata_tokens(const Topic& topic, const ExtractionContext& ctx) {
  std::vector<MetaToken> out;
  append_unique(out, topic_age_tokens(topic.text));
  append_unique(out, gender_tokens(topic.text, ctx.metadata.genders));
  append_unique(out, clinvar_tokens(topic.text, ctx.metadata.variables));
  append_unique(out, family_history_tokens(topic.text, ctx.lexicon, ctx.metadata.family));
  return out;
}

Representation build_trial_repr(const TrialDoc& trial, const RunSpec& spec, const ExtractionContext& ctx) {
  if (!trial.criteria) throw Error(ErrorCode::kMissingCriteria, trial.doc_id);

  bool wants_metadata = false;
  bool wants_entities = false;
  for (const auto& [field, comps] : spec.trial_fields) {
    wants_metadata |= has(comps, Component::kMetadata);
    wants_entities |= has(comps, Component::kEntities) || has(comps, Component::kEntitiesPlain) ||
                      has(comps, Component::kEntitiesAffirmed);
  }
  TrialEntities ents;
  if (wants_entities) ents = trial_entities(trial, ctx, wants_metadata);

  Representation repr;
  repr.doc_id = trial.doc_id;
  for (const auto& [field, comps] : spec.trial_fields) {
    std::vector<std::string> parts;
    for (Component c : comps) {
      switch (c) {
        case Component::kTitle: parts.push_back(trial.title); break;
        case Component::kInclusionText: parts.push_back(join(trial.criteria->inclusion, "\n")); break;
        case Component::kExclusionText: parts.push_back(join(trial.criteria->exclusion, "\n")); break;
        case Component::kEntities: {
          auto flipped = flip_exclusion_polarity(ents.exclusion);
          parts.push_back(render_entities(concat({&ents.title, &ents.inclusion, &flipped})));
          break;
        }
        case Component::kEntitiesPlain:
          parts.push_back(render_entities(plain(concat({&ents.title, &ents.inclusion, &ents.exclusion}))));
          break;
        case Component::kEntitiesAffirmed: {
          auto flipped = flip_exclusion_polarity(ents.exclusion);
          parts.push_back(render_entities(affirmed_only(concat({&ents.title, &ents.inclusion, &flipped}))));
          break;
        }
        case Component::kMetadata: parts.push_back(join(trial_metadata_tokens(trial, ctx), " ")); break;
        case Component::kFullText: break;
      }
    }
    repr.fields[field] = join_nonempty(parts);
  }
  return repr;
}

Representation build_topic_repr(const Topic& topic, const RunSpec& spec, const ExtractionContext& ctx) {
  bool wants_metadata = has(spec.topic, Component::kMetadata);
  std::vector<TaggedEntity> ents;
  if (has(spec.topic, Component::kEntities) || has(spec.topic, Component::kEntitiesPlain) ||
      has(spec.topic, Component::kEntitiesAffirmed)) {
    ents = extract_entities(topic.text, ctx.lexicon, ctx.triggers, ctx.negation);
    if (wants_metadata) {
      ents = without_spans(std::move(ents), family_history(topic.text, ctx.lexicon, ctx.metadata.family).consumed);
    }
  }

  std::vector<std::string> parts;
  for (Component c : spec.topic) {
    switch (c) {
      case Component::kFullText: parts.push_back(topic.text); break;
      case Component::kEntities: parts.push_back(render_entities(ents)); break;
      case Component::kEntitiesPlain: parts.push_back(render_entities(plain(ents))); break;
      case Component::kEntitiesAffirmed: parts.push_back(render_entities(affirmed_only(ents))); break;
      case Component::kMetadata: parts.push_back(join(topic_metadata_tokens(topic, ctx), " ")); break;
      default: break;
    }
  }
  Representation repr;
  repr.doc_id = std::to_string(topic.topic_id);
  repr.fields[std::string(kUnifiedField)] = join_nonempty(parts);
  return repr;
}

}  // namespace trialmatch
