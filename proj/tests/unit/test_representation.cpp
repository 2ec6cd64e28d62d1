#include <doctest.h>

#include <set>

#include "../support/oracles.hpp"
#include "trialmatch/criteria.hpp"
#include "trialmatch/representation.hpp"

using namespace trialmatch;

namespace {

std::string data(const std::string& name) { return std::string(TRIALMATCH_DATA_DIR) + "/" + name; }

struct Fixture {
  CriteriaRules rules = CriteriaRules::load(data("criteria_rules.txt"));
  Lexicon lexicon = Lexicon::load(data("lexicon.tsv"));
  Lexicon stenosis = Lexicon::load(oracle::fixture("aortic_stenosis_lexicon.tsv"));
  TriggerSet triggers = TriggerSet::load(data("negex_triggers.tsv"));
  MetadataResources metadata{GenderLexicon::load(data("gender_synonyms.txt")),
                             ClinicalVariables::load(data("reference_ranges.tsv"), data("clinvar_aliases.tsv")),
                             FamilyCues::load(data("family_cues.txt"))};

  ExtractionContext ctx() const { return {lexicon, triggers, metadata, {}}; }
  ExtractionContext stenosis_ctx() const { return {stenosis, triggers, metadata, {}}; }

  TrialDoc trial(const std::string& id) const {
    TrialDoc t = parse_trial_xml(read_file(oracle::fixture("trials/" + id + ".xml")));
    t.criteria = split_criteria(*t.eligibility_raw, rules);
    return t;
  }
};

const Fixture& fx() {
  static const Fixture f;
  return f;
}

std::vector<std::string> entity_list(const std::string& rendered) {
  std::vector<std::string> out;
  if (rendered.empty()) return out;
  std::size_t start = 0;
  for (std::size_t pos; (pos = rendered.find(kEntitySeparator, start)) != std::string::npos;) {
    out.push_back(rendered.substr(start, pos - start));
    start = pos + kEntitySeparator.size();
  }
  out.push_back(rendered.substr(start));
  return out;
}

std::vector<std::string> words_of(const std::string& s) {
  std::vector<std::string> out;
  for (auto& w : word_tokens(s)) out.push_back(std::move(w.text));
  return out;
}

bool contains(const std::string& haystack, const std::string& needle) {
  auto words = words_of(haystack);
  return std::find(words.begin(), words.end(), needle) != words.end();
}

}  // namespace

TEST_SUITE("representation") {
  TEST_CASE("polarity flip and rendering") {
    auto a = oracle::entity("chest pain", Polarity::kAffirmed, 0);
    auto n = oracle::entity("smokes", Polarity::kNegated, 20);
    auto flipped = flip_exclusion_polarity({a, n});
    CHECK(flipped[0].polarity == Polarity::kNegated);
    CHECK(flipped[1].polarity == Polarity::kAffirmed);
    CHECK(render_entities({n}) == "neg:smokes");
    CHECK(render_entities(flip_exclusion_polarity({n})) == "smokes");
    CHECK(render_entities({a, n}) == "chest pain__neg:smokes");
    CHECK(render_entities({}).empty());
    CHECK(render_entities({oracle::entity("chest\n   pain", Polarity::kAffirmed)}) == "chest pain");

    oracle::Gen g(71);
    for (int round = 0; round < 200; ++round) {
      auto ents = oracle::random_entities(g, 8);
      CHECK(flip_exclusion_polarity(flip_exclusion_polarity(ents)) == ents);
    }
  }

  TEST_CASE("aortic stenosis trial rows") {
    TrialDoc t = fx().trial("NCT01000001");
    auto rows = criteria_entity_rows(*t.criteria, fx().stenosis_ctx());
    CHECK(rows.inclusion == "aortic stenosis__elective aortic valve replacement__neg:aortic aneurysm dilation repair");
    CHECK(rows.exclusion ==
          "predominant aortic regurgitation valve disease__connective tissue disorders__Marfan's Syndrome__"
          "Ehlers-Danlos Syndrome");
    CHECK(rows.concatenated ==
          "aortic stenosis__elective aortic valve replacement__neg:aortic aneurysm dilation repair__"
          "neg:predominant aortic regurgitation valve disease__neg:connective tissue disorders__"
          "neg:Marfan's Syndrome__neg:Ehlers-Danlos Syndrome");
  }

  TEST_CASE("built-in runs") {
    auto from_file = load_run_specs(data("runs.ini"));
    CHECK(from_file == builtin_run_specs());
    REQUIRE(builtin_run_specs().size() == 6);
    for (const auto& r : builtin_run_specs()) {
      bool set_diff = r.run_id == "R3" || r.run_id == "R4" || r.run_id == "R5";
      CHECK((r.mode == RetrievalMode::kSetDifference) == set_diff);
    }
    CHECK(find_run(builtin_run_specs(), "R2").topic ==
          std::vector<Component>{Component::kEntities, Component::kMetadata});
    CHECK_THROWS_AS(find_run(builtin_run_specs(), "R9"), Error);
  }

  TEST_CASE("run spec errors") {
    auto code_of = [](const std::string& ini) -> std::optional<ErrorCode> {
      try {
        parse_run_specs(ini);
      } catch (const Error& e) {
        return e.code();
      }
      return std::nullopt;
    };
    CHECK(code_of("[X]\nmode = sideways\ntrial_unified = title\ntopic = full_text\n") == ErrorCode::kInvalidConfig);
    CHECK(code_of("[X]\nmode = single_index\ntrial_unified = colour\ntopic = full_text\n") ==
          ErrorCode::kInvalidConfig);
    CHECK(code_of("[X]\nmode = single_index\ntrial_incl = title\ntopic = full_text\n") == ErrorCode::kInvalidConfig);
    CHECK(code_of("[X]\nmode = set_difference\ntrial_incl = title\ntopic = full_text\n") ==
          ErrorCode::kInvalidConfig);
    CHECK(code_of("[X]\nmode = single_index\ntrial_unified = title\ntopic = title\n") == ErrorCode::kInvalidConfig);
    CHECK(code_of("[X]\nmode = single_index\ntrial_unified = title\n") == ErrorCode::kInvalidConfig);
    CHECK(code_of("[X]\nmode = single_index\ntrial_unified = title\ntopic = full_text\ncolour = red\n") ==
          ErrorCode::kInvalidConfig);
    auto one = parse_run_specs("[X]\nmode = single_index\ntrial_unified = title, metadata\ntopic = full_text\n");
    REQUIRE(one.size() == 1);
    CHECK(one[0].trial_fields.at("unified") == std::vector<Component>{Component::kTitle, Component::kMetadata});
  }

  TEST_CASE("topic entity strings") {
    Lexicon lex = Lexicon::parse("chest pain\tchest pain\tsosy\nsmokes\tsmoking\tfndg\n");
    ExtractionContext ctx{lex, fx().triggers, fx().metadata, {}};
    Topic topic{7, "Patient has chest pain. Patient denies smokes."};
    auto r1 = build_topic_repr(topic, find_run(builtin_run_specs(), "R1"), ctx);
    CHECK(r1.doc_id == "7");
    CHECK(r1.fields.at("unified") == "chest pain__neg:smokes");
    CHECK(build_topic_repr(topic, find_run(builtin_run_specs(), "R5"), ctx).fields.at("unified") == "chest pain");
    CHECK(build_topic_repr(topic, find_run(builtin_run_specs(), "R4"), ctx).fields.at("unified") ==
          "chest pain__smokes");
    CHECK(build_topic_repr(topic, find_run(builtin_run_specs(), "BL"), ctx).fields.at("unified") == topic.text);
  }

  TEST_CASE("affirmed entities are a subset of plain entities") {
    auto topics = parse_topics(read_file(oracle::fixture("topics.xml")));
    const auto& r4 = find_run(builtin_run_specs(), "R4");
    const auto& r5 = find_run(builtin_run_specs(), "R5");
    for (const auto& topic : topics) {
      auto plain = entity_list(build_topic_repr(topic, r4, fx().ctx()).fields.at("unified"));
      auto affirmed = entity_list(build_topic_repr(topic, r5, fx().ctx()).fields.at("unified"));
      std::multiset<std::string> p(plain.begin(), plain.end());
      for (const auto& e : affirmed) {
        CAPTURE(e);
        REQUIRE(p.count(e) > 0);
        p.erase(p.find(e));
      }
      for (const auto& e : plain) CHECK(e.rfind(kNegPrefix, 0) != 0);
    }
  }

  TEST_CASE("metadata tokens") {
    TrialDoc t = fx().trial("NCT01000001");
    auto r2 = build_trial_repr(t, find_run(builtin_run_specs(), "R2"), fx().ctx());
    const std::string& unified = r2.fields.at("unified");
    CHECK(unified.find("age:18") != std::string::npos);
    CHECK(unified.find("age:100") != std::string::npos);
    CHECK(unified.find("age:17 ") == std::string::npos);
    CHECK(contains(unified, "male"));
    CHECK(contains(unified, "female"));

    auto tokens = trial_metadata_tokens(fx().trial("NCT01000010"), fx().ctx());
    CHECK(tokens.front() == "age:65");
    CHECK(std::find(tokens.begin(), tokens.end(), "aged") != tokens.end());

    auto topics = parse_topics(read_file(oracle::fixture("topics.xml")));
    auto t1 = topic_metadata_tokens(topics[0], fx().ctx());
    for (const char* want : {"age:58", "adult", "middle_aged", "male", "bp:abnormal", "hypertension", "hr:abnormal",
                             "tachycardia", "family:hypertension"}) {
      CAPTURE(want);
      CHECK(std::find(t1.begin(), t1.end(), want) != t1.end());
    }
    auto t5 = topic_metadata_tokens(topics[4], fx().ctx());
    for (const char* want : {"age:79", "aged", "male", "rr:abnormal", "tachypnea", "hgb:normal"}) {
      CAPTURE(want);
      CHECK(std::find(t5.begin(), t5.end(), want) != t5.end());
    }
  }

  TEST_CASE("trial fields") {
    TrialDoc t;
    t.doc_id = "NCT0";
    t.title = "Asthma study";
    t.criteria = Criteria{{"Diagnosed with asthma"}, {}};
    auto r3 = build_trial_repr(t, find_run(builtin_run_specs(), "R3"), fx().ctx());
    CHECK(r3.fields.at("incl") == "Asthma study\nDiagnosed with asthma");
    CHECK(r3.fields.at("excl").empty());
    auto bl = build_trial_repr(t, find_run(builtin_run_specs(), "BL"), fx().ctx());
    CHECK(bl.fields.size() == 1);
    CHECK(bl.fields.at("unified") == "Asthma study\nDiagnosed with asthma");

    t.criteria.reset();
    try {
      build_trial_repr(t, find_run(builtin_run_specs(), "BL"), fx().ctx());
      FAIL("expected MissingCriteria");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kMissingCriteria);
    }
  }

  TEST_CASE("representations are deterministic") {
    auto topics = parse_topics(read_file(oracle::fixture("topics.xml")));
    for (const auto& spec : builtin_run_specs()) {
      for (const char* id : {"NCT01000001", "NCT01000003", "NCT01000008", "NCT01000009"}) {
        auto t = fx().trial(id);
        CHECK(build_trial_repr(t, spec, fx().ctx()) == build_trial_repr(t, spec, fx().ctx()));
      }
      for (const auto& topic : topics) {
        CHECK(build_topic_repr(topic, spec, fx().ctx()) == build_topic_repr(topic, spec, fx().ctx()));
      }
    }
  }
}
