#include <doctest.h>

#include <filesystem>

#include "../support/oracles.hpp"
#include "trialmatch/corpus.hpp"
#include "trialmatch/text_util.hpp"

using namespace trialmatch;

namespace {

const CriteriaRules& rules() {
  static const CriteriaRules r = CriteriaRules::load(std::string(TRIALMATCH_DATA_DIR) + "/criteria_rules.txt");
  return r;
}

std::string trial_xml(const std::string& id, const std::string& eligibility) {
  return "<clinical_study><id_info><nct_id>" + id + "</nct_id></id_info><brief_title>T " + id +
         "</brief_title>" + eligibility + "</clinical_study>";
}

std::filesystem::path temp_path(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "trialmatch_unit";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_SUITE("corpus") {
  TEST_CASE("age strings convert to whole months") {
    CHECK(parse_age_months("18 Years") == 216);
    CHECK(parse_age_months("6 Months") == 6);
    CHECK(parse_age_months("1 Year") == 12);
    CHECK(parse_age_months("4 Weeks") == 0);
    CHECK(parse_age_months("8 Weeks") == 1);
    CHECK(parse_age_months("60 Days") == 1);
    CHECK(parse_age_months("N/A") == std::nullopt);
    CHECK(parse_age_months("") == std::nullopt);
    CHECK(parse_age_months("eighteen") == std::nullopt);
  }

  TEST_CASE("fixture trial fields") {
    auto t = parse_trial_xml(read_file(oracle::fixture("trials/NCT01000003.xml")));
    CHECK(t.doc_id == "NCT01000003");
    CHECK(t.title == "Bronchodilator Therapy in Smokers With Chronic Obstructive Pulmonary Disease");
    CHECK(t.gender == Gender::kMale);
    CHECK(t.min_age_months == 480);
    CHECK(t.max_age_months == 960);
    REQUIRE(t.eligibility_raw);
    CHECK(t.eligibility_raw->find("Inclusion Criteria:") != std::string::npos);
    CHECK_FALSE(t.criteria);
  }

  TEST_CASE("optional fields") {
    auto t = parse_trial_xml(trial_xml("NCT1", ""));
    CHECK_FALSE(t.eligibility_raw);
    CHECK(t.gender == Gender::kAll);
    CHECK_FALSE(t.min_age_months);
    auto both = parse_trial_xml(trial_xml("NCT2", "<eligibility><gender>Both</gender></eligibility>"));
    CHECK(both.gender == Gender::kAll);
    auto odd = parse_trial_xml(trial_xml("NCT3", "<eligibility><gender>Unknown</gender></eligibility>"));
    CHECK(odd.gender == Gender::kUnspecified);
  }

  TEST_CASE("malformed trial XML") {
    CHECK_THROWS_AS(parse_trial_xml("<clinical_study><brief_title>x</clinical_study>"), Error);
    try {
      parse_trial_xml("<clinical_study><brief_title>x</brief_title></clinical_study>");
      FAIL("expected MissingId");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kMissingId);
    }
    CHECK_THROWS_AS(parse_trial_xml(trial_xml("NCT4", "<eligibility><minimum_age>60 Years</minimum_age>"
                                                      "<maximum_age>18 Years</maximum_age></eligibility>")),
                    Error);
  }

  TEST_CASE("topics") {
    auto topics = parse_topics(read_file(oracle::fixture("topics.xml")));
    REQUIRE(topics.size() == 5);
    CHECK(topics[0].topic_id == 1);
    CHECK(topics[0].text.starts_with("A 58-year-old man"));
    CHECK(parse_topics("<topics/>").empty());

    std::string many = "<topics>";
    for (int i = 1; i <= 75; ++i) many += "<topic number=\"" + std::to_string(i) + "\">patient " + std::to_string(i) + "</topic>";
    many += "</topics>";
    CHECK(parse_topics(many).size() == 75);

    try {
      parse_topics("<topics><topic number=\"1\">a</topic><topic number=\"1\">b</topic></topics>");
      FAIL("expected DuplicateTopicId");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kDuplicateTopicId);
    }
    CHECK_THROWS_AS(parse_topics("<topics><topic number=\"x\">a</topic></topics>"), Error);
    CHECK_THROWS_AS(parse_topics("<queries/>"), Error);
  }

  TEST_CASE("trials without headings are dropped") {
    Corpus c;
    for (const auto& entry : std::filesystem::directory_iterator(oracle::fixture("trials"))) {
      c.add(parse_trial_xml(read_file(entry.path())));
    }
    c.stats.total_parsed = c.trials.size();
    auto kept = drop_uncriterioned(c, rules());
    CHECK(kept.stats.total_parsed == 11);
    CHECK(kept.stats.dropped_no_criteria == 1);
    CHECK(kept.trials.size() == 10);
    CHECK_FALSE(kept.trials.contains("NCT01000011"));
    CHECK(drop_uncriterioned(kept, rules()) == kept);

    Corpus empty;
    auto e = drop_uncriterioned(empty, rules());
    CHECK(e.trials.empty());
    CHECK(e.stats.dropped_no_criteria == 0);
  }

  TEST_CASE("duplicate doc ids") {
    Corpus c;
    c.add(parse_trial_xml(trial_xml("NCT9", "")));
    CHECK_THROWS_AS(c.add(parse_trial_xml(trial_xml("NCT9", ""))), Error);
  }

  TEST_CASE("store round trip and errors") {
    Corpus c;
    for (const char* id : {"NCT01000001", "NCT01000006", "NCT01000010"}) {
      c.add(parse_trial_xml(read_file(oracle::fixture(std::string("trials/") + id + ".xml"))));
    }
    c.stats.total_parsed = 3;
    c = drop_uncriterioned(c, rules());
    auto path = temp_path("store.jsonl");
    save_corpus(c, path);
    CHECK(load_corpus(path) == c);

    CHECK_THROWS_AS(load_corpus(temp_path("nope.jsonl")), Error);
    auto bad = temp_path("bad.jsonl");
    write_file(bad, "something-else\t1\n{}\n");
    try {
      load_corpus(bad);
      FAIL("expected FormatVersionMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kFormatVersionMismatch);
    }
    auto text = read_file(path);
    auto cut = temp_path("cut.jsonl");
    write_file(cut, text.substr(0, text.rfind('\n', text.size() - 2) + 1));
    CHECK_THROWS_AS(load_corpus(cut), Error);
  }
}
