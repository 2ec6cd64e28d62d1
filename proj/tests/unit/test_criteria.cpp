#include <doctest.h>

#include <algorithm>

#include "../support/oracles.hpp"
#include "trialmatch/criteria.hpp"
#include "trialmatch/text_util.hpp"

using namespace trialmatch;

namespace {

const CriteriaRules& rules() {
  static const CriteriaRules r = CriteriaRules::load(std::string(TRIALMATCH_DATA_DIR) + "/criteria_rules.txt");
  return r;
}

const char* kAorticStenosis = R"(
        Inclusion Criteria:

          -  Patients > or = to 18 years of age.

          -  Presenting with aortic stenosis and to undergo elective aortic valve replacement or repair with or without aortic aneurysm dilation repair.

          -  Able to sign informed consent document

        Exclusion Criteria:

          -  Patients unable to provide informed consent for any reason.

          -  Patients with predominant aortic regurgitation valve disease.

          -  Patients with other known connective tissue disorders (such as Marfan's Syndrome, Ehlers-Danlos Syndrome)
)";

}  // namespace

TEST_SUITE("criteria") {
  TEST_CASE("example trial splits into three and three statements") {
    auto c = split_criteria(kAorticStenosis, rules());
    REQUIRE(c.inclusion.size() == 3);
    REQUIRE(c.exclusion.size() == 3);
    CHECK(c.inclusion[0] == "Patients > or = to 18 years of age.");
    CHECK(c.inclusion[2] == "Able to sign informed consent document");
    CHECK(c.exclusion[0] == "Patients unable to provide informed consent for any reason.");
    CHECK(c.exclusion[2].starts_with("Patients with other known connective tissue disorders"));
  }

  TEST_CASE("single inline statement") {
    auto c = split_criteria("Inclusion Criteria: - adults", rules());
    CHECK(c.inclusion == std::vector<std::string>{"adults"});
    CHECK(c.exclusion.empty());
  }

  TEST_CASE("no heading gives empty criteria") {
    CHECK(split_criteria("Adults with hypertension. No other requirements.", rules()).empty());
    CHECK(split_criteria("", rules()).empty());
  }

  TEST_CASE("heading variants") {
    struct Row {
      const char* line;
      HeadingKind kind;
    };
    const Row rows[] = {
        {"Inclusion Criteria:", HeadingKind::kInclusion},
        {"INCLUSION CRITERIA:", HeadingKind::kInclusion},
        {"Inclusion criteria", HeadingKind::kInclusion},
        {"Inclusion:", HeadingKind::kInclusion},
        {"INCLUSION", HeadingKind::kInclusion},
        {"  Key Inclusion Criteria:", HeadingKind::kInclusion},
        {"Main inclusion criteria:", HeadingKind::kInclusion},
        {"Inclusion Criterion:", HeadingKind::kInclusion},
        {"Inclusion Criteria - ", HeadingKind::kInclusion},
        {"Inclusion criteria for cohort A:", HeadingKind::kInclusion},
        {"Patients must meet all of the following inclusion criteria:", HeadingKind::kInclusion},
        {"Exclusion Criteria:", HeadingKind::kExclusion},
        {"EXCLUSION CRITERIA:", HeadingKind::kExclusion},
        {"Key exclusion criteria", HeadingKind::kExclusion},
        {"Exclusion:", HeadingKind::kExclusion},
        {"Exclusions:", HeadingKind::kExclusion},
        {"General Exclusion Criteria:", HeadingKind::kExclusion},
        {"Patients with any of the following criteria will be excluded:", HeadingKind::kExclusion},
        {"Subjects meeting any of the following exclusion criteria:", HeadingKind::kExclusion},
        {"Patients will be excluded if they have:", HeadingKind::kExclusion},
        {"Primary outcome", HeadingKind::kNone},
        {"Inclusion of women in the trial is encouraged.", HeadingKind::kNone},
        {"Exclusionary medications are listed below", HeadingKind::kNone},
        {"- adults", HeadingKind::kNone},
        {"", HeadingKind::kNone},
    };
    for (const auto& r : rows) {
      CAPTURE(r.line);
      CHECK(heading_kind(r.line, rules()) == r.kind);
    }
  }

  TEST_CASE("numbered and starred bullets") {
    auto c = split_criteria("Inclusion Criteria:\n1. Men aged 40 to 80\n2. Smoker\nExclusion Criteria:\n* Asthma\n* Lung cancer\n",
                            rules());
    CHECK(c.inclusion == std::vector<std::string>{"Men aged 40 to 80", "Smoker"});
    CHECK(c.exclusion == std::vector<std::string>{"Asthma", "Lung cancer"});
  }

  TEST_CASE("continuation lines join their bullet") {
    auto c = split_criteria("Inclusion Criteria:\n - Adults with\n   type 2 diabetes\n - BMI over 25\n", rules());
    CHECK(c.inclusion == std::vector<std::string>{"Adults with type 2 diabetes", "BMI over 25"});
  }

  TEST_CASE("sentence fallback without bullets") {
    auto c = split_criteria(
        "Inclusion Criteria: Adults aged 18 or older. Diagnosis of asthma, e.g. by spirometry.\n"
        "Exclusion Criteria: Pregnancy. Smokers\n",
        rules());
    CHECK(c.inclusion == std::vector<std::string>{"Adults aged 18 or older.", "Diagnosis of asthma, e.g. by spirometry."});
    CHECK(c.exclusion == std::vector<std::string>{"Pregnancy.", "Smokers"});
  }

  TEST_CASE("text before the first heading is dropped and regions concatenate") {
    auto c = split_criteria(
        "Eligibility:\nAll patients screened.\nInclusion Criteria:\n- A\nExclusion Criteria:\n- B\n"
        "Inclusion Criteria:\n- C\nExclusion Criteria:\n- D\n",
        rules());
    CHECK(c.inclusion == std::vector<std::string>{"A", "C"});
    CHECK(c.exclusion == std::vector<std::string>{"B", "D"});
  }

  TEST_CASE("only an inclusion heading") {
    auto c = split_criteria("Inclusion Criteria:\n- Adults\n", rules());
    CHECK(c.inclusion.size() == 1);
    CHECK(c.exclusion.empty());
    CHECK_FALSE(c.empty());
  }

  TEST_CASE("statements are trimmed, heading-free, ordered and deterministic") {
    oracle::Gen g(31);
    const std::vector<std::string> items = {"Adults with asthma", "BMI over 30", "Smoker", "Pregnancy",
                                            "History of stroke", "Age 18 to 65 years", "Informed consent"};
    const std::vector<std::string> bullets = {"- ", "* ", "1. ", "  -  "};
    for (int round = 0; round < 200; ++round) {
      std::string raw = g.coin() ? "Eligibility\n" : "";
      std::vector<std::string> want_incl;
      std::vector<std::string> want_excl;
      for (int region = 0; region < 2; ++region) {
        bool inclusion = region == 0;
        raw += inclusion ? g.pick(std::vector<std::string>{"Inclusion Criteria:\n", "INCLUSION:\n", "Key inclusion criteria\n"})
                         : g.pick(std::vector<std::string>{"Exclusion Criteria:\n", "EXCLUSION CRITERIA\n"});
        int n = g.uniform(0, 4);
        std::string bullet = g.pick(bullets);
        for (int i = 0; i < n; ++i) {
          std::string item = g.pick(items);
          raw += bullet + item + (g.coin() ? "\n\n" : "\n");
          (inclusion ? want_incl : want_excl).push_back(item);
        }
      }
      auto c = split_criteria(raw, rules());
      CHECK(c.inclusion == want_incl);
      CHECK(c.exclusion == want_excl);
      CHECK(split_criteria(raw, rules()) == c);
      for (const auto* list : {&c.inclusion, &c.exclusion}) {
        for (const auto& s : *list) {
          CHECK_FALSE(s.empty());
          CHECK(std::string(trim(s)) == s);
          CHECK(heading_kind(s, rules()) == HeadingKind::kNone);
        }
      }
    }
  }

  TEST_CASE("rules file errors") {
    CHECK_THROWS_AS(CriteriaRules::parse("heading\tsideways\tfoo\n"), Error);
    CHECK_THROWS_AS(CriteriaRules::parse("heading\tinclusion\t(unclosed\n"), Error);
    CHECK_THROWS_AS(CriteriaRules::parse("shape\tx\n"), Error);
  }
}
