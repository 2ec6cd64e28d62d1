#include <doctest.h>

#include <set>

#include "../support/oracles.hpp"
#include "trialmatch/concept_tagger.hpp"

using namespace trialmatch;

namespace {

struct Match {
  std::size_t first;
  std::size_t last;
  friend bool operator==(const Match&, const Match&) = default;
};

// Every (i, j) whose words form a lexicon phrase, then leftmost-longest
// selection without overlap.
std::vector<Match> brute_force(const std::vector<std::string>& words, const std::set<std::string>& phrases) {
  std::vector<Match> all;
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::string phrase;
    for (std::size_t j = i; j < words.size(); ++j) {
      phrase += (j > i ? " " : "") + words[j];
      if (phrases.contains(phrase)) all.push_back({i, j + 1});
    }
  }
  std::vector<Match> chosen;
  std::size_t pos = 0;
  while (true) {
    const Match* best = nullptr;
    for (const auto& m : all) {
      if (m.first < pos) continue;
      if (!best || m.first < best->first || (m.first == best->first && m.last > best->last)) best = &m;
    }
    if (!best) break;
    chosen.push_back(*best);
    pos = best->last;
  }
  return chosen;
}

}  // namespace

TEST_SUITE("concept_tagger") {
  TEST_CASE("semantic type codes") {
    CHECK(semtype_from_code("dsyn") == SemType::kDsyn);
    CHECK_FALSE(semtype_from_code("geoa"));
    for (auto t : {SemType::kAggp, SemType::kCell, SemType::kFndg, SemType::kDsyn, SemType::kHops, SemType::kAapp,
                   SemType::kLbtr, SemType::kOrgf, SemType::kPhsu, SemType::kQnco, SemType::kSosy, SemType::kTopp}) {
      CHECK(semtype_from_code(code(t)) == t);
    }
  }

  TEST_CASE("lexicon loading") {
    Diagnostics diag;
    auto lex = Lexicon::parse("# comment\naortic stenosis\taortic stenosis\tdsyn\nparis\tparis\tgeoa\n", &diag);
    CHECK(lex.size() == 1);
    CHECK(lex.rejected() == 1);
    CHECK(diag.warnings.size() == 1);
    try {
      Lexicon::parse("aortic stenosis\tdsyn\n");
      FAIL("expected MalformedLexiconLine");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kMalformedLexiconLine);
    }
    CHECK_THROWS_AS(Lexicon::load(oracle::fixture("missing.tsv")), Error);
  }

  TEST_CASE("shipped lexicon covers every retained type") {
    auto lex = Lexicon::load(std::string(TRIALMATCH_DATA_DIR) + "/lexicon.tsv");
    CHECK(lex.size() >= 2000);
    CHECK(lex.rejected() == 0);
    std::set<SemType> seen;
    for (const auto& e : lex.entries()) seen.insert(e.semtype);
    CHECK(seen.size() == kSemTypeCount);
  }

  TEST_CASE("plural folding") {
    CHECK(fold_token("disorders") == "disorder");
    CHECK(fold_token("smokes") == "smoke");
    CHECK(fold_token("abscess") == "abscess");
    CHECK(fold_token("virus") == "virus");
    CHECK(fold_token("pelvis") == "pelvis");
    CHECK(fold_token("has") == "has");
  }

  TEST_CASE("tagging examples") {
    auto lex = Lexicon::parse("aortic stenosis\taortic stenosis\tdsyn\nstenosis\tstenosis\tdsyn\n"
                              "connective tissue disorder\tconnective tissue disorder\tdsyn\n");
    auto one = tag("Presenting with aortic stenosis", lex);
    REQUIRE(one.size() == 1);
    CHECK(one[0].text == "aortic stenosis");
    CHECK(one[0].span.begin == 16);
    CHECK(one[0].span.end == 31);
    CHECK(one[0].polarity == Polarity::kAffirmed);

    CHECK(tag("", lex).empty());

    auto two = tag("stenosis aortic stenosis", lex);
    REQUIRE(two.size() == 2);
    CHECK(two[0].text == "stenosis");
    CHECK(two[1].text == "aortic stenosis");

    auto plural = tag("known Connective Tissue Disorders (such as)", lex);
    REQUIRE(plural.size() == 1);
    CHECK(plural[0].text == "Connective Tissue Disorders");
    CHECK(plural[0].preferred == "connective tissue disorder");
  }

  TEST_CASE("surface forms keep their punctuation") {
    auto lex = Lexicon::load(oracle::fixture("aortic_stenosis_lexicon.tsv"));
    auto ents = tag("such as Marfan's Syndrome, Ehlers-Danlos Syndrome)", lex);
    REQUIRE(ents.size() == 2);
    CHECK(ents[0].text == "Marfan's Syndrome");
    CHECK(ents[1].text == "Ehlers-Danlos Syndrome");
  }

  TEST_CASE("greedy longest match agrees with the brute-force oracle") {
    oracle::Gen g(41);
    const std::vector<std::string> vocab = {"aortic", "valve", "stenosis", "heart", "failure", "chest", "pain",
                                            "acute", "chronic", "kidney"};
    for (int round = 0; round < 300; ++round) {
      std::set<std::string> phrases;
      Lexicon lex;
      int n = g.uniform(1, 12);
      for (int i = 0; i < n; ++i) {
        int len = g.uniform(1, 3);
        std::string p;
        for (int w = 0; w < len; ++w) p += (w ? " " : "") + g.pick(vocab);
        if (phrases.insert(p).second) lex.add({p, p, SemType::kDsyn});
      }
      std::vector<std::string> words;
      std::string text;
      int len = g.uniform(0, 20);
      for (int i = 0; i < len; ++i) {
        words.push_back(g.pick(vocab));
        text += (i ? (g.coin(0.2) ? ", " : " ") : "") + words.back();
      }
      auto got = tag(text, lex);
      auto want = brute_force(words, phrases);
      REQUIRE(got.size() == want.size());
      auto tokens = word_tokens(text);
      for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(got[i].span.begin == tokens[want[i].first].span.begin);
        CHECK(got[i].span.end == tokens[want[i].last - 1].span.end);
        if (i > 0) CHECK(got[i - 1].span.end <= got[i].span.begin);
        CHECK(to_lower(text.substr(got[i].span.begin, got[i].span.size())) == to_lower(got[i].text));
      }

      // An entry made of words absent from the text changes nothing.
      Lexicon bigger = lex;
      bigger.add({"unrelated phrase", "unrelated phrase", SemType::kFndg});
      CHECK(tag(text, bigger) == got);
    }
  }
}
