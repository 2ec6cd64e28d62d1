#include "trialmatch/metadata.hpp"

#include <algorithm>
#include <cmath>
#include <regex>

#include "trialmatch/negation.hpp"
#include "trialmatch/text_util.hpp"

namespace trialmatch {

namespace {

using svmatch = std::match_results<std::string_view::const_iterator>;

int to_int(const std::ssub_match& m) { return std::stoi(m.str()); }

std::string age_token(int years) { return "age:" + std::to_string(years); }

}  // namespace

// ---------------------------------------------------------------------------
// Age

const std::vector<AgeBracket>& mesh_age_brackets() {
  static const std::vector<AgeBracket> kBrackets = {
      {"infant", 0, 2},       {"preschool_child", 2, 5}, {"child", 5, 12},
      {"adolescent", 12, 19}, {"adult", 19, 65},         {"young_adult", 19, 24},
      {"middle_aged", 44, 65}, {"aged", 65, 80},          {"80_and_over", 80, kMaxAgeYears + 1},
  };
  return kBrackets;
}

std::vector<MetaToken> mesh_age_group(double age) {
  if (!(age >= 0 && age <= kMaxAgeYears)) {
    throw Error(ErrorCode::kAgeOutOfRange, std::to_string(age));
  }
  std::vector<MetaToken> out;
  for (const auto& b : mesh_age_brackets()) {
    if (age >= b.lo && age < b.hi) out.emplace_back(b.token);
  }
  return out;
}

std::vector<MetaToken> topic_age_tokens(std::string_view text) {
  struct Pattern {
    std::regex re;
    int divisor;  // converts the captured number to years
  };
  static const std::vector<Pattern> kPatterns = [] {
    auto ic = std::regex::ECMAScript | std::regex::icase;
    return std::vector<Pattern>{
        {std::regex(R"(\b(\d{1,3})\s*-?\s*(?:years?|yrs?)\s*-?\s*old\b)", ic), 1},
        {std::regex(R"(\b(\d{1,3})\s*-?\s*(?:yo|y\.o\.?|y/o)(?![a-z]))", ic), 1},
        {std::regex(R"(\baged?\s+(\d{1,3})\b)", ic), 1},
        {std::regex(R"(\b(\d{1,3})\s*-?\s*(?:months?|mos?)\s*-?\s*old\b)", ic), 12},
        {std::regex(R"(\b(\d{1,3})\s*-?\s*(?:weeks?|days?)\s*-?\s*old\b)", ic), 1000},
        {std::regex(R"((?:^|[.;]\s+)(\d{1,3})\s?[MF]\b)", std::regex::ECMAScript), 1},
        {std::regex(R"((?:^|[.;]\s+)[MF],\s*(\d{1,3})\b)", std::regex::ECMAScript), 1},
    };
  }();

  std::string s(text);
  std::optional<std::pair<std::ptrdiff_t, int>> first;  // (position, years)
  for (const auto& p : kPatterns) {
    std::smatch m;
    if (!std::regex_search(s, m, p.re)) continue;
    int years = to_int(m[1]) / p.divisor;
    if (years > kMaxAgeYears) continue;
    if (!first || m.position(0) < first->first) first = {m.position(0), years};
  }

  std::vector<MetaToken> out;
  if (first) {
    out.push_back(age_token(first->second));
    for (auto& g : mesh_age_group(first->second)) out.push_back(std::move(g));
    return out;
  }
  static const std::regex kChildWord(R"(\b(?:girl|boy)s?\b)", std::regex::ECMAScript | std::regex::icase);
  if (std::regex_search(s, kChildWord)) out.emplace_back("child");
  return out;
}

namespace {

enum class Bound { kRange, kLower, kLowerStrict, kUpper, kUpperStrict };

struct RangePattern {
  std::regex re;
  Bound bound;
};

const std::vector<RangePattern>& range_patterns() {
  static const std::vector<RangePattern> kPatterns = [] {
    auto ic = std::regex::ECMAScript | std::regex::icase;
    const std::string yrs = R"((?:years?|yrs?)\b)";
    const std::string ge = R"((?:>=|≥|=>|>\s*or\s*=(?:\s*to)?|at\s+least|not\s+younger\s+than|no\s+younger\s+than|minimum(?:\s+age)?(?:\s+of)?|equal\s+to\s+or\s+(?:greater|older)\s+than|(?:greater|older)\s+than\s+or\s+equal\s+to))";
    const std::string gt = R"((?:over|older\s+than|above|greater\s+than|more\s+than|>))";
    const std::string le = R"((?:<=|≤|=<|<\s*or\s*=(?:\s*to)?|up\s+to|not\s+older\s+than|no\s+older\s+than|maximum(?:\s+age)?(?:\s+of)?|at\s+most|equal\s+to\s+or\s+(?:less|younger)\s+than|(?:less|younger)\s+than\s+or\s+equal\s+to))";
    const std::string lt = R"((?:under|younger\s+than|below|less\s+than|<))";
    const std::string age_word = R"(\b(?:age[sd]?|aged\s+between))";
    // "Patients over 50": a bare number only counts after a word for people.
    const std::string person =
        R"(\b(?:patients?|subjects?|participants?|adults?|men|women|males?|females?|individuals?|volunteers?|persons?|people|children)\s+(?:(?:who\s+are|aged?)\s+)?)";
    const std::string bare = R"(\s*(\d{1,3})\b(?!\s*(?:%|\.\d)))";
    return std::vector<RangePattern>{
        {std::regex(R"(between\s+(?:the\s+ages?\s+of\s+)?(\d{1,3})\s*(?:years?\s*(?:old\s*)?)?(?:and|to|-)\s*(\d{1,3})\s*)" + yrs, ic), Bound::kRange},
        {std::regex(R"(between\s+the\s+ages?\s+of\s+(\d{1,3})\s*(?:and|to|-)\s*(\d{1,3}))", ic), Bound::kRange},
        {std::regex(age_word + R"(\s+(\d{1,3})\s*(?:-|–|to)\s*(\d{1,3}))", ic), Bound::kRange},
        {std::regex(R"(\b(\d{1,3})\s*(?:-|–|to)\s*(\d{1,3})\s*(?:years?|yrs?)\s+(?:old|of\s+age))", ic), Bound::kRange},
        {std::regex(R"(\b(\d{1,3})\s*)" + yrs + R"(\s*(?:of\s+age\s+|old\s+)?(?:and|or)\s+(?:over|older|above|greater))", ic), Bound::kLower},
        {std::regex(age_word + R"(\s+(\d{1,3})\s*(?:and|or)\s+(?:over|older|above|greater))", ic), Bound::kLower},
        {std::regex(ge + R"(\s*(?:the\s+age\s+of\s+)?(\d{1,3})\s*)" + yrs, ic), Bound::kLower},
        {std::regex(age_word + R"(\s*(?:of\s+)?)" + ge + R"(\s*(\d{1,3})\b)", ic), Bound::kLower},
        {std::regex(R"(\b(\d{1,3})\s*)" + yrs + R"(\s*(?:of\s+age\s+|old\s+)?(?:and|or)\s+(?:younger|under|below|less))", ic), Bound::kUpper},
        {std::regex(age_word + R"(\s+(\d{1,3})\s*(?:and|or)\s+(?:younger|under|below|less))", ic), Bound::kUpper},
        {std::regex(le + R"(\s*(?:the\s+age\s+of\s+)?(\d{1,3})\s*)" + yrs, ic), Bound::kUpper},
        {std::regex(age_word + R"(\s*(?:of\s+)?)" + le + R"(\s*(\d{1,3})\b)", ic), Bound::kUpper},
        {std::regex(gt + R"(\s*(?:the\s+age\s+of\s+)?(\d{1,3})\s*)" + yrs, ic), Bound::kLowerStrict},
        {std::regex(age_word + R"(\s*)" + gt + R"(\s*(\d{1,3})\b)", ic), Bound::kLowerStrict},
        {std::regex(lt + R"(\s*(?:the\s+age\s+of\s+)?(\d{1,3})\s*)" + yrs, ic), Bound::kUpperStrict},
        {std::regex(person + ge + bare, ic), Bound::kLower},
        {std::regex(person + le + bare, ic), Bound::kUpper},
        {std::regex(person + gt + bare, ic), Bound::kLowerStrict},
        {std::regex(person + lt + bare, ic), Bound::kUpperStrict},
        {std::regex(age_word + R"(\s*)" + lt + R"(\s*(\d{1,3})\b)", ic), Bound::kUpperStrict},
    };
  }();
  return kPatterns;
}

}  // namespace

std::optional<AgeRange> parse_age_range(std::string_view text) {
  struct Hit {
    std::ptrdiff_t begin;
    std::ptrdiff_t end;
    Bound bound;
    int a;
    int b;
  };
  std::string s(text);
  std::vector<Hit> hits;
  for (const auto& p : range_patterns()) {
    for (auto it = std::sregex_iterator(s.begin(), s.end(), p.re); it != std::sregex_iterator(); ++it) {
      const auto& m = *it;
      Hit h{m.position(0), m.position(0) + m.length(0), p.bound, to_int(m[1]), 0};
      if (p.bound == Bound::kRange) h.b = to_int(m[2]);
      hits.push_back(h);
    }
  }
  if (hits.empty()) return std::nullopt;

  // Longest match wins among overlapping hits ("not younger than 19 years"
  // must not also read as "younger than 19 years").
  std::sort(hits.begin(), hits.end(), [](const Hit& x, const Hit& y) {
    if (x.begin != y.begin) return x.begin < y.begin;
    return x.end - x.begin > y.end - y.begin;
  });
  std::vector<Hit> kept;
  for (const auto& h : hits) {
    bool overlaps = std::any_of(kept.begin(), kept.end(),
                                [&](const Hit& k) { return h.begin < k.end && k.begin < h.end; });
    if (!overlaps) kept.push_back(h);
  }

  AgeRange r;
  for (const auto& h : kept) {
    switch (h.bound) {
      case Bound::kRange:
        if (r.lo_open && r.hi_open) {
          r.lo = h.a, r.hi = h.b, r.lo_open = false, r.hi_open = false;
        }
        break;
      case Bound::kLower:
      case Bound::kLowerStrict:
        if (r.lo_open) r.lo = h.a + (h.bound == Bound::kLowerStrict ? 1 : 0), r.lo_open = false;
        break;
      case Bound::kUpper:
      case Bound::kUpperStrict:
        if (r.hi_open) r.hi = h.a - (h.bound == Bound::kUpperStrict ? 1 : 0), r.hi_open = false;
        break;
    }
  }
  if (r.lo_open && r.hi_open) return std::nullopt;
  return r;
}

std::vector<MetaToken> trial_age_tokens(std::optional<int> min_age_months, std::optional<int> max_age_months,
                                        std::string_view criteria_text) {
  std::optional<AgeRange> range;
  if (min_age_months || max_age_months) {
    AgeRange r;
    if (min_age_months) r.lo = *min_age_months / 12, r.lo_open = false;
    if (max_age_months) r.hi = *max_age_months / 12, r.hi_open = false;
    range = r;
  } else {
    range = parse_age_range(criteria_text);
  }
  if (!range) return {};

  int lo = std::clamp(range->lo_open ? 0 : range->lo, 0, kMaxAgeYears);
  int hi = std::clamp(range->hi_open ? kMaxAgeYears : range->hi, 0, kMaxAgeYears);
  if (lo > hi) {
    throw Error(ErrorCode::kInvertedRange, std::to_string(lo) + " > " + std::to_string(hi));
  }

  std::vector<MetaToken> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 2));
  for (int k = lo; k <= hi; ++k) out.push_back(age_token(k));

  // A group token only when the range contains the whole bracket and starts
  // at its lower edge.
  for (const auto& b : mesh_age_brackets()) {
    int last_year = std::min(b.hi - 1, kMaxAgeYears);
    bool covers = range->hi_open || hi == last_year || hi == b.hi;
    if (lo == b.lo && covers) {
      out.emplace_back(b.token);
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Gender

GenderLexicon GenderLexicon::parse(std::string_view contents) {
  GenderLexicon lex;
  for_each_data_line(contents, [&](std::size_t line_no, const std::vector<std::string>& f) {
    if (f.size() < 2 || f.size() > 3 || (f[0] != "male" && f[0] != "female") || trim(f[1]).empty()) {
      throw Error(ErrorCode::kMalformedDataLine, "gender line " + std::to_string(line_no));
    }
    std::string word(trim(f[1]));
    bool single_upper = word.size() == 1 && word[0] >= 'A' && word[0] <= 'Z';
    lex.words_.push_back({single_upper ? word : to_lower(word), f[0], f.size() == 3 ? std::string(trim(f[2])) : ""});
  });
  return lex;
}

GenderLexicon GenderLexicon::load(const std::filesystem::path& path) { return parse(read_file(path)); }

const GenderWord* GenderLexicon::find(std::string_view source_word) const {
  std::string lower = to_lower(source_word);
  for (const auto& w : words_) {
    bool single_upper = w.word.size() == 1 && w.word[0] >= 'A' && w.word[0] <= 'Z';
    if (single_upper ? source_word == w.word : lower == w.word) return &w;
  }
  return nullptr;
}

std::vector<MetaToken> gender_tokens(std::string_view text, const GenderLexicon& lexicon) {
  std::vector<MetaToken> genders;
  std::vector<MetaToken> groups;
  for (const Span& s : segment_sentences(text)) {
    auto words = word_tokens(text.substr(s.begin, s.size()));
    for (std::size_t i = 0; i < words.size(); ++i) {
      std::string_view source = text.substr(s.begin + words[i].span.begin, words[i].span.size());
      const GenderWord* g = lexicon.find(source);
      if (!g) continue;
      // Single letters ("F, 29") only count at the start of a sentence, so a
      // temperature in Fahrenheit is not read as a gender.
      if (g->word.size() == 1 && i >= 2) continue;
      if (std::find(genders.begin(), genders.end(), g->gender) == genders.end()) genders.push_back(g->gender);
      if (!g->age_group.empty() && std::find(groups.begin(), groups.end(), g->age_group) == groups.end()) {
        groups.push_back(g->age_group);
      }
    }
  }
  genders.insert(genders.end(), groups.begin(), groups.end());
  return genders;
}

std::vector<MetaToken> trial_gender_tokens(Gender gender) {
  switch (gender) {
    case Gender::kMale: return {"male"};
    case Gender::kFemale: return {"female"};
    case Gender::kAll: return {"male", "female"};
    case Gender::kUnspecified: return {};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Clinical variables

std::string normalize_unit(std::string_view unit) {
  std::string u = to_lower(trim(unit));
  for (std::size_t pos; (pos = u.find(" per ")) != std::string::npos;) u.replace(pos, 5, "/");
  std::erase(u, ' ');
  while (!u.empty() && (u.back() == '.' || u.back() == ',')) u.pop_back();
  return u;
}

namespace {

std::string token_safe(std::string_view name) {
  std::vector<std::string> words;
  for (auto& w : word_tokens(name)) words.push_back(std::move(w.text));
  return join(words, "_");
}

double parse_number(const std::string& s) {
  std::string digits;
  for (char c : s) {
    if (c != ',') digits.push_back(c);
  }
  return std::stod(digits);
}

}  // namespace

ClinicalVariables ClinicalVariables::parse(std::string_view ranges_tsv, std::string_view aliases_tsv) {
  ClinicalVariables vars;
  for_each_data_line(ranges_tsv, [&](std::size_t line_no, const std::vector<std::string>& f) {
    auto bad = [&](const std::string& why) {
      throw Error(ErrorCode::kMalformedDataLine, "reference range line " + std::to_string(line_no) + ": " + why);
    };
    if (f.size() < 4 || f.size() > 5) bad("expected 4 or 5 columns");
    ReferenceRange r;
    r.variable = to_lower(trim(f[0]));
    for (auto u : split(f[1], '|')) {
      if (!trim(u).empty()) r.units.push_back(normalize_unit(u));
    }
    if (r.variable.empty() || r.units.empty()) bad("empty variable or unit");
    try {
      r.normal_low = std::stod(f[2]);
      r.normal_high = std::stod(f[3]);
    } catch (const std::exception&) {
      bad("non-numeric bound");
    }
    if (!(r.normal_low < r.normal_high)) bad("normal_low must be below normal_high");
    if (f.size() == 5 && !trim(f[4]).empty()) {
      auto names = split(f[4], '|');
      if (names.size() == 1) {
        r.low_name = r.high_name = token_safe(names[0]);
      } else if (names.size() == 2) {
        r.low_name = token_safe(names[0]);
        r.high_name = token_safe(names[1]);
      } else {
        bad("abnormal name must be 'name' or 'low|high'");
      }
    }
    vars.ranges_.push_back(std::move(r));
  });
  for_each_data_line(aliases_tsv, [&](std::size_t line_no, const std::vector<std::string>& f) {
    if (f.size() != 2) {
      throw Error(ErrorCode::kMalformedDataLine, "alias line " + std::to_string(line_no) + ": expected 2 columns");
    }
    Alias a;
    a.variable = to_lower(trim(f[0]));
    for (auto& w : word_tokens(f[1])) a.words.push_back(std::move(w.text));
    if (a.words.empty() || vars.components(a.variable).empty()) {
      throw Error(ErrorCode::kMalformedDataLine,
                  "alias line " + std::to_string(line_no) + ": unknown variable '" + a.variable + "'");
    }
    vars.aliases_.push_back(std::move(a));
  });
  // Longer aliases first so "white blood cell count" wins over "white".
  std::stable_sort(vars.aliases_.begin(), vars.aliases_.end(),
                   [](const Alias& x, const Alias& y) { return x.words.size() > y.words.size(); });
  return vars;
}

ClinicalVariables ClinicalVariables::load(const std::filesystem::path& ranges, const std::filesystem::path& aliases) {
  return parse(read_file(ranges), read_file(aliases));
}

std::vector<const ReferenceRange*> ClinicalVariables::components(std::string_view variable) const {
  std::vector<const ReferenceRange*> out;
  for (const auto& r : ranges_) {
    if (r.variable == variable) out.push_back(&r);
  }
  return out;
}

bool ClinicalVariables::is_known_unit(std::string_view normalized_unit) const {
  return std::any_of(ranges_.begin(), ranges_.end(), [&](const ReferenceRange& r) {
    return std::find(r.units.begin(), r.units.end(), normalized_unit) != r.units.end();
  });
}

std::vector<MetaToken> clinvar_tokens(std::string_view text, const ClinicalVariables& variables, Diagnostics* diag) {
  // Value reading right after a variable name: optional parenthetical and
  // linking words or comparators, the number(s), then an optional unit.
  static const std::regex kReading(
      R"(^\s*(?:\([^)]{0,20}\)\s*)?(?:(?:of|was|is|were|measured\s+at|at|=|:|-|>=|<=|>|<|≥|≤|greater\s+than|less\s+than|above|below|at\s+least)\s*)*)"
      R"((\d{1,3}(?:,\d{3})+|\d+(?:\.\d+)?)(?:\s*/\s*(\d+(?:\.\d+)?))?)"
      R"((?:\s*((?:[a-zA-Z%/^0-9.]|°|µ|μ)+(?:\s+per\s+[a-z]+)?))?)",
      std::regex::ECMAScript | std::regex::icase);

  std::vector<MetaToken> out;
  auto words = word_tokens(text);
  std::size_t i = 0;
  while (i < words.size()) {
    const ClinicalVariables::Alias* alias = nullptr;
    for (const auto& a : variables.aliases()) {
      if (i + a.words.size() > words.size()) continue;
      bool same = true;
      for (std::size_t k = 0; k < a.words.size() && same; ++k) same = words[i + k].text == a.words[k];
      if (same) {
        alias = &a;
        break;
      }
    }
    if (!alias) {
      ++i;
      continue;
    }
    std::size_t alias_end = words[i + alias->words.size() - 1].span.end;
    i += alias->words.size();

    std::string_view rest = text.substr(alias_end);
    svmatch m;
    if (!std::regex_search(rest.begin(), rest.end(), m, kReading, std::regex_constants::match_continuous)) continue;

    std::vector<double> values = {parse_number(m[1].str())};
    if (m[2].matched) values.push_back(parse_number(m[2].str()));
    std::string unit = m[3].matched ? normalize_unit(m[3].str()) : "";
    bool unit_like = !unit.empty() && (variables.is_known_unit(unit) ||
                                       unit.find_first_of("/%^°") != std::string::npos);
    auto parts = variables.components(alias->variable);
    if (unit_like && std::find(parts[0]->units.begin(), parts[0]->units.end(), unit) == parts[0]->units.end()) {
      if (diag) diag->warn("unit '" + unit + "' does not match variable '" + alias->variable + "'");
      continue;
    }

    // Skip past the consumed reading so its numbers are not re-read.
    std::size_t reading_end = alias_end + static_cast<std::size_t>(m.length(0));
    while (i < words.size() && words[i].span.begin < reading_end) ++i;

    std::string abnormal_name;
    bool normal = true;
    for (std::size_t k = 0; k < values.size() && k < parts.size(); ++k) {
      const ReferenceRange& r = *parts[k];
      if (values[k] < r.normal_low || values[k] > r.normal_high) {
        if (normal) {
          const ReferenceRange& named = (r.low_name.empty() && r.high_name.empty()) ? *parts[0] : r;
          abnormal_name = values[k] < r.normal_low ? named.low_name : named.high_name;
        }
        normal = false;
      }
    }
    out.push_back(alias->variable + (normal ? ":normal" : ":abnormal"));
    if (!normal && !abnormal_name.empty()) out.push_back(abnormal_name);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Family history

FamilyCues FamilyCues::parse(std::string_view contents) {
  FamilyCues cues;
  for_each_data_line(contents, [&](std::size_t, const std::vector<std::string>& f) {
    std::vector<std::string> words;
    for (auto& w : word_tokens(f[0])) words.push_back(std::move(w.text));
    if (!words.empty()) cues.cues_.push_back(std::move(words));
  });
  return cues;
}

FamilyCues FamilyCues::load(const std::filesystem::path& path) { return parse(read_file(path)); }

bool FamilyCues::matches(const std::vector<WordToken>& words) const {
  for (const auto& cue : cues_) {
    for (std::size_t i = 0; i + cue.size() <= words.size(); ++i) {
      bool same = true;
      for (std::size_t k = 0; k < cue.size() && same; ++k) same = words[i + k].text == cue[k];
      if (same) return true;
    }
  }
  return false;
}

FamilyHistory family_history(std::string_view text, const Lexicon& lexicon, const FamilyCues& cues) {
  FamilyHistory out;
  for (const Span& s : segment_sentences(text)) {
    std::string_view sentence = text.substr(s.begin, s.size());
    if (!cues.matches(word_tokens(sentence))) continue;
    for (const auto& e : tag(sentence, lexicon)) {
      out.tokens.push_back("family:" + token_safe(e.preferred));
      out.consumed.push_back({s.begin + e.span.begin, s.begin + e.span.end});
    }
  }
  return out;
}

std::vector<MetaToken> family_history_tokens(std::string_view text, const Lexicon& lexicon, const FamilyCues& cues) {
  return family_history(text, lexicon, cues).tokens;
}

}  // namespace trialmatch
