#include "trialmatch/criteria.hpp"

#include <algorithm>

#include "trialmatch/error.hpp"
#include "trialmatch/text_util.hpp"

namespace trialmatch {

CriteriaRules CriteriaRules::parse(std::string_view contents) {
  CriteriaRules rules;
  for_each_data_line(contents, [&](std::size_t line_no, const std::vector<std::string>& f) {
    auto bad = [&](const std::string& why) {
      throw Error(ErrorCode::kMalformedDataLine, "criteria rules line " + std::to_string(line_no) + ": " + why);
    };
    try {
      if (f[0] == "heading" && f.size() == 3) {
        HeadingKind kind;
        if (f[1] == "inclusion") kind = HeadingKind::kInclusion;
        else if (f[1] == "exclusion") kind = HeadingKind::kExclusion;
        else bad("unknown heading kind '" + f[1] + "'");
        rules.headings_.push_back({kind, std::regex(f[2], std::regex::ECMAScript | std::regex::icase)});
      } else if (f[0] == "bullet" && f.size() == 2) {
        rules.bullets_.emplace_back(f[1], std::regex::ECMAScript);
      } else if (f[0] == "abbrev" && f.size() == 2) {
        rules.abbreviations_.push_back(to_lower(f[1]));
      } else {
        bad("unrecognized rule");
      }
    } catch (const std::regex_error& e) {
      bad(std::string("bad regex: ") + e.what());
    }
  });
  return rules;
}

CriteriaRules CriteriaRules::load(const std::filesystem::path& path) { return parse(read_file(path)); }

HeadingMatch CriteriaRules::match_heading(std::string_view line) const {
  for (const auto& rule : headings_) {
    std::match_results<std::string_view::const_iterator> m;
    if (std::regex_search(line.begin(), line.end(), m, rule.pattern, std::regex_constants::match_continuous)) {
      return {rule.kind, static_cast<std::size_t>(m.length(0))};
    }
  }
  return {};
}

std::size_t CriteriaRules::bullet_prefix(std::string_view line) const {
  for (const auto& re : bullets_) {
    std::match_results<std::string_view::const_iterator> m;
    if (std::regex_search(line.begin(), line.end(), m, re, std::regex_constants::match_continuous)) {
      return static_cast<std::size_t>(m.length(0));
    }
  }
  return 0;
}

bool CriteriaRules::is_abbreviation(std::string_view lowercase_word) const {
  return std::find(abbreviations_.begin(), abbreviations_.end(), lowercase_word) != abbreviations_.end();
}

HeadingKind heading_kind(std::string_view line, const CriteriaRules& rules) {
  return rules.match_heading(line).kind;
}

namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

void push_statement(std::vector<std::string>& out, std::string_view text) {
  std::string s = collapse_whitespace(text);
  if (!s.empty()) out.push_back(std::move(s));
}

// Sentence fallback: break after '.', '!' or '?' when the next visible
// character is a capital letter or a newline intervenes; blank lines always
// break.
void split_sentences(std::string_view text, const CriteriaRules& rules, std::vector<std::string>& out) {
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '\n') {
      std::size_t j = i + 1;
      while (j < text.size() && (text[j] == ' ' || text[j] == '\t' || text[j] == '\r')) ++j;
      if (j < text.size() && text[j] == '\n') {
        push_statement(out, text.substr(start, i - start));
        start = j;
        i = j;
      }
      continue;
    }
    if (c != '.' && c != '!' && c != '?') continue;
    std::size_t j = i + 1;
    bool newline = false;
    while (j < text.size() && is_blank(text[j])) newline |= text[j++] == '\n';
    if (j == i + 1 && j < text.size()) continue;  // no whitespace after the period
    if (j < text.size() && !newline && !is_upper(text[j])) continue;
    if (c == '.') {
      std::size_t w = i;
      while (w > start && is_word_char(text[w - 1])) --w;
      if (rules.is_abbreviation(to_lower(text.substr(w, i - w)))) continue;
    }
    push_statement(out, text.substr(start, i + 1 - start));
    start = j;
    i = j - 1;
  }
  push_statement(out, text.substr(std::min(start, text.size())));
}

void segment_region(const std::vector<std::string_view>& lines, const CriteriaRules& rules,
                    std::vector<std::string>& out) {
  bool has_bullets = std::any_of(lines.begin(), lines.end(),
                                 [&](std::string_view l) { return rules.bullet_prefix(l) > 0; });
  if (!has_bullets) {
    std::string text;
    for (auto l : lines) {
      text.append(l);
      text.push_back('\n');
    }
    split_sentences(text, rules, out);
    return;
  }

  std::string current;
  auto flush = [&] {
    push_statement(out, current);
    current.clear();
  };
  for (auto line : lines) {
    if (trim(line).empty()) {
      flush();
      continue;
    }
    if (std::size_t n = rules.bullet_prefix(line)) {
      flush();
      current.assign(line.substr(n));
    } else {
      current.push_back(' ');
      current.append(line);
    }
  }
  flush();
}

}  // namespace

Criteria split_criteria(std::string_view eligibility_raw, const CriteriaRules& rules) {
  std::vector<std::string_view> inclusion_lines;
  std::vector<std::string_view> exclusion_lines;
  std::vector<std::string_view>* region = nullptr;

  for (auto line : split_lines(eligibility_raw)) {
    // Headings may sit behind a bullet ("- Inclusion Criteria:").
    std::size_t bullet = rules.bullet_prefix(line);
    HeadingMatch h = rules.match_heading(line);
    std::size_t offset = 0;
    if (h.kind == HeadingKind::kNone && bullet > 0) {
      h = rules.match_heading(line.substr(bullet));
      offset = bullet;
    }
    if (h.kind != HeadingKind::kNone) {
      region = h.kind == HeadingKind::kInclusion ? &inclusion_lines : &exclusion_lines;
      // A region switch ends the previous paragraph.
      if (!region->empty()) region->push_back({});
      std::string_view rest = line.substr(offset + h.length);
      if (!trim(rest).empty()) region->push_back(rest);
      continue;
    }
    if (region) region->push_back(line);
  }

  Criteria c;
  segment_region(inclusion_lines, rules, c.inclusion);
  segment_region(exclusion_lines, rules, c.exclusion);
  return c;
}

}  // namespace trialmatch
