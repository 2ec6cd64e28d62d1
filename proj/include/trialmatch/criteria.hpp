#pragma once

#include <cstddef>
#include <filesystem>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

namespace trialmatch {

// Inclusion and exclusion statements of one eligibility block, in source order.
struct Criteria {
  std::vector<std::string> inclusion;
  std::vector<std::string> exclusion;

  bool empty() const { return inclusion.empty() && exclusion.empty(); }
  friend bool operator==(const Criteria&, const Criteria&) = default;
};

enum class HeadingKind { kInclusion, kExclusion, kNone };

struct HeadingMatch {
  HeadingKind kind = HeadingKind::kNone;
  std::size_t length = 0;  // characters consumed by the heading itself
};

// Heading and bullet patterns. Loaded from a plain-text rules file with lines
//   heading <TAB> inclusion|exclusion <TAB> regex      (matched case-insensitively)
//   bullet <TAB> regex                                 (case-sensitive)
//   abbrev <TAB> word                                  (no sentence break after "word.")
// Every regex is anchored at the start of a line.
class CriteriaRules {
 public:
  static CriteriaRules parse(std::string_view contents);
  static CriteriaRules load(const std::filesystem::path& path);

  HeadingMatch match_heading(std::string_view line) const;
  // Length of the bullet marker (including trailing blanks) at the start of
  // the line, or 0 when the line does not start with a bullet.
  std::size_t bullet_prefix(std::string_view line) const;
  bool is_abbreviation(std::string_view lowercase_word) const;

 private:
  struct HeadingRule {
    HeadingKind kind;
    std::regex pattern;
  };
  std::vector<HeadingRule> headings_;
  std::vector<std::regex> bullets_;
  std::vector<std::string> abbreviations_;
};

HeadingKind heading_kind(std::string_view line, const CriteriaRules& rules);

// Heading-driven split. Text before the first heading is dropped; repeated
// inclusion (or exclusion) regions are concatenated. Bullet items are
// statements when the region has bullets, otherwise sentences are.
Criteria split_criteria(std::string_view eligibility_raw, const CriteriaRules& rules);

}  // namespace trialmatch
