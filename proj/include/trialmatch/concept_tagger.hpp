#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "trialmatch/error.hpp"
#include "trialmatch/text_util.hpp"

namespace trialmatch {

// The twelve UMLS semantic types retained for concept matching.
enum class SemType { kAggp, kCell, kFndg, kDsyn, kHops, kAapp, kLbtr, kOrgf, kPhsu, kQnco, kSosy, kTopp };

inline constexpr std::size_t kSemTypeCount = 12;

const char* code(SemType t);
std::optional<SemType> semtype_from_code(std::string_view code);

enum class Polarity { kAffirmed, kNegated };

inline Polarity flip(Polarity p) { return p == Polarity::kAffirmed ? Polarity::kNegated : Polarity::kAffirmed; }

struct LexiconEntry {
  std::string surface;    // lowercase, possibly multi-word
  std::string preferred;  // canonical concept name
  SemType semtype;
};

struct TaggedEntity {
  std::string text;  // source text under span
  std::string preferred;
  SemType semtype = SemType::kDsyn;
  Span span;
  Polarity polarity = Polarity::kAffirmed;

  friend bool operator==(const TaggedEntity&, const TaggedEntity&) = default;
};

// Lowercase word with a trailing plural 's' removed ("disorders" ->
// "disorder"). Words ending in ss/us/is and words of three letters or fewer
// are left alone.
std::string fold_token(std::string_view lowercase_word);

class Lexicon {
 public:
  // TSV: surface <TAB> preferred <TAB> semtype. Lines whose semtype is not
  // one of the retained twelve are skipped and counted in rejected().
  static Lexicon parse(std::string_view contents, Diagnostics* diag = nullptr);
  static Lexicon load(const std::filesystem::path& path, Diagnostics* diag = nullptr);

  // Returns false when an entry with the same folded surface already exists.
  bool add(LexiconEntry entry);

  const std::vector<LexiconEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t rejected() const { return rejected_; }
  std::size_t max_words() const { return max_words_; }

  // Entry whose folded word sequence equals words[first, last), if any.
  const LexiconEntry* find(const std::vector<WordToken>& words, std::size_t first, std::size_t last) const;

 private:
  std::vector<LexiconEntry> entries_;
  std::unordered_map<std::string, std::size_t> by_key_;
  std::size_t max_words_ = 0;
  std::size_t rejected_ = 0;
};

// Greedy longest-match, left to right, non-overlapping. Entities come back
// affirmed and ordered by span start.
std::vector<TaggedEntity> tag(std::string_view text, const Lexicon& lexicon);

}  // namespace trialmatch
