#include "trialmatch/concept_tagger.hpp"

#include <array>

namespace trialmatch {

namespace {

constexpr std::array<std::string_view, kSemTypeCount> kCodes = {
    "aggp", "cell", "fndg", "dsyn", "hops", "aapp", "lbtr", "orgf", "phsu", "qnco", "sosy", "topp"};

std::string folded_key(const std::vector<WordToken>& words, std::size_t first, std::size_t last) {
  std::string key;
  for (std::size_t i = first; i < last; ++i) {
    if (i != first) key.push_back(' ');
    key += fold_token(words[i].text);
  }
  return key;
}

}  // namespace

const char* code(SemType t) { return kCodes[static_cast<std::size_t>(t)].data(); }

std::optional<SemType> semtype_from_code(std::string_view c) {
  for (std::size_t i = 0; i < kCodes.size(); ++i) {
    if (kCodes[i] == c) return static_cast<SemType>(i);
  }
  return std::nullopt;
}

std::string fold_token(std::string_view w) {
  if (w.size() > 3 && w.back() == 's') {
    char prev = w[w.size() - 2];
    if (prev != 's' && prev != 'u' && prev != 'i') return std::string(w.substr(0, w.size() - 1));
  }
  return std::string(w);
}

Lexicon Lexicon::parse(std::string_view contents, Diagnostics* diag) {
  Lexicon lex;
  for_each_data_line(contents, [&](std::size_t line_no, const std::vector<std::string>& f) {
    if (f.size() != 3) {
      throw Error(ErrorCode::kMalformedLexiconLine,
                  "line " + std::to_string(line_no) + ": expected 3 tab-separated columns, got " +
                      std::to_string(f.size()));
    }
    std::string surface = collapse_whitespace(to_lower(f[0]));
    std::string preferred = collapse_whitespace(f[1]);
    if (surface.empty() || preferred.empty() || word_tokens(surface).empty()) {
      throw Error(ErrorCode::kMalformedLexiconLine, "line " + std::to_string(line_no) + ": empty term");
    }
    auto type = semtype_from_code(std::string(trim(f[2])));
    if (!type) {
      ++lex.rejected_;
      if (diag) diag->warn("lexicon line " + std::to_string(line_no) + ": semantic type '" + f[2] + "' not retained");
      return;
    }
    lex.add({std::move(surface), std::move(preferred), *type});
  });
  return lex;
}

Lexicon Lexicon::load(const std::filesystem::path& path, Diagnostics* diag) { return parse(read_file(path), diag); }

bool Lexicon::add(LexiconEntry entry) {
  auto words = word_tokens(entry.surface);
  std::string key = folded_key(words, 0, words.size());
  if (by_key_.contains(key)) return false;
  by_key_.emplace(std::move(key), entries_.size());
  max_words_ = std::max(max_words_, words.size());
  entries_.push_back(std::move(entry));
  return true;
}

const LexiconEntry* Lexicon::find(const std::vector<WordToken>& words, std::size_t first, std::size_t last) const {
  auto it = by_key_.find(folded_key(words, first, last));
  return it == by_key_.end() ? nullptr : &entries_[it->second];
}

std::vector<TaggedEntity> tag(std::string_view text, const Lexicon& lexicon) {
  std::vector<TaggedEntity> out;
  auto words = word_tokens(text);
  std::size_t i = 0;
  while (i < words.size()) {
    std::size_t longest = std::min(lexicon.max_words(), words.size() - i);
    const LexiconEntry* hit = nullptr;
    std::size_t len = longest;
    for (; len > 0; --len) {
      if ((hit = lexicon.find(words, i, i + len))) break;
    }
    if (!hit) {
      ++i;
      continue;
    }
    Span span{words[i].span.begin, words[i + len - 1].span.end};
    out.push_back({std::string(text.substr(span.begin, span.size())), hit->preferred, hit->semtype, span,
                   Polarity::kAffirmed});
    i += len;
  }
  return out;
}

}  // namespace trialmatch
