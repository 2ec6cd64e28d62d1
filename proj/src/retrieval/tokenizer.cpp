#include "trialmatch/retrieval.hpp"
#include "trialmatch/text_util.hpp"

namespace trialmatch {

namespace {

bool is_term_char(char c) { return is_word_char(c) || c == ':' || c == '_'; }

bool has_alnum(std::string_view s) {
  for (char c : s) {
    if (is_word_char(c)) return true;
  }
  return false;
}

}  // namespace

Tokenizer Tokenizer::parse(std::string_view contents) {
  std::unordered_set<std::string> words;
  for_each_data_line(contents, [&](std::size_t, const std::vector<std::string>& f) {
    words.insert(to_lower(trim(f[0])));
  });
  return Tokenizer(std::move(words));
}

Tokenizer Tokenizer::load(const std::filesystem::path& path) { return parse(read_file(path)); }

std::vector<std::string> Tokenizer::tokenize(std::string_view text) const {
  std::vector<std::string> out;
  auto emit = [&](std::string_view raw) {
    std::size_t b = 0;
    std::size_t e = raw.size();
    while (b < e && (raw[b] == ':' || raw[b] == '_')) ++b;
    while (e > b && (raw[e - 1] == ':' || raw[e - 1] == '_')) --e;
    raw = raw.substr(b, e - b);
    if (raw.empty() || !has_alnum(raw)) return;
    std::string term = to_lower(raw);
    if (stopwords_.contains(term)) return;
    out.push_back(std::move(term));
  };

  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_term_char(text[i])) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && is_term_char(text[i])) {
      if (text[i] == '_' && i + 1 < text.size() && text[i + 1] == '_') break;
      ++i;
    }
    emit(text.substr(start, i - start));
    while (i < text.size() && text[i] == '_') ++i;
  }
  return out;
}

std::string expand_entity_markup(std::string_view text, const Tokenizer& tokenizer) {
  constexpr std::string_view kPrefix = "neg:";
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t pos = text.find(kPrefix, i);
    // Only a prefix at the start of a term (or right after "__") counts.
    auto at_term_start = [&](std::size_t p) {
      return p == 0 || !is_term_char(text[p - 1]) || (p >= 2 && text.substr(p - 2, 2) == "__");
    };
    while (pos != std::string_view::npos && !at_term_start(pos)) {
      pos = text.find(kPrefix, pos + 1);
    }
    if (pos == std::string_view::npos) {
      out.append(text.substr(i));
      break;
    }
    out.append(text.substr(i, pos - i));
    std::size_t body_start = pos + kPrefix.size();
    std::size_t body_end = std::min(text.find("__", body_start), text.find('\n', body_start));
    if (body_end == std::string_view::npos) body_end = text.size();

    auto words = word_tokens(text.substr(body_start, body_end - body_start));
    if (words.empty()) {
      out.append(text.substr(pos, body_end - pos));
    } else {
      out.append(kPrefix);
      for (std::size_t w = 0; w < words.size(); ++w) {
        if (w) out.push_back('_');
        out.append(words[w].text);
      }
      if (words.size() > 1) {
        for (const auto& w : words) {
          if (w.text.size() < 2 || tokenizer.is_stopword(w.text)) continue;
          out.push_back(' ');
          out.append(kPrefix);
          out.append(w.text);
        }
      }
    }
    i = body_end;
  }
  return out;
}

}  // namespace trialmatch
