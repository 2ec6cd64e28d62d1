#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace trialmatch {

// Half-open character range [begin, end) into some source string.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool overlaps(const Span& other) const { return begin < other.end && other.begin < end; }
  friend bool operator==(const Span&, const Span&) = default;
};

// A lowercase word with its location in the original text.
struct WordToken {
  std::string text;
  Span span;
};

std::string to_lower(std::string_view s);
std::string_view trim(std::string_view s);
std::string collapse_whitespace(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);
std::vector<std::string_view> split_lines(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Bytes >= 0x80 count as word characters so UTF-8 words are not torn apart.
inline bool is_word_char(char c) {
  auto u = static_cast<unsigned char>(c);
  return (u >= '0' && u <= '9') || (u >= 'a' && u <= 'z') || (u >= 'A' && u <= 'Z') || u >= 0x80;
}

// Splits on every non-word character. Used by the concept tagger, the
// negation detector and the metadata extractors so that spans agree.
std::vector<WordToken> word_tokens(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

// Calls fn(line_number, fields) for every non-blank, non-'#' line of a TSV
// data file. Trailing '\r' is stripped.
void for_each_data_line(std::string_view contents,
                        const std::function<void(std::size_t, const std::vector<std::string>&)>& fn);

}  // namespace trialmatch
