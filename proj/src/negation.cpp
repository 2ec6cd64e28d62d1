#include "trialmatch/negation.hpp"

#include <algorithm>

#include "trialmatch/error.hpp"

namespace trialmatch {

namespace {

std::string phrase_key(const std::vector<WordToken>& words, std::size_t first, std::size_t last) {
  std::string key;
  for (std::size_t i = first; i < last; ++i) {
    if (i != first) key.push_back(' ');
    key += words[i].text;
  }
  return key;
}

struct TriggerHit {
  std::size_t first;  // word indices [first, last)
  std::size_t last;
  TriggerKind kind;
};

std::vector<TriggerHit> find_triggers(const std::vector<WordToken>& words, const TriggerSet& triggers) {
  std::vector<TriggerHit> all;
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::size_t longest = std::min(triggers.max_words(), words.size() - i);
    for (std::size_t len = 1; len <= longest; ++len) {
      if (const auto* t = triggers.find(words, i, i + len)) all.push_back({i, i + len, t->kind});
    }
  }

  // Pseudo-triggers only veto overlapping triggers; they never act themselves.
  std::vector<TriggerHit> pseudo;
  std::vector<TriggerHit> live;
  for (const auto& h : all) (h.kind == TriggerKind::kPseudoNegation ? pseudo : live).push_back(h);
  std::erase_if(live, [&](const TriggerHit& h) {
    return std::any_of(pseudo.begin(), pseudo.end(),
                       [&](const TriggerHit& p) { return h.first < p.last && p.first < h.last; });
  });

  std::sort(live.begin(), live.end(), [](const TriggerHit& a, const TriggerHit& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.last > b.last;
  });
  std::vector<TriggerHit> chosen;
  std::size_t covered = 0;
  for (const auto& h : live) {
    if (h.first < covered) continue;
    chosen.push_back(h);
    covered = h.last;
  }
  return chosen;
}

bool terminated_between(const std::vector<TriggerHit>& hits, std::size_t from, std::size_t to) {
  return std::any_of(hits.begin(), hits.end(), [&](const TriggerHit& h) {
    return h.kind == TriggerKind::kTermination && h.first >= from && h.last <= to;
  });
}

bool is_bullet_start(std::string_view line) {
  line = trim(line);
  if (line.empty()) return false;
  if (line.starts_with("- ") || line.starts_with("* ") || line.starts_with("\xE2\x80\xA2")) return true;
  std::size_t i = 0;
  while (i < line.size() && i < 2 && line[i] >= '0' && line[i] <= '9') ++i;
  return i > 0 && i + 1 < line.size() && (line[i] == '.' || line[i] == ')') && line[i + 1] == ' ';
}

}  // namespace

const char* to_string(TriggerKind kind) {
  switch (kind) {
    case TriggerKind::kPreNegation: return "pre_negation";
    case TriggerKind::kPostNegation: return "post_negation";
    case TriggerKind::kPseudoNegation: return "pseudo_negation";
    case TriggerKind::kTermination: return "termination";
  }
  return "termination";
}

TriggerSet TriggerSet::parse(std::string_view contents) {
  TriggerSet set;
  for_each_data_line(contents, [&](std::size_t line_no, const std::vector<std::string>& f) {
    auto bad = [&](const std::string& why) {
      throw Error(ErrorCode::kMalformedDataLine, "trigger line " + std::to_string(line_no) + ": " + why);
    };
    if (f.size() != 2) bad("expected phrase <TAB> kind");
    std::string kind = std::string(trim(f[1]));
    TriggerKind k;
    if (kind == "pre_negation") k = TriggerKind::kPreNegation;
    else if (kind == "post_negation") k = TriggerKind::kPostNegation;
    else if (kind == "pseudo_negation") k = TriggerKind::kPseudoNegation;
    else if (kind == "termination") k = TriggerKind::kTermination;
    else bad("unknown kind '" + kind + "'");
    auto words = word_tokens(f[0]);
    if (words.empty()) bad("empty phrase");
    if (words.size() > kMaxTriggerWords) bad("phrase longer than 5 words");
    set.add({phrase_key(words, 0, words.size()), k});
  });
  return set;
}

TriggerSet TriggerSet::load(const std::filesystem::path& path) { return parse(read_file(path)); }

bool TriggerSet::add(NegationTrigger trigger) {
  auto words = word_tokens(trigger.phrase);
  if (words.empty() || words.size() > kMaxTriggerWords) {
    throw Error(ErrorCode::kMalformedDataLine, "trigger phrase must have 1-5 words: '" + trigger.phrase + "'");
  }
  trigger.phrase = phrase_key(words, 0, words.size());
  if (by_phrase_.contains(trigger.phrase)) return false;
  by_phrase_.emplace(trigger.phrase, triggers_.size());
  max_words_ = std::max(max_words_, words.size());
  triggers_.push_back(std::move(trigger));
  return true;
}

const NegationTrigger* TriggerSet::find(const std::vector<WordToken>& words, std::size_t first,
                                        std::size_t last) const {
  auto it = by_phrase_.find(phrase_key(words, first, last));
  return it == by_phrase_.end() ? nullptr : &triggers_[it->second];
}

std::vector<PolarityAnnotation> detect(std::string_view sentence, const std::vector<TaggedEntity>& entities,
                                       const TriggerSet& triggers, const NegationParams& params) {
  auto words = word_tokens(sentence);
  auto hits = find_triggers(words, triggers);

  auto hit_span = [&](const TriggerHit& h) { return Span{words[h.first].span.begin, words[h.last - 1].span.end}; };

  std::vector<PolarityAnnotation> out;
  out.reserve(entities.size());
  for (const auto& e : entities) {
    if (e.span.end > sentence.size() || e.span.begin >= e.span.end) {
      throw Error(ErrorCode::kSpanOutOfRange, "entity '" + e.text + "' [" + std::to_string(e.span.begin) + ", " +
                                                  std::to_string(e.span.end) + ") outside sentence of length " +
                                                  std::to_string(sentence.size()));
    }
    PolarityAnnotation ann{e.span, Polarity::kAffirmed, std::nullopt};

    // Word range [first, last) covered by the entity.
    std::size_t first = 0;
    while (first < words.size() && words[first].span.end <= e.span.begin) ++first;
    std::size_t last = first;
    while (last < words.size() && words[last].span.begin < e.span.end) ++last;
    if (first == last) {
      out.push_back(ann);
      continue;
    }

    const TriggerHit* best = nullptr;
    for (const auto& h : hits) {
      if (h.kind != TriggerKind::kPreNegation || h.last > first) continue;
      if (first - h.last >= params.window || terminated_between(hits, h.last, first)) continue;
      if (!best || h.last > best->last) best = &h;
    }
    if (!best) {
      for (const auto& h : hits) {
        if (h.kind != TriggerKind::kPostNegation || h.first < last) continue;
        if (h.first - last >= params.window || terminated_between(hits, last, h.first)) continue;
        if (!best || h.first < best->first) best = &h;
      }
    }
    if (best) {
      ann.polarity = Polarity::kNegated;
      ann.trigger_span = hit_span(*best);
    }
    out.push_back(ann);
  }
  return out;
}

std::vector<Span> segment_sentences(std::string_view text) {
  std::vector<Span> out;
  auto push = [&](std::size_t b, std::size_t e) {
    while (b < e && std::string_view(" \t\r\n").find(text[b]) != std::string_view::npos) ++b;
    while (e > b && std::string_view(" \t\r\n").find(text[e - 1]) != std::string_view::npos) --e;
    if (b < e) out.push_back({b, e});
  };

  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '\n') {
      std::size_t line_end = text.find('\n', i + 1);
      std::string_view next = text.substr(i + 1, line_end == std::string_view::npos ? std::string_view::npos
                                                                                     : line_end - i - 1);
      if (trim(next).empty() || is_bullet_start(next)) {
        push(start, i);
        start = i + 1;
      }
      continue;
    }
    if (c != '.' && c != '!' && c != '?') continue;
    std::size_t j = i + 1;
    while (j < text.size() && (text[j] == ' ' || text[j] == '\t' || text[j] == '\r' || text[j] == '\n')) ++j;
    if (j == i + 1 && j < text.size()) continue;
    if (j < text.size() && !(text[j] >= 'A' && text[j] <= 'Z')) continue;
    push(start, i + 1);
    start = i + 1;
  }
  push(start, text.size());
  return out;
}

}  // namespace trialmatch
