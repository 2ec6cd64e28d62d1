#pragma once

// Brute-force reference implementations and random generators shared by the
// unit and acceptance tests. Nothing here calls into the scoring code it is
// used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "trialmatch/concept_tagger.hpp"
#include "trialmatch/retrieval.hpp"
#include "trialmatch/text_util.hpp"

#ifndef TRIALMATCH_FIXTURE_DIR
#define TRIALMATCH_FIXTURE_DIR "tests/fixtures"
#endif

namespace oracle {

inline std::string fixture(const std::string& name) { return std::string(TRIALMATCH_FIXTURE_DIR) + "/" + name; }

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<std::string> vocabulary(int n) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back("w" + std::to_string(i));
  return v;
}

// Skewed word choice so that df varies and ties happen.
inline std::string random_text(Gen& g, const std::vector<std::string>& vocab, int max_words) {
  std::string text;
  int n = g.uniform(0, max_words);
  for (int i = 0; i < n; ++i) {
    int limit = g.coin(0.6) ? std::min<int>(5, static_cast<int>(vocab.size())) : static_cast<int>(vocab.size());
    if (!text.empty()) text += ' ';
    text += vocab[static_cast<std::size_t>(g.uniform(0, limit - 1))];
  }
  return text;
}

inline std::vector<trialmatch::IndexedDocument> random_corpus(Gen& g, int max_docs, int vocab_size, int max_words) {
  auto vocab = vocabulary(vocab_size);
  int n = g.uniform(1, max_docs);
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("D" + std::to_string(1000 + i));
  std::shuffle(ids.begin(), ids.end(), g.engine());
  std::vector<trialmatch::IndexedDocument> docs;
  for (int i = 0; i < n; ++i) docs.push_back({ids[static_cast<std::size_t>(i)], random_text(g, vocab, max_words)});
  return docs;
}

inline std::vector<std::string> random_query(Gen& g, int vocab_size, int max_terms) {
  auto vocab = vocabulary(vocab_size + 3);  // a few terms no document uses
  std::vector<std::string> q;
  int n = g.uniform(1, max_terms);
  for (int i = 0; i < n; ++i) q.push_back(g.pick(vocab));
  return q;
}

struct Scored {
  std::string doc_id;
  double score;
};

// Full scan over raw token lists: recounts tf, df, lengths and avgdl from
// scratch, scores every document and sorts with the documented tie rule.
inline std::vector<Scored> brute_force_search(const std::vector<std::vector<std::string>>& doc_terms,
                                              const std::vector<std::string>& doc_ids,
                                              const std::vector<std::string>& query, double k1, double b,
                                              std::size_t k) {
  const double n = static_cast<double>(doc_terms.size());
  double total = 0;
  for (const auto& d : doc_terms) total += static_cast<double>(d.size());
  const double avgdl = doc_terms.empty() ? 0 : total / n;

  std::set<std::string> qset(query.begin(), query.end());
  std::vector<Scored> all;
  for (std::size_t i = 0; i < doc_terms.size(); ++i) {
    double score = 0;
    for (const auto& t : qset) {  // std::set iterates in sorted order
      double tf = static_cast<double>(std::count(doc_terms[i].begin(), doc_terms[i].end(), t));
      if (tf == 0) continue;
      double df = 0;
      for (const auto& d : doc_terms) df += std::find(d.begin(), d.end(), t) != d.end() ? 1 : 0;
      double idf = std::log(1.0 + (n - df + 0.5) / (df + 0.5));
      double norm = avgdl > 0 ? static_cast<double>(doc_terms[i].size()) / avgdl : 1.0;
      score += idf * (tf * (k1 + 1.0)) / (tf + k1 * (1.0 - b + b * norm));
    }
    if (score > 0) all.push_back({doc_ids[i], score});
  }
  std::sort(all.begin(), all.end(), [](const Scored& a, const Scored& x) {
    return a.score != x.score ? a.score > x.score : a.doc_id < x.doc_id;
  });
  if (all.size() > k) all.resize(k);
  return all;
}

// S_incl - S_excl by definition: keep S_incl order, drop any doc in S_excl.
inline std::vector<Scored> set_difference(const std::vector<Scored>& incl, const std::vector<Scored>& excl) {
  std::set<std::string> banned;
  for (const auto& e : excl) banned.insert(e.doc_id);
  std::vector<Scored> out;
  for (const auto& e : incl) {
    if (!banned.contains(e.doc_id)) out.push_back(e);
  }
  return out;
}

inline bool same_ranking(const trialmatch::RankedList& got, const std::vector<Scored>& want) {
  if (got.entries.size() != want.size()) return false;
  for (std::size_t i = 0; i < want.size(); ++i) {
    const auto& e = got.entries[i];
    if (e.doc_id != want[i].doc_id || e.score != want[i].score || e.rank != i + 1) return false;
  }
  return true;
}

inline trialmatch::TaggedEntity entity(std::string text, trialmatch::Polarity p, std::size_t begin = 0) {
  trialmatch::TaggedEntity e;
  e.text = text;
  e.preferred = text;
  e.span = {begin, begin + text.size()};
  e.polarity = p;
  return e;
}

inline std::vector<trialmatch::TaggedEntity> random_entities(Gen& g, int max_len) {
  static const std::vector<std::string> words = {"smokes", "chest pain", "aortic stenosis", "fever",
                                                 "heart failure", "asthma", "type 2 diabetes"};
  std::vector<trialmatch::TaggedEntity> out;
  std::size_t pos = 0;
  int n = g.uniform(0, max_len);
  for (int i = 0; i < n; ++i) {
    auto e = entity(g.pick(words), g.coin() ? trialmatch::Polarity::kNegated : trialmatch::Polarity::kAffirmed, pos);
    pos = e.span.end + 1;
    out.push_back(std::move(e));
  }
  return out;
}

// One line of the curated negation set.
struct NegationCase {
  std::string sentence;
  struct Label {
    std::string entity;
    bool negated;
    std::string cue;
  };
  std::vector<Label> labels;
};

inline std::vector<NegationCase> load_negation_cases(const std::string& path) {
  std::vector<NegationCase> cases;
  trialmatch::for_each_data_line(trialmatch::read_file(path), [&](std::size_t, const std::vector<std::string>& f) {
    NegationCase c;
    c.sentence = f.at(0);
    for (auto part : trialmatch::split(f.at(1), '|')) {
      std::string item(trialmatch::trim(part));
      auto eq = item.rfind('=');
      NegationCase::Label label{item.substr(0, eq), false, ""};
      std::string value = item.substr(eq + 1);
      if (value.starts_with("neg@")) {
        label.negated = true;
        label.cue = value.substr(4);
      }
      c.labels.push_back(label);
    }
    cases.push_back(std::move(c));
  });
  return cases;
}

// Entities for a curated case, located at the first exact occurrence.
inline std::vector<trialmatch::TaggedEntity> case_entities(const NegationCase& c) {
  std::vector<trialmatch::TaggedEntity> out;
  for (const auto& l : c.labels) {
    auto at = c.sentence.find(l.entity);
    out.push_back(entity(l.entity, trialmatch::Polarity::kAffirmed, at == std::string::npos ? c.sentence.size() : at));
  }
  return out;
}

}  // namespace oracle
