#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "trialmatch/error.hpp"

namespace trialmatch {

// ---------------------------------------------------------------------------
// Tokenization

// Lowercases and splits on whitespace and punctuation. ':' and a single '_'
// stay inside terms (neg:, age:, family:, multiword phrases); runs of two or
// more underscores are the entity separator and split. Stopwords and terms
// with no alphanumeric character are dropped.
class Tokenizer {
 public:
  Tokenizer() = default;
  explicit Tokenizer(std::unordered_set<std::string> stopwords) : stopwords_(std::move(stopwords)) {}

  // One stopword per line, '#' comments.
  static Tokenizer parse(std::string_view contents);
  static Tokenizer load(const std::filesystem::path& path);

  std::vector<std::string> tokenize(std::string_view text) const;
  bool is_stopword(std::string_view term) const { return stopwords_.contains(std::string(term)); }
  std::size_t stopword_count() const { return stopwords_.size(); }

 private:
  std::unordered_set<std::string> stopwords_;
};

// Rewrites each "neg:<entity>" (running to the next "__" or newline) into
// one fused term "neg:w1_w2_..." followed by per-word shadows "neg:w1 neg:w2"
// so the prefix survives tokenization and partial overlap still scores.
std::string expand_entity_markup(std::string_view text, const Tokenizer& tokenizer);

// What both documents and queries go through before indexing or scoring.
class Analyzer {
 public:
  explicit Analyzer(Tokenizer tokenizer) : tokenizer_(std::move(tokenizer)) {}

  std::vector<std::string> analyze(std::string_view text) const {
    return tokenizer_.tokenize(expand_entity_markup(text, tokenizer_));
  }
  const Tokenizer& tokenizer() const { return tokenizer_; }

 private:
  Tokenizer tokenizer_;
};

// ---------------------------------------------------------------------------
// Index

struct Posting {
  std::uint32_t doc;  // ordinal
  std::uint32_t tf;

  friend bool operator==(const Posting&, const Posting&) = default;
};

struct IndexedDocument {
  std::string doc_id;
  std::string text;
};

class InvertedIndex {
 public:
  std::size_t num_docs() const { return doc_ids_.size(); }
  double avgdl() const { return avgdl_; }
  const std::vector<std::string>& doc_ids() const { return doc_ids_; }
  const std::vector<std::uint32_t>& doc_lengths() const { return doc_lengths_; }
  std::size_t num_terms() const { return postings_.size(); }

  // Postings sorted by ordinal, or nullptr for an unknown term.
  const std::vector<Posting>* postings(std::string_view term) const;
  std::size_t df(std::string_view term) const;
  std::vector<std::string> sorted_terms() const;

  friend bool operator==(const InvertedIndex&, const InvertedIndex&) = default;

 private:
  friend class IndexBuilder;
  friend InvertedIndex load_index(const std::filesystem::path& path);

  std::unordered_map<std::string, std::vector<Posting>> postings_;
  std::vector<std::string> doc_ids_;
  std::vector<std::uint32_t> doc_lengths_;
  double avgdl_ = 0;
};

// Appends analyzed documents in ordinal order. Throws kDuplicateDocId.
class IndexBuilder {
 public:
  void add(std::string doc_id, const std::vector<std::string>& terms);
  InvertedIndex finish() &&;

 private:
  InvertedIndex index_;
  std::unordered_set<std::string> seen_;
};

// Reference implementation: analyze and append one document at a time.
InvertedIndex build_index_serial(const std::vector<IndexedDocument>& docs, const Analyzer& analyzer);
// Analyzes documents in parallel (OpenMP) and merges in ordinal order; the
// result is identical to build_index_serial.
InvertedIndex build_index(const std::vector<IndexedDocument>& docs, const Analyzer& analyzer);

// Versioned little-endian binary layout, see docs/FORMATS.md.
void save_index(const InvertedIndex& index, const std::filesystem::path& path);
InvertedIndex load_index(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Scoring and search

struct Bm25Params {
  double k1 = 0.75;
  double b = 0.75;
};

double bm25_idf(std::size_t num_docs, std::size_t df);
double bm25_term_weight(double idf, std::uint32_t tf, std::uint32_t doc_length, double avgdl,
                        const Bm25Params& params);

// Sorted unique terms; scoring always sums in this order.
std::vector<std::string> unique_terms(std::vector<std::string> terms);

// Score of one document. Throws kUnknownOrdinal.
double bm25_score(const InvertedIndex& index, const Bm25Params& params, const std::vector<std::string>& query_terms,
                  std::uint32_t ordinal);

struct RankedEntry {
  std::string doc_id;
  double score = 0;
  std::size_t rank = 0;  // from 1

  friend bool operator==(const RankedEntry&, const RankedEntry&) = default;
};

struct RankedList {
  int topic_id = 0;
  std::vector<RankedEntry> entries;

  friend bool operator==(const RankedList&, const RankedList&) = default;
};

// Ordering used for every ranking: score descending, then doc_id ascending.
inline bool ranks_before(double score_a, const std::string& id_a, double score_b, const std::string& id_b) {
  if (score_a != score_b) return score_a > score_b;
  return id_a < id_b;
}

// Top-k documents with positive score. search_terms_serial is the reference
// kernel; search_terms partitions the document range across OpenMP threads
// and returns bit-identical results.
RankedList search_terms_serial(const InvertedIndex& index, const Bm25Params& params,
                               const std::vector<std::string>& query_terms, std::size_t k);
RankedList search_terms(const InvertedIndex& index, const Bm25Params& params,
                        const std::vector<std::string>& query_terms, std::size_t k);

// Analyzes the query first. A query with no terms yields an empty list and a
// warning.
RankedList search(const InvertedIndex& index, const Analyzer& analyzer, const Bm25Params& params,
                  std::string_view query, std::size_t k, Diagnostics* diag = nullptr);

// Throws kCorpusMismatch unless both indices cover the same doc_id set.
void check_same_universe(const InvertedIndex& a, const InvertedIndex& b);

// S_incl minus S_excl, keeping S_incl order and scores and renumbering ranks.
RankedList subtract_ranked(const RankedList& included, const RankedList& excluded);

RankedList set_difference_retrieve(const InvertedIndex& incl, const InvertedIndex& excl, const Analyzer& analyzer,
                                   const Bm25Params& params, std::string_view query, std::size_t k,
                                   Diagnostics* diag = nullptr);

struct Query {
  int topic_id = 0;
  std::string text;
};

// Per-topic retrieval in parallel over topics. Output order follows input.
std::vector<RankedList> batch_search(const InvertedIndex& index, const Analyzer& analyzer, const Bm25Params& params,
                                     const std::vector<Query>& queries, std::size_t k, Diagnostics* diag = nullptr);
std::vector<RankedList> batch_set_difference(const InvertedIndex& incl, const InvertedIndex& excl,
                                             const Analyzer& analyzer, const Bm25Params& params,
                                             const std::vector<Query>& queries, std::size_t k,
                                             Diagnostics* diag = nullptr);

// TREC run lines "topic Q0 doc_id rank score tag", score with 6 decimals.
std::string format_run(const std::vector<RankedList>& lists, std::string_view run_tag);

}  // namespace trialmatch
