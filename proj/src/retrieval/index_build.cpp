#include <algorithm>
#include <numeric>

#include "trialmatch/retrieval.hpp"

namespace trialmatch {

const std::vector<Posting>* InvertedIndex::postings(std::string_view term) const {
  auto it = postings_.find(std::string(term));
  return it == postings_.end() ? nullptr : &it->second;
}

std::size_t InvertedIndex::df(std::string_view term) const {
  const auto* p = postings(term);
  return p ? p->size() : 0;
}

std::vector<std::string> InvertedIndex::sorted_terms() const {
  std::vector<std::string> terms;
  terms.reserve(postings_.size());
  for (const auto& [term, list] : postings_) terms.push_back(term);
  std::sort(terms.begin(), terms.end());
  return terms;
}

void IndexBuilder::add(std::string doc_id, const std::vector<std::string>& terms) {
  if (!seen_.insert(doc_id).second) throw Error(ErrorCode::kDuplicateDocId, doc_id);
  auto ordinal = static_cast<std::uint32_t>(index_.doc_ids_.size());

  std::vector<std::string> sorted = terms;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    index_.postings_[sorted[i]].push_back({ordinal, static_cast<std::uint32_t>(j - i)});
    i = j;
  }
  index_.doc_ids_.push_back(std::move(doc_id));
  index_.doc_lengths_.push_back(static_cast<std::uint32_t>(terms.size()));
}

InvertedIndex IndexBuilder::finish() && {
  const auto& lengths = index_.doc_lengths_;
  double total = std::accumulate(lengths.begin(), lengths.end(), 0.0);
  index_.avgdl_ = lengths.empty() ? 0.0 : total / static_cast<double>(lengths.size());
  return std::move(index_);
}

InvertedIndex build_index_serial(const std::vector<IndexedDocument>& docs, const Analyzer& analyzer) {
  IndexBuilder builder;
  for (const auto& d : docs) builder.add(d.doc_id, analyzer.analyze(d.text));
  return std::move(builder).finish();
}

InvertedIndex build_index(const std::vector<IndexedDocument>& docs, const Analyzer& analyzer) {
  std::vector<std::vector<std::string>> analyzed(docs.size());
  const auto n = static_cast<std::ptrdiff_t>(docs.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    analyzed[static_cast<std::size_t>(i)] = analyzer.analyze(docs[static_cast<std::size_t>(i)].text);
  }
  IndexBuilder builder;
  for (std::size_t i = 0; i < docs.size(); ++i) builder.add(docs[i].doc_id, analyzed[i]);
  return std::move(builder).finish();
}

}  // namespace trialmatch
