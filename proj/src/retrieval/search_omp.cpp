#include <omp.h>

#include <algorithm>

#include "top_k.hpp"

namespace trialmatch {


// Each thread owns a contiguous ordinal block and walks only its slice of
// every posting list, so per-document sums are accumulated in the same term
// order as the serial kernel.
RankedList search_terms(const InvertedIndex& index, const Bm25Params& params,
                        const std::vector<std::string>& query_terms, std::size_t k) {
  struct TermList {
    const std::vector<Posting>* list;
    double idf;
  };
  std::vector<TermList> lists;
  for (const auto& term : unique_terms(query_terms)) {
    if (const auto* list = index.postings(term)) lists.push_back({list, bm25_idf(index.num_docs(), list->size())});
  }

  const std::size_t n = index.num_docs();
  std::vector<double> acc(n, 0.0);
  std::vector<std::vector<detail::Candidate>> local(static_cast<std::size_t>(omp_get_max_threads()));

#pragma omp parallel
  {
    const auto threads = static_cast<std::size_t>(omp_get_num_threads());
    const auto tid = static_cast<std::size_t>(omp_get_thread_num());
    const auto lo = static_cast<std::uint32_t>(n * tid / threads);
    const auto hi = static_cast<std::uint32_t>(n * (tid + 1) / threads);

    for (const auto& [list, idf] : lists) {
      auto it = std::lower_bound(list->begin(), list->end(), lo,
                                 [](const Posting& p, std::uint32_t d) { return p.doc < d; });
      for (; it != list->end() && it->doc < hi; ++it) {
        acc[it->doc] += bm25_term_weight(idf, it->tf, index.doc_lengths()[it->doc], index.avgdl(), params);
      }
    }
    auto& mine = local[tid];
    for (std::uint32_t d = lo; d < hi; ++d) {
      if (acc[d] > 0) mine.push_back({acc[d], d});
    }
    detail::select_top_k(mine, index, k);
  }

  std::vector<detail::Candidate> merged;
  for (auto& part : local) merged.insert(merged.end(), part.begin(), part.end());
  detail::select_top_k(merged, index, k);
  return detail::to_ranked(merged, index);
}

std::vector<RankedList> batch_search(const InvertedIndex& index, const Analyzer& analyzer, const Bm25Params& params,
                                     const std::vector<Query>& queries, std::size_t k, Diagnostics* diag) {
  std::vector<RankedList> out(queries.size());
  std::vector<Diagnostics> diags(queries.size());
  const auto n = static_cast<std::ptrdiff_t>(queries.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    auto q = static_cast<std::size_t>(i);
    auto terms = analyzer.analyze(queries[q].text);
    if (terms.empty()) {
      diags[q].warn("EmptyQuery: topic " + std::to_string(queries[q].topic_id) + " has no indexable terms");
    } else {
      out[q] = search_terms_serial(index, params, terms, k);
    }
    out[q].topic_id = queries[q].topic_id;
  }
  if (diag) {
    for (const auto& d : diags) diag->merge(d);
  }
  return out;
}

std::vector<RankedList> batch_set_difference(const InvertedIndex& incl, const InvertedIndex& excl,
                                             const Analyzer& analyzer, const Bm25Params& params,
                                             const std::vector<Query>& queries, std::size_t k, Diagnostics* diag) {
  check_same_universe(incl, excl);
  std::vector<RankedList> out(queries.size());
  std::vector<Diagnostics> diags(queries.size());
  const auto n = static_cast<std::ptrdiff_t>(queries.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    auto q = static_cast<std::size_t>(i);
    auto terms = analyzer.analyze(queries[q].text);
    if (terms.empty()) {
      diags[q].warn("EmptyQuery: topic " + std::to_string(queries[q].topic_id) + " has no indexable terms");
    } else {
      auto included = search_terms_serial(incl, params, terms, k);
      out[q] = subtract_ranked(included, search_terms_serial(excl, params, terms, k));
      if (!included.entries.empty() && out[q].entries.empty()) {
        diags[q].warn("topic " + std::to_string(queries[q].topic_id) + ": exclusion search removed every result");
      }
    }
    out[q].topic_id = queries[q].topic_id;
  }
  if (diag) {
    for (const auto& d : diags) diag->merge(d);
  }
  return out;
}

}  // namespace trialmatch
