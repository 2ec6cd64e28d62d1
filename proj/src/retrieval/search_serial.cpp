#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "top_k.hpp"

namespace trialmatch {

double bm25_idf(std::size_t num_docs, std::size_t df) {
  double n = static_cast<double>(num_docs);
  double d = static_cast<double>(df);
  return std::log(1.0 + (n - d + 0.5) / (d + 0.5));
}

double bm25_term_weight(double idf, std::uint32_t tf, std::uint32_t doc_length, double avgdl,
                        const Bm25Params& params) {
  double f = static_cast<double>(tf);
  double norm = avgdl > 0 ? static_cast<double>(doc_length) / avgdl : 1.0;
  return idf * (f * (params.k1 + 1.0)) / (f + params.k1 * (1.0 - params.b + params.b * norm));
}

std::vector<std::string> unique_terms(std::vector<std::string> terms) {
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  return terms;
}

double bm25_score(const InvertedIndex& index, const Bm25Params& params, const std::vector<std::string>& query_terms,
                  std::uint32_t ordinal) {
  if (ordinal >= index.num_docs()) throw Error(ErrorCode::kUnknownOrdinal, std::to_string(ordinal));
  double score = 0.0;
  for (const auto& term : unique_terms(query_terms)) {
    const auto* list = index.postings(term);
    if (!list) continue;
    auto it = std::lower_bound(list->begin(), list->end(), ordinal,
                               [](const Posting& p, std::uint32_t d) { return p.doc < d; });
    if (it == list->end() || it->doc != ordinal) continue;
    score += bm25_term_weight(bm25_idf(index.num_docs(), list->size()), it->tf, index.doc_lengths()[ordinal],
                              index.avgdl(), params);
  }
  return score;
}

namespace detail {

void select_top_k(std::vector<Candidate>& candidates, const InvertedIndex& index, std::size_t k) {
  const auto& ids = index.doc_ids();
  auto before = [&](const Candidate& a, const Candidate& b) { return ranks_before(a.score, ids[a.doc], b.score, ids[b.doc]); };
  if (candidates.size() > k) {
    std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(k), candidates.end(), before);
    candidates.resize(k);
  } else {
    std::sort(candidates.begin(), candidates.end(), before);
  }
}

RankedList to_ranked(const std::vector<Candidate>& top, const InvertedIndex& index) {
  RankedList out;
  out.entries.reserve(top.size());
  for (std::size_t i = 0; i < top.size(); ++i) out.entries.push_back({index.doc_ids()[top[i].doc], top[i].score, i + 1});
  return out;
}

}  // namespace detail

RankedList search_terms_serial(const InvertedIndex& index, const Bm25Params& params,
                               const std::vector<std::string>& query_terms, std::size_t k) {
  std::vector<double> acc(index.num_docs(), 0.0);
  for (const auto& term : unique_terms(query_terms)) {
    const auto* list = index.postings(term);
    if (!list) continue;
    double idf = bm25_idf(index.num_docs(), list->size());
    for (const auto& p : *list) {
      acc[p.doc] += bm25_term_weight(idf, p.tf, index.doc_lengths()[p.doc], index.avgdl(), params);
    }
  }
  std::vector<detail::Candidate> candidates;
  for (std::uint32_t d = 0; d < acc.size(); ++d) {
    if (acc[d] > 0) candidates.push_back({acc[d], d});
  }
  detail::select_top_k(candidates, index, k);
  return detail::to_ranked(candidates, index);
}

RankedList search(const InvertedIndex& index, const Analyzer& analyzer, const Bm25Params& params,
                  std::string_view query, std::size_t k, Diagnostics* diag) {
  auto terms = analyzer.analyze(query);
  if (terms.empty()) {
    if (diag) diag->warn("EmptyQuery: query has no indexable terms");
    return {};
  }
  return search_terms(index, params, terms, k);
}

void check_same_universe(const InvertedIndex& a, const InvertedIndex& b) {
  if (a.doc_ids() == b.doc_ids()) return;
  auto x = a.doc_ids();
  auto y = b.doc_ids();
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  if (x != y) {
    throw Error(ErrorCode::kCorpusMismatch, "indices cover different documents (" + std::to_string(x.size()) +
                                                " vs " + std::to_string(y.size()) + ")");
  }
}

RankedList subtract_ranked(const RankedList& included, const RankedList& excluded) {
  std::vector<std::string> banned;
  banned.reserve(excluded.entries.size());
  for (const auto& e : excluded.entries) banned.push_back(e.doc_id);
  std::sort(banned.begin(), banned.end());

  RankedList out;
  out.topic_id = included.topic_id;
  for (const auto& e : included.entries) {
    if (std::binary_search(banned.begin(), banned.end(), e.doc_id)) continue;
    out.entries.push_back({e.doc_id, e.score, out.entries.size() + 1});
  }
  return out;
}

RankedList set_difference_retrieve(const InvertedIndex& incl, const InvertedIndex& excl, const Analyzer& analyzer,
                                   const Bm25Params& params, std::string_view query, std::size_t k,
                                   Diagnostics* diag) {
  check_same_universe(incl, excl);
  auto terms = analyzer.analyze(query);
  if (terms.empty()) {
    if (diag) diag->warn("EmptyQuery: query has no indexable terms");
    return {};
  }
  return subtract_ranked(search_terms(incl, params, terms, k), search_terms(excl, params, terms, k));
}

std::string format_run(const std::vector<RankedList>& lists, std::string_view run_tag) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6);
  for (const auto& list : lists) {
    for (const auto& e : list.entries) {
      out << list.topic_id << " Q0 " << e.doc_id << ' ' << e.rank << ' ' << e.score << ' ' << run_tag << '\n';
    }
  }
  return out.str();
}

}  // namespace trialmatch
