#include "trialmatch/evaluation.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <set>
#include <sstream>

#include "trialmatch/text_util.hpp"

namespace trialmatch {

namespace {

std::vector<std::string_view> fields_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return !s.empty() && ec == std::errc() && p == s.data() + s.size();
}

std::string line_ctx(std::size_t n) { return "line " + std::to_string(n) + ": "; }

std::string fmt(double v, int precision = 4) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(precision) << v;
  return out.str();
}

std::string pad(std::string s, std::size_t width, bool left = false) {
  if (s.size() >= width) return s;
  std::string fill(width - s.size(), ' ');
  return left ? s + fill : fill + s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Qrels

void Qrels::add(int topic_id, const std::string& doc_id, int grade) {
  if (grade < kGradeNotRelevant || grade > kGradeEligible) {
    throw Error(ErrorCode::kMalformedQrelsLine, "grade " + std::to_string(grade) + " outside 0..2");
  }
  auto [it, inserted] = judgments_[topic_id].emplace(doc_id, grade);
  if (!inserted && it->second != grade) {
    throw Error(ErrorCode::kMalformedQrelsLine,
                "conflicting grades for topic " + std::to_string(topic_id) + " doc " + doc_id);
  }
}

Qrels Qrels::parse(std::string_view contents) {
  Qrels q;
  std::size_t n = 0;
  for (auto line : split_lines(contents)) {
    ++n;
    auto f = fields_of(line);
    if (f.empty()) continue;
    int topic = 0;
    int grade = 0;
    if (f.size() != 4 || !parse_number(f[0], topic) || !parse_number(f[3], grade)) {
      throw Error(ErrorCode::kMalformedQrelsLine, line_ctx(n) + std::string(line));
    }
    try {
      q.add(topic, std::string(f[2]), grade);
    } catch (const Error& e) {
      throw Error(ErrorCode::kMalformedQrelsLine, line_ctx(n) + std::string(line));
    }
  }
  return q;
}

Qrels Qrels::load(const std::filesystem::path& path) { return parse(read_file(path)); }

int Qrels::grade(int topic_id, const std::string& doc_id) const {
  auto t = judgments_.find(topic_id);
  if (t == judgments_.end()) return kGradeNotRelevant;
  auto d = t->second.find(doc_id);
  return d == t->second.end() ? kGradeNotRelevant : d->second;
}

std::size_t Qrels::eligible_count(int topic_id) const {
  auto t = judgments_.find(topic_id);
  if (t == judgments_.end()) return 0;
  return static_cast<std::size_t>(std::count_if(t->second.begin(), t->second.end(),
                                                [](const auto& kv) { return kv.second == kGradeEligible; }));
}

std::vector<int> Qrels::topics() const {
  std::vector<int> out;
  for (const auto& [t, _] : judgments_) out.push_back(t);
  return out;
}

// ---------------------------------------------------------------------------
// Medians

Medians parse_medians(std::string_view contents) {
  Medians out;
  std::size_t n = 0;
  for (auto line : split_lines(contents)) {
    ++n;
    auto f = fields_of(line);
    if (f.empty() || f[0].starts_with("#")) continue;
    int topic = 0;
    MedianEntry e;
    double best = 0;
    bool ok = (f.size() == 2 || f.size() == 3) && parse_number(f[0], topic) && parse_number(f[1], e.median);
    if (ok && f.size() == 3) {
      ok = parse_number(f[2], best);
      e.best = best;
    }
    ok = ok && e.median >= 0 && e.median <= 1 && (!e.best || (*e.best >= 0 && *e.best <= 1));
    if (!ok) throw Error(ErrorCode::kMalformedDataLine, "medians " + line_ctx(n) + std::string(line));
    out[topic] = e;
  }
  return out;
}

Medians load_medians(const std::filesystem::path& path) { return parse_medians(read_file(path)); }

// ---------------------------------------------------------------------------
// Run files

RunFile parse_run(std::string_view contents) {
  RunFile run;
  std::map<int, std::set<std::string>> seen;
  std::size_t n = 0;
  for (auto line : split_lines(contents)) {
    ++n;
    auto f = fields_of(line);
    if (f.empty()) continue;
    int topic = 0;
    RankedEntry e;
    if (f.size() != 6 || !parse_number(f[0], topic) || !parse_number(f[3], e.rank) || !parse_number(f[4], e.score)) {
      throw Error(ErrorCode::kMalformedRunLine, line_ctx(n) + std::string(line));
    }
    e.doc_id = std::string(f[2]);
    if (!seen[topic].insert(e.doc_id).second) {
      throw Error(ErrorCode::kMalformedRunLine, line_ctx(n) + "document " + e.doc_id + " repeated for topic " +
                                                    std::to_string(topic));
    }
    if (run.run_tag.empty()) run.run_tag = std::string(f[5]);
    auto& list = run.topics[topic];
    list.topic_id = topic;
    list.entries.push_back(std::move(e));
  }
  for (auto& [topic, list] : run.topics) {
    auto& v = list.entries;
    std::stable_sort(v.begin(), v.end(), [](const RankedEntry& a, const RankedEntry& b) { return a.rank < b.rank; });
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (v[i].rank == v[i - 1].rank || v[i].score > v[i - 1].score) {
        throw Error(ErrorCode::kNonMonotoneRanks, "topic " + std::to_string(topic) + " at rank " +
                                                      std::to_string(v[i].rank));
      }
    }
  }
  return run;
}

RunFile load_run(const std::filesystem::path& path) { return parse_run(read_file(path)); }

// ---------------------------------------------------------------------------
// Metrics

double ap_at_10(const RankedList& ranked, const Qrels& qrels, int topic_id) {
  if (!qrels.has_topic(topic_id)) throw Error(ErrorCode::kTopicNotInQrels, std::to_string(topic_id));
  std::size_t r = qrels.eligible_count(topic_id);
  if (r == 0) return 0;
  double sum = 0;
  std::size_t hits = 0;
  std::size_t depth = std::min(ranked.entries.size(), kApCutoff);
  for (std::size_t i = 0; i < depth; ++i) {
    if (qrels.grade(topic_id, ranked.entries[i].doc_id) == kGradeEligible) {
      ++hits;
      sum += static_cast<double>(hits) / static_cast<double>(i + 1);
    }
  }
  return sum / static_cast<double>(std::min(r, kApCutoff));
}

EvalReport evaluate_run(const RunFile& run, const Qrels& qrels, const Medians* medians, const EvalOptions& options,
                        Diagnostics* diag) {
  EvalReport report;
  report.run_tag = run.run_tag;
  for (const auto& [topic, _] : run.topics) {
    if (!qrels.has_topic(topic) && diag) diag->warn("topic " + std::to_string(topic) + " not in qrels, ignored");
  }

  double delta_sum = 0;
  std::size_t best = 0;
  bool have_best = false;
  for (int topic : qrels.topics()) {
    auto it = run.topics.find(topic);
    static const RankedList kEmpty;
    const RankedList& list = it == run.topics.end() ? kEmpty : it->second;
    double ap = ap_at_10(list, qrels, topic);
    report.per_topic[topic] = ap;

    std::size_t depth = options.failed == FailedMode::kTop10 ? std::min(list.entries.size(), kApCutoff)
                                                             : list.entries.size();
    bool any = false;
    for (std::size_t i = 0; i < depth && !any; ++i) {
      any = qrels.grade(topic, list.entries[i].doc_id) == kGradeEligible;
    }
    if (!any) ++report.failed;

    if (medians) {
      auto m = medians->find(topic);
      if (m == medians->end()) {
        if (diag) diag->warn("no median for topic " + std::to_string(topic));
        continue;
      }
      delta_sum += ap - m->second.median;
      if (m->second.best) {
        have_best = true;
        if (ap >= *m->second.best) ++best;
      }
    }
  }

  std::size_t n = report.per_topic.size();
  double total = 0;
  for (const auto& [_, ap] : report.per_topic) total += ap;
  report.mean_ap10 = n ? total / static_cast<double>(n) : 0;
  if (medians) {
    report.delta_median = n ? delta_sum / static_cast<double>(n) : 0;
    if (have_best) report.best = best;
  }
  return report;
}

Comparison compare_runs(const std::vector<EvalReport>& reports) {
  if (reports.empty()) throw Error(ErrorCode::kInvalidConfig, "no reports to compare");
  auto topic_set = [](const EvalReport& r) {
    std::vector<int> t;
    for (const auto& [k, _] : r.per_topic) t.push_back(k);
    return t;
  };
  auto reference = topic_set(reports.front());
  for (const auto& r : reports) {
    if (topic_set(r) != reference) {
      throw Error(ErrorCode::kTopicSetMismatch, r.run_tag + " covers different topics than " + reports.front().run_tag);
    }
  }
  Comparison c;
  c.reports = reports;
  c.wins.assign(reports.size(), std::vector<std::size_t>(reports.size(), 0));
  for (std::size_t i = 0; i < reports.size(); ++i) {
    for (std::size_t j = 0; j < reports.size(); ++j) {
      for (int t : reference) {
        if (reports[i].per_topic.at(t) > reports[j].per_topic.at(t)) ++c.wins[i][j];
      }
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Output

OutputFormat output_format_from_string(std::string_view s) {
  if (s == "text") return OutputFormat::kText;
  if (s == "tsv") return OutputFormat::kTsv;
  throw Error(ErrorCode::kInvalidConfig, "unknown format '" + std::string(s) + "' (text|tsv)");
}

std::string format_report(const EvalReport& report, OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::kTsv) {
    out << "topic\tap10\n";
    for (const auto& [t, ap] : report.per_topic) out << t << '\t' << fmt(ap, 6) << '\n';
    out << "mean\t" << fmt(report.mean_ap10, 6) << '\n';
    out << "failed\t" << report.failed << '\n';
    if (report.delta_median) out << "delta_median\t" << fmt(*report.delta_median, 6) << '\n';
    if (report.best) out << "best\t" << *report.best << '\n';
    return out.str();
  }
  out << "run " << report.run_tag << '\n';
  out << pad("topic", 8) << pad("AP@10", 10) << '\n';
  for (const auto& [t, ap] : report.per_topic) out << pad(std::to_string(t), 8) << pad(fmt(ap), 10) << '\n';
  out << pad("mean", 8) << pad(fmt(report.mean_ap10), 10) << '\n';
  out << "failed " << report.failed << '\n';
  if (report.delta_median) out << "delta_median " << fmt(*report.delta_median) << '\n';
  if (report.best) out << "best " << *report.best << '\n';
  return out.str();
}

std::string format_comparison(const Comparison& c, OutputFormat format) {
  std::ostringstream out;
  const auto& rs = c.reports;
  auto cell_dm = [](const EvalReport& r) { return r.delta_median ? fmt(*r.delta_median) : std::string("-"); };
  auto cell_best = [](const EvalReport& r) { return r.best ? std::to_string(*r.best) : std::string("-"); };

  if (format == OutputFormat::kTsv) {
    out << "metric";
    for (const auto& r : rs) out << '\t' << r.run_tag;
    out << "\nap10";
    for (const auto& r : rs) out << '\t' << fmt(r.mean_ap10, 6);
    out << "\ndelta_median";
    for (const auto& r : rs) out << '\t' << (r.delta_median ? fmt(*r.delta_median, 6) : "");
    out << "\nbest";
    for (const auto& r : rs) out << '\t' << (r.best ? std::to_string(*r.best) : "");
    out << "\nfailed";
    for (const auto& r : rs) out << '\t' << r.failed;
    out << "\n\nwins";
    for (const auto& r : rs) out << '\t' << r.run_tag;
    out << '\n';
    for (std::size_t i = 0; i < rs.size(); ++i) {
      out << rs[i].run_tag;
      for (std::size_t j = 0; j < rs.size(); ++j) out << '\t' << c.wins[i][j];
      out << '\n';
    }
    return out.str();
  }

  std::size_t w = 10;
  for (const auto& r : rs) w = std::max(w, r.run_tag.size() + 2);
  out << pad("", 14, true);
  for (const auto& r : rs) out << pad(r.run_tag, w);
  out << '\n' << pad("AP@10", 14, true);
  for (const auto& r : rs) out << pad(fmt(r.mean_ap10), w);
  out << '\n' << pad("DeltaMedian", 14, true);
  for (const auto& r : rs) out << pad(cell_dm(r), w);
  out << '\n' << pad("Best", 14, true);
  for (const auto& r : rs) out << pad(cell_best(r), w);
  out << '\n' << pad("Failed", 14, true);
  for (const auto& r : rs) out << pad(std::to_string(r.failed), w);
  out << "\n\nwins (row beats column)\n" << pad("", 14, true);
  for (const auto& r : rs) out << pad(r.run_tag, w);
  out << '\n';
  for (std::size_t i = 0; i < rs.size(); ++i) {
    out << pad(rs[i].run_tag, 14, true);
    for (std::size_t j = 0; j < rs.size(); ++j) out << pad(std::to_string(c.wins[i][j]), w);
    out << '\n';
  }
  return out.str();
}

}  // namespace trialmatch
