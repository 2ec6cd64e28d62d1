#include "trialmatch/corpus.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <cmath>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "json.hpp"
#include "trialmatch/error.hpp"
#include "trialmatch/text_util.hpp"

namespace trialmatch {

namespace pt = boost::property_tree;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kCorpusMagic = "trialmatch-corpus";
constexpr int kCorpusVersion = 1;

pt::ptree read_xml_tree(std::string_view xml) {
  std::istringstream in{std::string(xml)};
  pt::ptree tree;
  try {
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error& e) {
    throw Error(ErrorCode::kMalformedXml, e.what());
  }
  return tree;
}

// The single top-level element, skipping comments and declarations.
const pt::ptree& root_element(const pt::ptree& tree, std::string* name) {
  for (const auto& [key, child] : tree) {
    if (!key.empty() && key.front() == '<') continue;
    if (name) *name = key;
    return child;
  }
  throw Error(ErrorCode::kMalformedXml, "document has no root element");
}

std::optional<std::string> child_text(const pt::ptree& node, const std::string& path) {
  auto child = node.get_child_optional(pt::ptree::path_type(path, '/'));
  if (!child) return std::nullopt;
  return child->data();
}

}  // namespace

const char* to_string(Gender g) {
  switch (g) {
    case Gender::kAll: return "all";
    case Gender::kMale: return "male";
    case Gender::kFemale: return "female";
    case Gender::kUnspecified: return "unspecified";
  }
  return "unspecified";
}

Gender gender_from_string(std::string_view s) {
  std::string v = to_lower(trim(s));
  if (v.empty() || v == "all" || v == "both") return Gender::kAll;
  if (v == "male") return Gender::kMale;
  if (v == "female") return Gender::kFemale;
  return Gender::kUnspecified;
}

void Corpus::add(TrialDoc trial) {
  if (trials.contains(trial.doc_id)) {
    throw Error(ErrorCode::kDuplicateDocId, trial.doc_id);
  }
  std::string id = trial.doc_id;
  trials.emplace(std::move(id), std::move(trial));
}

std::optional<int> parse_age_months(std::string_view text) {
  static const std::regex kAge(R"(^\s*(\d+(?:\.\d+)?)\s*(year|month|week|day|hour|minute)s?\s*$)",
                               std::regex::icase);
  std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, kAge)) return std::nullopt;
  double n = std::stod(m[1].str());
  std::string unit = to_lower(m[2].str());
  double months = 0;
  if (unit == "year") months = n * 12;
  else if (unit == "month") months = n;
  else if (unit == "week") months = n * 12 / 52;
  else if (unit == "day") months = n * 12 / 365;
  return static_cast<int>(std::floor(months + 1e-9));
}

TrialDoc parse_trial_xml(std::string_view xml) {
  pt::ptree tree = read_xml_tree(xml);
  const pt::ptree& root = root_element(tree, nullptr);

  TrialDoc doc;
  doc.doc_id = std::string(trim(child_text(root, "id_info/nct_id").value_or("")));
  if (doc.doc_id.empty()) throw Error(ErrorCode::kMissingId, "no id_info/nct_id element");
  doc.title = collapse_whitespace(child_text(root, "brief_title").value_or(""));

  if (auto block = child_text(root, "eligibility/criteria/textblock")) {
    std::string_view body = trim(*block);
    if (!body.empty()) doc.eligibility_raw = std::string(body);
  }
  doc.gender = gender_from_string(child_text(root, "eligibility/gender").value_or(""));
  if (auto s = child_text(root, "eligibility/minimum_age")) doc.min_age_months = parse_age_months(*s);
  if (auto s = child_text(root, "eligibility/maximum_age")) doc.max_age_months = parse_age_months(*s);
  if (doc.min_age_months && doc.max_age_months && *doc.min_age_months > *doc.max_age_months) {
    throw Error(ErrorCode::kMalformedXml, doc.doc_id + ": minimum_age exceeds maximum_age");
  }
  return doc;
}

std::vector<Topic> parse_topics(std::string_view xml) {
  pt::ptree tree = read_xml_tree(xml);
  std::string root_name;
  const pt::ptree& root = root_element(tree, &root_name);
  if (root_name != "topics") throw Error(ErrorCode::kMalformedXml, "expected <topics> root, got <" + root_name + ">");

  std::vector<Topic> topics;
  std::set<int> seen;
  for (const auto& [key, node] : root) {
    if (key != "topic") continue;
    auto number = node.get_optional<std::string>("<xmlattr>.number");
    if (!number) throw Error(ErrorCode::kMalformedXml, "topic without number attribute");
    int id = 0;
    try {
      std::size_t used = 0;
      id = std::stoi(*number, &used);
      if (used != number->size() || id <= 0) throw std::invalid_argument("range");
    } catch (const std::exception&) {
      throw Error(ErrorCode::kMalformedXml, "topic number must be a positive integer: " + *number);
    }
    if (!seen.insert(id).second) throw Error(ErrorCode::kDuplicateTopicId, std::to_string(id));
    std::string text = collapse_whitespace(node.data());
    if (text.empty()) throw Error(ErrorCode::kMalformedXml, "topic " + std::to_string(id) + " has no text");
    topics.push_back({id, std::move(text)});
  }
  return topics;
}

Corpus drop_uncriterioned(Corpus corpus, const CriteriaRules& rules) {
  Corpus out;
  out.stats.total_parsed = corpus.stats.total_parsed;
  out.stats.dropped_no_criteria = corpus.stats.dropped_no_criteria;
  for (auto& [id, trial] : corpus.trials) {
    if (!trial.criteria) {
      trial.criteria = split_criteria(trial.eligibility_raw.value_or(""), rules);
    }
    if (trial.criteria->empty()) {
      ++out.stats.dropped_no_criteria;
      continue;
    }
    out.trials.emplace(id, std::move(trial));
  }
  return out;
}

namespace {

ordered_json optional_int(const std::optional<int>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

std::optional<int> read_optional_int(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<int>();
}

ordered_json trial_to_json(const TrialDoc& t) {
  ordered_json j;
  j["id"] = t.doc_id;
  j["title"] = t.title;
  j["eligibility"] = t.eligibility_raw ? ordered_json(*t.eligibility_raw) : ordered_json(nullptr);
  if (t.criteria) {
    j["criteria"] = {{"inclusion", t.criteria->inclusion}, {"exclusion", t.criteria->exclusion}};
  } else {
    j["criteria"] = nullptr;
  }
  j["gender"] = to_string(t.gender);
  j["min_age_months"] = optional_int(t.min_age_months);
  j["max_age_months"] = optional_int(t.max_age_months);
  return j;
}

TrialDoc trial_from_json(const ordered_json& j) {
  TrialDoc t;
  t.doc_id = j.at("id").get<std::string>();
  t.title = j.at("title").get<std::string>();
  if (!j.at("eligibility").is_null()) t.eligibility_raw = j.at("eligibility").get<std::string>();
  if (!j.at("criteria").is_null()) {
    Criteria c;
    c.inclusion = j.at("criteria").at("inclusion").get<std::vector<std::string>>();
    c.exclusion = j.at("criteria").at("exclusion").get<std::vector<std::string>>();
    t.criteria = std::move(c);
  }
  std::string g = j.at("gender").get<std::string>();
  t.gender = g == "unspecified" ? Gender::kUnspecified : gender_from_string(g);
  t.min_age_months = read_optional_int(j.at("min_age_months"));
  t.max_age_months = read_optional_int(j.at("max_age_months"));
  return t;
}

}  // namespace

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << kCorpusMagic << '\t' << kCorpusVersion << '\n';
  ordered_json stats = {{"total_parsed", corpus.stats.total_parsed},
                        {"dropped_no_criteria", corpus.stats.dropped_no_criteria},
                        {"trials", corpus.trials.size()}};
  out << stats.dump() << '\n';
  for (const auto& [id, trial] : corpus.trials) out << trial_to_json(trial).dump() << '\n';
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path.string());
}

Corpus load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());

  std::string line;
  std::getline(in, line);
  std::string expected = std::string(kCorpusMagic) + '\t' + std::to_string(kCorpusVersion);
  if (line != expected) {
    throw Error(ErrorCode::kFormatVersionMismatch, path.string() + ": header '" + line + "'");
  }

  Corpus corpus;
  std::size_t declared = 0;
  std::size_t line_no = 1;
  try {
    if (!std::getline(in, line)) throw Error(ErrorCode::kFormatVersionMismatch, "missing stats record");
    ++line_no;
    auto stats = ordered_json::parse(line);
    corpus.stats.total_parsed = stats.at("total_parsed").get<std::size_t>();
    corpus.stats.dropped_no_criteria = stats.at("dropped_no_criteria").get<std::size_t>();
    declared = stats.at("trials").get<std::size_t>();
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      corpus.add(trial_from_json(ordered_json::parse(line)));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kIoError, path.string() + ":" + std::to_string(line_no) + ": " + e.what());
  }
  if (corpus.trials.size() != declared) {
    throw Error(ErrorCode::kIoError, path.string() + ": truncated store");
  }
  return corpus;
}

}  // namespace trialmatch
