#include <doctest.h>

#include <chrono>

#include "../support/oracles.hpp"
#include "trialmatch/pipeline.hpp"

using namespace trialmatch;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
    path = fs::temp_directory_path() / ("trialmatch_test_" + std::to_string(stamp) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

PipelineConfig fixture_config(const fs::path& out) {
  PipelineConfig c;
  c.trials_dir = oracle::fixture("trials");
  c.topics = oracle::fixture("topics.xml");
  c.qrels = oracle::fixture("qrels.txt");
  c.medians = oracle::fixture("medians.txt");
  c.output_dir = out;
  c.threads = 1;
  resolve_defaults(c);
  return c;
}

std::optional<ErrorCode> config_error(const std::string& json) {
  try {
    parse_pipeline_config(json, "/base");
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_SUITE("pipeline") {
  TEST_CASE("config parsing") {
    auto c = parse_pipeline_config(
        R"({"trials_dir": "trials", "topics": "/abs/topics.xml", "k1": 1.2, "b": 0.5, "depth": 50,
            "runs": ["R3", "BL"], "format": "tsv", "failed": "top10", "strict": true})",
        "/base");
    CHECK(c.trials_dir == fs::path("/base/trials"));
    CHECK(c.topics == fs::path("/abs/topics.xml"));
    CHECK(c.bm25.k1 == 1.2);
    CHECK(c.bm25.b == 0.5);
    CHECK(c.depth == 50);
    CHECK(c.runs == std::vector<std::string>{"R3", "BL"});
    CHECK(c.format == OutputFormat::kTsv);
    CHECK(c.failed_mode == FailedMode::kTop10);
    CHECK(c.strict);
    CHECK(c.corpus_path() == fs::path("out/corpus.jsonl"));
    CHECK(c.run_path("R3").filename() == "ittc_R3.run");

    PipelineConfig d;
    CHECK(d.bm25.k1 == 0.75);
    CHECK(d.bm25.b == 0.75);
    CHECK(d.depth == 1000);
  }

  TEST_CASE("config errors") {
    CHECK(config_error(R"({"colour": "red"})") == ErrorCode::kInvalidConfig);
    CHECK(config_error(R"({"depth": 0})") == ErrorCode::kInvalidConfig);
    CHECK(config_error(R"({"depth": "ten"})") == ErrorCode::kInvalidConfig);
    CHECK(config_error(R"({"failed": "sometimes"})") == ErrorCode::kInvalidConfig);
    CHECK(config_error(R"({"format": "xml"})") == ErrorCode::kInvalidConfig);
    CHECK(config_error("{not json") == ErrorCode::kInvalidConfig);
    CHECK_FALSE(config_error("{}"));
  }

  TEST_CASE("validation") {
    TempDir tmp;
    auto c = fixture_config(tmp.path);
    CHECK_NOTHROW(validate(c, Stage::kIngest));
    CHECK_NOTHROW(validate(c, Stage::kEval));
    CHECK_THROWS_AS(validate(c, Stage::kRun), Error);  // corpus not written yet
    c.trials_dir = tmp.path / "missing";
    CHECK_THROWS_AS(validate(c, Stage::kIngest), Error);
    c = fixture_config(tmp.path);
    c.bm25.b = 1.5;
    CHECK_THROWS_AS(validate(c, Stage::kEval), Error);
  }

  TEST_CASE("ingest skips bad files unless strict") {
    TempDir tmp;
    auto c = fixture_config(tmp.path);
    c.trials_dir = oracle::fixture("trials_bad");
    Resources r = load_resources(c);
    Diagnostics diag;
    Corpus corpus = run_ingest(c, r, diag);
    CHECK(corpus.trials.size() == 1);
    CHECK(corpus.trials.count("NCT01000002") == 1);
    REQUIRE(diag.warnings.size() == 1);
    CHECK(diag.warnings[0].find("NCT01000099") != std::string::npos);

    c.strict = true;
    Diagnostics strict_diag;
    try {
      run_ingest(c, r, strict_diag);
      FAIL("expected MalformedXml");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kMalformedXml);
      CHECK(std::string(e.what()).find("NCT01000099") != std::string::npos);
    }
  }

  TEST_CASE("full pipeline is deterministic") {
    TempDir a, b;
    std::vector<std::string> first_runs;
    for (const fs::path* out : {&a.path, &b.path}) {
      auto c = fixture_config(*out);
      Resources r = load_resources(c);
      Diagnostics diag;
      Corpus corpus = run_ingest(c, r, diag);
      CHECK(corpus.stats.total_parsed == 11);
      CHECK(corpus.stats.dropped_no_criteria == 1);
      CHECK(load_corpus(c.corpus_path()) == corpus);
      auto topics = parse_topics(read_file(c.topics));
      auto files = run_retrieval(c, r, corpus, topics, diag);
      REQUIRE(files.size() == 6);
      auto cmp = run_eval(c, files, diag);
      CHECK(cmp.reports.size() == 6);
      CHECK(fs::exists(*out / "comparison.txt"));
      CHECK(fs::exists(*out / "ittc_R3.eval.txt"));
      std::vector<std::string> contents;
      for (const auto& f : files) {
        contents.push_back(read_file(f));
        auto run = load_run(f);
        // Set-difference runs can leave a topic empty.
        CHECK(run.topics.size() <= 5);
        if (f.filename() == "ittc_BL.run") CHECK(run.topics.size() == 5);
      }
      if (first_runs.empty()) {
        first_runs = contents;
      } else {
        CHECK(contents == first_runs);
      }
    }
  }

  TEST_CASE("run selection") {
    TempDir tmp;
    auto c = fixture_config(tmp.path);
    c.runs = {"R5", "BL"};
    Resources r = load_resources(c);
    auto sel = selected_runs(c, r);
    REQUIRE(sel.size() == 2);
    CHECK(sel[0]->run_id == "R5");
    c.runs = {"R7"};
    CHECK_THROWS_AS(selected_runs(c, r), Error);
  }
}
