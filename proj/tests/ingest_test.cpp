#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "tagrec/error.hpp"
#include "tagrec/ingest.hpp"

using namespace tagrec;

namespace {

std::string norm(std::string_view s) {
  auto t = normalize_tag(s);
  return t ? t->value() : "<rejected>";
}

}  // namespace

TEST_SUITE("ingest") {

TEST_CASE("normalize_tag examples") {
  CHECK(norm("  Web  ") == "web");
  CHECK(norm("Web 2.0") == "web-2.0");
  CHECK(norm("") == "<rejected>");
  CHECK(norm(" \t \n") == "<rejected>");
  CHECK(norm("Social   Bookmarking\tTools") == "social-bookmarking-tools");
}

TEST_CASE("normalize_tag folds non-ASCII case") {
  CHECK(norm("ÉCOLE") == "école");
  CHECK(norm("ΑΘΗΝΑ") == "αθηνα");
  CHECK(norm("Москва") == "москва");
  CHECK(norm("web design") == "web-design");  // no-break space is whitespace
}

TEST_CASE("spelling variants stay distinct") {
  CHECK(norm("web2.0") != norm("web20"));
  CHECK(norm("web_20") != norm("web20"));
  CHECK(norm("Web2.0") == "web2.0");
}

TEST_CASE("normalize_tag is idempotent") {
  const std::vector<std::string> pieces{"A", "b", " ", "\t", "  ", "É", "ß", "Σ", "ς", "İ", "-", "_", "2.0", "　", "Ǆ"};
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
  std::uniform_int_distribution<int> len(0, 8);
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    for (int n = len(rng); n > 0; --n) s += pieces[pick(rng)];
    auto once = normalize_tag(s);
    if (!once) continue;
    auto twice = normalize_tag(once->value());
    REQUIRE(twice);
    CHECK(*twice == *once);
  }
}

TEST_CASE("jsonl record expands to one assignment per tag") {
  std::istringstream in(R"({"user":"alice","uri":"GW","tags":["Ajax","web"]})" "\n");
  const auto res = load_corpus(in, CorpusFormat::jsonl);
  REQUIRE(res.assignments.size() == 2);
  CHECK(res.assignments[0] == TagAssignment{UserId("alice"), Tag("ajax"), ResourceId("GW")});
  CHECK(res.assignments[1] == TagAssignment{UserId("alice"), Tag("web"), ResourceId("GW")});
}

TEST_CASE("malformed lines are skipped and reported") {
  std::istringstream in(
      "{\"user\":\"alice\",\"uri\":\"GW\",\"tags\":[]}\n"
      "not json\n"
      "\n"
      "{\"user\":\"bob\",\"uri\":\"WK\",\"tags\":[\"java\"],\"timestamp\":\"2008-11-02T10:00:00Z\"}\n"
      "{\"user\":\"\",\"uri\":\"X\",\"tags\":[\"a\"]}\n"
      "{\"user\":\"carol\",\"tags\":[\"a\"]}\n");
  const auto res = load_corpus(in, CorpusFormat::jsonl);
  CHECK(res.assignments.size() == 1);
  REQUIRE(res.report.malformed.size() == 4);
  CHECK(res.report.malformed[0].line == 1);
  CHECK(res.report.malformed[1].line == 2);
  CHECK(res.report.malformed[2].line == 5);
  CHECK(res.report.malformed[3].line == 6);
  CHECK(res.report.records_accepted == 1);
}

TEST_CASE("rejected tags are reported and the count invariant holds") {
  std::istringstream in(
      "{\"user\":\"alice\",\"uri\":\"GW\",\"tags\":[\"Ajax\",\"  \",\"\"]}\n"
      "{\"user\":\"bob\",\"uri\":\"WK\",\"tags\":[\"   \"]}\n");
  const auto res = load_corpus(in, CorpusFormat::jsonl);
  CHECK(res.assignments.size() == 1);
  CHECK(res.report.rejected_tags.size() == 3);
  CHECK(res.report.records_accepted == 2);
  CHECK(res.report.assignments_emitted + res.report.rejected_tags.size() == res.report.raw_tags);

  const auto j = nlohmann::json::parse(res.report.to_json());
  CHECK(j["rejected_tags"].size() == 3);
  CHECK(j["rejected_tags"][2]["line"] == 2);
}

TEST_CASE("fixture files") {
  const auto jsonl = load_corpus(std::filesystem::path(TAGREC_DATA_DIR) / "figure1.jsonl", CorpusFormat::jsonl);
  CHECK(jsonl.assignments.size() == 10);
  CHECK(jsonl.report.malformed.empty());
  const auto tsv = load_corpus(std::filesystem::path(TAGREC_DATA_DIR) / "figure1.tsv", CorpusFormat::tsv);
  CHECK(tsv.assignments == jsonl.assignments);
}

TEST_CASE("tsv records") {
  std::istringstream in(
      "alice\tGW\tAjax,Web 2.0\t2008-11-01\r\n"
      "bob\tWK\t\n"
      "carol\tSW\n"
      "dave\tX\tweb,,mail\n");
  const auto res = load_corpus(in, CorpusFormat::tsv);
  REQUIRE(res.assignments.size() == 4);
  CHECK(res.assignments[1].tag == Tag("web-2.0"));
  CHECK(res.report.malformed.size() == 2);
  CHECK(res.report.rejected_tags.size() == 1);
  CHECK(res.report.assignments_emitted + res.report.rejected_tags.size() == res.report.raw_tags);
}

TEST_CASE("unreadable file is fatal") {
  CHECK_THROWS_AS(load_corpus(std::filesystem::path("/nonexistent/corpus.jsonl"), CorpusFormat::jsonl), IoError);
  CHECK_THROWS_AS(parse_corpus_format("xml"), InvalidArgument);
}

}
