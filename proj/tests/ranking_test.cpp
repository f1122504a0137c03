#include <cmath>

#include "doctest.h"
#include "support/corpora.hpp"
#include "tagrec/error.hpp"
#include "tagrec/ranking.hpp"

using namespace tagrec;
using doctest::Approx;

namespace {

std::vector<RankingConfig> all_configs() {
  std::vector<RankingConfig> out;
  for (auto repr : {ReprMode::raw, ReprMode::tf})
    for (auto vec : {VectorMode::count, VectorMode::binary})
      for (bool sym : {false, true}) out.push_back({repr, vec, kDefaultPreferenceThreshold, sym});
  return out;
}

std::map<std::string, double> as_map(const TagVector& v, const Folksonomy& f) {
  std::map<std::string, double> m;
  for (const auto& e : v.entries) m[f.vocabulary()[e.dim].value()] = e.weight;
  return m;
}

}  // namespace

TEST_SUITE("ranking") {

TEST_CASE("tag_vector") {
  const auto f = build_folksonomy(testing::figure1());
  const std::map<std::string, double> gw{{"ajax", 1}, {"google", 1}, {"programming", 1}, {"web", 1}};
  CHECK(as_map(tag_vector(ResourceId("GW"), f, VectorMode::binary), f) == gw);
  CHECK(as_map(tag_vector(ResourceId("GW"), f, VectorMode::count), f) == gw);
  CHECK(tag_vector(ResourceId("unknown"), f, VectorMode::count).entries.empty());

  auto in = testing::figure1();
  in.push_back({UserId("carol"), Tag("web"), ResourceId("GW")});
  const auto g = build_folksonomy(in);
  CHECK(as_map(tag_vector(ResourceId("GW"), g, VectorMode::count), g).at("web") == 2.0);
  CHECK(as_map(tag_vector(ResourceId("GW"), g, VectorMode::binary), g).at("web") == 1.0);
}

TEST_CASE("cosine") {
  const auto f = build_folksonomy(testing::figure1());
  const auto gw = tag_vector(ResourceId("GW"), f, VectorMode::binary);
  const auto wk = tag_vector(ResourceId("WK"), f, VectorMode::binary);
  const auto sw = tag_vector(ResourceId("SW"), f, VectorMode::binary);
  CHECK(cosine(gw, wk) == Approx(0.75).epsilon(1e-12));
  CHECK(cosine(wk, sw) == Approx(1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-12));
  CHECK(cosine(gw, gw) == Approx(1.0).epsilon(1e-12));
  CHECK(cosine(gw, TagVector{}) == 0.0);
  CHECK(cosine(TagVector{}, TagVector{}) == 0.0);
}

TEST_CASE("combined_similarity on the fixture") {
  const auto f = build_folksonomy(testing::figure1());
  const RankingConfig cfg{ReprMode::raw, VectorMode::binary, 0.7, false};

  const auto gw = combined_similarity(ResourceId("WK"), ResourceId("GW"), UserId("bob"), f, cfg);
  CHECK(gw.score == Approx(70.0 / 3.0).epsilon(1e-12));
  CHECK(gw.factors.cosine == Approx(0.75).epsilon(1e-12));
  CHECK(gw.factors.boost == 1.25);
  REQUIRE(gw.factors.boost_tag);
  CHECK(gw.factors.boost_tag->value() == "ajax");

  const auto sw = combined_similarity(ResourceId("WK"), ResourceId("SW"), UserId("bob"), f, cfg);
  CHECK(sw.score == Approx((32.0 / 3.0 + 8.0 / 3.0 / (2.0 * std::sqrt(2.0))) * 1.25).epsilon(1e-12));
  CHECK(sw.score == Approx(14.512).epsilon(1e-4));
  REQUIRE(sw.factors.boost_tag);
  CHECK(sw.factors.boost_tag->value() == "web");

  const auto none = combined_similarity(ResourceId("WK"), ResourceId("GW"), UserId("nobody"), f, cfg);
  CHECK(none.factors.boost == 1.0);
  CHECK_FALSE(none.factors.boost_tag);
  CHECK(none.score == Approx(32.0 / 3.0 + 32.0 / 3.0 * 0.75).epsilon(1e-12));

  CHECK_THROWS_AS(combined_similarity(ResourceId("WK"), ResourceId("WK"), UserId("bob"), f, cfg), InvalidArgument);
}

TEST_CASE("score recomposes from its own factors") {
  const auto f = build_folksonomy(testing::figure1());
  for (const auto& cfg : all_configs()) {
    const auto s = combined_similarity(ResourceId("SW"), ResourceId("GW"), UserId("carol"), f, cfg);
    CHECK(s.score == combine_similarity(s.factors, cfg.symmetric));
  }
}

TEST_CASE("recommend on the fixture") {
  const auto f = build_folksonomy(testing::figure1());
  const auto bob = recommend(UserId("bob"), f, 2);
  REQUIRE(bob.items.size() == 2);
  CHECK(bob.items[0].candidate.value() == "GW");
  CHECK(bob.items[0].anchor.value() == "WK");
  CHECK(bob.items[0].score == Approx(70.0 / 3.0).epsilon(1e-12));
  CHECK(bob.items[1].candidate.value() == "SW");
  CHECK(bob.items[1].score == Approx(14.5118446353).epsilon(1e-9));

  CHECK(recommend(UserId("nobody"), f, 5).items.empty());

  const auto alice = recommend(UserId("alice"), f, 1);
  REQUIRE(alice.items.size() == 1);
  CHECK(alice.items[0].candidate.value() == "WK");

  CHECK_THROWS_AS(recommend(UserId("bob"), f, 0), InvalidArgument);
}

TEST_CASE("GW outranks SW for bob under every configuration") {
  const auto f = build_folksonomy(testing::figure1());
  for (const auto& cfg : all_configs()) {
    CAPTURE(cfg.symmetric);
    const auto list = recommend(UserId("bob"), f, 5, cfg);
    REQUIRE(list.items.size() == 2);
    CHECK(list.items[0].candidate.value() == "GW");
    CHECK(list.items[1].candidate.value() == "SW");
    CHECK(list.items[0].score > list.items[1].score);
  }
}

TEST_CASE("anchor ties go to the lexicographically first anchor") {
  // bob owns A and B with identical tags; both score X identically.
  std::vector<TagAssignment> in;
  for (const char* r : {"B", "A"})
    for (const char* t : {"x", "y"}) in.push_back({UserId("bob"), Tag(t), ResourceId(r)});
  in.push_back({UserId("eve"), Tag("x"), ResourceId("X")});
  const auto f = build_folksonomy(in);
  const auto list = recommend(UserId("bob"), f, 5);
  REQUIRE(list.items.size() == 1);
  CHECK(list.items[0].anchor.value() == "A");
}

TEST_CASE("candidate ties break by resource id") {
  std::vector<TagAssignment> in{{UserId("bob"), Tag("x"), ResourceId("mine")},
                                {UserId("eve"), Tag("x"), ResourceId("zeta")},
                                {UserId("eve"), Tag("x"), ResourceId("alpha")},
                                {UserId("eve"), Tag("x"), ResourceId("mid")}};
  const auto f = build_folksonomy(in);
  const auto list = recommend(UserId("bob"), f, 2);
  REQUIRE(list.items.size() == 2);
  CHECK(list.items[0].candidate.value() == "alpha");
  CHECK(list.items[1].candidate.value() == "mid");
}

TEST_CASE("invalid threshold in the config") {
  const auto f = build_folksonomy(testing::figure1());
  RankingConfig cfg;
  cfg.pref_threshold = 0.0;
  CHECK_THROWS_AS(RankingContext(f, cfg), InvalidArgument);
}

}
