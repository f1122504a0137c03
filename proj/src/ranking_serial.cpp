// Single-threaded reference versions of the RankingContext loops. Kept in
// step with the OpenMP versions; tests assert identical output.

#include "ranking_detail.hpp"
#include "tagrec/error.hpp"

namespace tagrec::serial {

std::vector<ScoredCandidate> score_candidates(const RankingContext& ctx, const UserId& u) {
  const auto& f = ctx.corpus();
  auto ui = f.find_user(u);
  if (!ui) return {};
  const auto anchors = f.resources_of_user(*ui);
  if (anchors.empty()) return {};
  const auto boost = ctx.user_boost(u);
  const auto owned = detail::owned_mask(f, anchors);

  std::vector<ScoredCandidate> out;
  for (std::size_t c = 0; c < f.resource_count(); ++c) {
    if (owned[c]) continue;
    out.push_back(ctx.best_over_anchors(static_cast<Folksonomy::Index>(c), anchors, boost));
  }
  return out;
}

RecommendationList recommend(const RankingContext& ctx, const UserId& u, std::size_t k) {
  if (k == 0) throw InvalidArgument("k must be at least 1");
  RecommendationList out{u, k, score_candidates(ctx, u)};
  rank_top_k(out.items, k);
  return out;
}

std::vector<RecommendationList> recommend_all(const RankingContext& ctx, std::size_t k) {
  std::vector<RecommendationList> out;
  for (const auto& u : ctx.corpus().users()) out.push_back(recommend(ctx, u, k));
  return out;
}

}  // namespace tagrec::serial
