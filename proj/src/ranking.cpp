#include "tagrec/ranking.hpp"

#include <algorithm>
#include <cmath>

#include "ranking_detail.hpp"
#include "tagrec/error.hpp"

namespace tagrec {

namespace detail {

double dot(const TagVector& a, const TagVector& b) {
  double sum = 0.0;
  auto i = a.entries.begin();
  auto j = b.entries.begin();
  while (i != a.entries.end() && j != b.entries.end()) {
    if (i->dim < j->dim) {
      ++i;
    } else if (j->dim < i->dim) {
      ++j;
    } else {
      sum += i->weight * j->weight;
      ++i;
      ++j;
    }
  }
  return sum;
}

double cosine_with_norms(const TagVector& a, const TagVector& b, double norm_a, double norm_b) {
  if (norm_a == 0.0 || norm_b == 0.0) return 0.0;
  return std::clamp(dot(a, b) / (norm_a * norm_b), 0.0, 1.0);
}

TagVector vector_at(Folksonomy::Index r, const Folksonomy& f, VectorMode mode) {
  TagVector v;
  v.resource = f.resources()[r];
  for (auto tc : f.tags_of_resource(r)) {
    v.entries.push_back({tc.tag, mode == VectorMode::binary ? 1.0 : static_cast<double>(tc.count)});
  }
  return v;
}

}  // namespace detail

double TagVector::norm() const {
  double sq = 0.0;
  for (const auto& e : entries) sq += e.weight * e.weight;
  return std::sqrt(sq);
}

TagVector tag_vector(const ResourceId& r, const Folksonomy& f, VectorMode mode) {
  if (auto ri = f.find_resource(r)) return detail::vector_at(*ri, f, mode);
  return TagVector{r, {}};
}

double cosine(const TagVector& a, const TagVector& b) {
  return detail::cosine_with_norms(a, b, a.norm(), b.norm());
}

double combine_similarity(const SimilarityFactors& x, bool symmetric) {
  const double bracket =
      symmetric ? (x.ds_anchor + x.ds_candidate) * x.cosine : x.ds_anchor + x.ds_candidate * x.cosine;
  return bracket * x.boost;
}

UserBoost UserBoost::build(const UserId& u, const Folksonomy& f, double threshold) {
  validate_preference_threshold(threshold);
  UserBoost b;
  auto ui = f.find_user(u);
  if (!ui) return b;
  const auto row = f.tags_of_user(*ui);
  if (row.empty()) return b;
  std::uint32_t max_count = 0;
  for (auto tc : row) max_count = std::max(max_count, tc.count);
  const double distinct = static_cast<double>(row.size());
  for (auto tc : row) {
    if (meets_preference_threshold(tc.count, max_count, threshold)) {
      b.preferred.emplace_back(tc.tag, static_cast<double>(tc.count) / distinct);
    }
  }
  return b;
}

std::pair<double, std::optional<Folksonomy::Index>> UserBoost::apply(
    std::span<const Folksonomy::TagCount> candidate_tags) const {
  std::optional<Folksonomy::Index> best;
  double best_affinity = 0.0;
  auto p = preferred.begin();
  for (auto tc : candidate_tags) {
    while (p != preferred.end() && p->first < tc.tag) ++p;
    if (p == preferred.end()) break;
    if (p->first != tc.tag) continue;
    if (!best || p->second > best_affinity) {
      best = tc.tag;
      best_affinity = p->second;
    }
  }
  if (!best) return {1.0, std::nullopt};
  return {1.0 + best_affinity, best};
}

ScoredCandidate combined_similarity(const ResourceId& anchor, const ResourceId& candidate, const UserId& u,
                                    const Folksonomy& f, const RankingConfig& cfg) {
  if (anchor == candidate) {
    throw InvalidArgument("anchor and candidate are the same resource '" + anchor.value() + "'");
  }
  SimilarityFactors x;
  x.ds_anchor = document_score(anchor, f, cfg.repr_mode).score;
  x.ds_candidate = document_score(candidate, f, cfg.repr_mode).score;
  x.cosine = cosine(tag_vector(anchor, f, cfg.vector_mode), tag_vector(candidate, f, cfg.vector_mode));
  if (auto ci = f.find_resource(candidate)) {
    auto [boost, tag] = UserBoost::build(u, f, cfg.pref_threshold).apply(f.tags_of_resource(*ci));
    x.boost = boost;
    if (tag) x.boost_tag = f.vocabulary()[*tag];
  }
  return {candidate, anchor, combine_similarity(x, cfg.symmetric), std::move(x)};
}

void rank_top_k(std::vector<ScoredCandidate>& items, std::size_t k) {
  auto before = [](const ScoredCandidate& a, const ScoredCandidate& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.candidate < b.candidate;
  };
  if (items.size() > k) {
    std::partial_sort(items.begin(), items.begin() + static_cast<std::ptrdiff_t>(k), items.end(), before);
    items.resize(k);
  } else {
    std::sort(items.begin(), items.end(), before);
  }
}

RankingContext::RankingContext(const Folksonomy& f, RankingConfig cfg) : corpus_(&f), cfg_(cfg) {
  validate_preference_threshold(cfg_.pref_threshold);
  const auto n = f.resource_count();
  ds_.resize(n);
  vectors_.resize(n);
  norms_.resize(n);
#pragma omp parallel for schedule(static)
  for (std::size_t r = 0; r < n; ++r) {
    const auto ri = static_cast<Index>(r);
    ds_[r] = tagrec::document_score(ri, f, cfg_.repr_mode);
    vectors_[r] = detail::vector_at(ri, f, cfg_.vector_mode);
    norms_[r] = vectors_[r].norm();
  }
}

UserBoost RankingContext::user_boost(const UserId& u) const {
  return UserBoost::build(u, *corpus_, cfg_.pref_threshold);
}

ScoredCandidate RankingContext::best_over_anchors(Index candidate, std::span<const Index> anchors,
                                                  const UserBoost& boost) const {
  const auto& f = *corpus_;
  auto [boost_value, boost_tag] = boost.apply(f.tags_of_resource(candidate));

  ScoredCandidate best;
  std::optional<Index> best_anchor;
  for (Index a : anchors) {
    SimilarityFactors x;
    x.ds_anchor = ds_[a];
    x.ds_candidate = ds_[candidate];
    x.cosine = detail::cosine_with_norms(vectors_[a], vectors_[candidate], norms_[a], norms_[candidate]);
    x.boost = boost_value;
    const double score = combine_similarity(x, cfg_.symmetric);
    if (!best_anchor || score > best.score) {
      best_anchor = a;
      best.score = score;
      best.factors = x;
    }
  }
  if (best_anchor) best.anchor = f.resources()[*best_anchor];
  best.candidate = f.resources()[candidate];
  if (boost_tag) best.factors.boost_tag = f.vocabulary()[*boost_tag];
  return best;
}

std::vector<ScoredCandidate> RankingContext::score_candidates(const UserId& u) const {
  const auto& f = *corpus_;
  auto ui = f.find_user(u);
  if (!ui) return {};
  const auto anchors = f.resources_of_user(*ui);
  if (anchors.empty()) return {};
  const auto boost = user_boost(u);
  const auto owned = detail::owned_mask(f, anchors);

  const auto n = f.resource_count();
  std::vector<ScoredCandidate> slots(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t c = 0; c < n; ++c) {
    if (!owned[c]) slots[c] = best_over_anchors(static_cast<Index>(c), anchors, boost);
  }
  return detail::compact(std::move(slots), owned);
}

RecommendationList RankingContext::recommend(const UserId& u, std::size_t k) const {
  if (k == 0) throw InvalidArgument("k must be at least 1");
  RecommendationList out{u, k, score_candidates(u)};
  rank_top_k(out.items, k);
  return out;
}

std::vector<RecommendationList> RankingContext::recommend_all(std::size_t k) const {
  if (k == 0) throw InvalidArgument("k must be at least 1");
  const auto users = corpus_->users();
  std::vector<RecommendationList> out(users.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < users.size(); ++i) out[i] = serial::recommend(*this, users[i], k);
  return out;
}

RecommendationList recommend(const UserId& u, const Folksonomy& f, std::size_t k, const RankingConfig& cfg) {
  if (k == 0) throw InvalidArgument("k must be at least 1");
  if (!f.find_user(u)) return {u, k, {}};
  return RankingContext(f, cfg).recommend(u, k);
}

}  // namespace tagrec
