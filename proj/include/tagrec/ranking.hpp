#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tagrec/folksonomy.hpp"
#include "tagrec/metrics.hpp"

namespace tagrec {

enum class VectorMode { count, binary };

struct RankingConfig {
  ReprMode repr_mode = ReprMode::raw;
  VectorMode vector_mode = VectorMode::count;
  double pref_threshold = kDefaultPreferenceThreshold;
  // false: Ds(anchor) + Ds(candidate) * cosine
  // true:  (Ds(anchor) + Ds(candidate)) * cosine
  bool symmetric = false;

  friend bool operator==(const RankingConfig&, const RankingConfig&) = default;
};

// Sparse tag vector over the corpus vocabulary; entries sorted by dimension,
// zero weights never stored.
struct TagVector {
  struct Entry {
    Folksonomy::Index dim;
    double weight;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  ResourceId resource;
  std::vector<Entry> entries;

  double norm() const;
};

TagVector tag_vector(const ResourceId& r, const Folksonomy& f, VectorMode mode);

// dot(a, b) / (|a| |b|), clamped to [0, 1]; 0 if either vector is empty.
double cosine(const TagVector& a, const TagVector& b);

struct SimilarityFactors {
  double ds_anchor = 0.0;
  double ds_candidate = 0.0;
  double cosine = 0.0;
  std::optional<Tag> boost_tag;
  double boost = 1.0;
};

// The one place the combination formula lives; ScoredCandidate::score is
// always exactly combine_similarity(factors, symmetric).
double combine_similarity(const SimilarityFactors& factors, bool symmetric);

struct ScoredCandidate {
  ResourceId candidate;
  ResourceId anchor;
  double score = 0.0;
  SimilarityFactors factors;
};

struct RecommendationList {
  UserId user;
  std::size_t k = 0;
  std::vector<ScoredCandidate> items;
};

// The user's preference tags with their affinities, sorted by tag index.
// Computing it once per user keeps the candidate loop free of map lookups.
struct UserBoost {
  std::vector<std::pair<Folksonomy::Index, double>> preferred;

  static UserBoost build(const UserId& u, const Folksonomy& f, double threshold);

  // Boost for a candidate with the given tags: 1 + affinity of the best
  // preferred tag it carries (lowest index wins ties), or 1 if none.
  std::pair<double, std::optional<Folksonomy::Index>> apply(
      std::span<const Folksonomy::TagCount> candidate_tags) const;
};

// Throws InvalidArgument when anchor == candidate.
ScoredCandidate combined_similarity(const ResourceId& anchor, const ResourceId& candidate, const UserId& u,
                                    const Folksonomy& f, const RankingConfig& cfg = {});

// Orders by score descending then candidate id ascending and keeps k.
void rank_top_k(std::vector<ScoredCandidate>& items, std::size_t k);

// Precomputed document scores and tag vectors for one corpus and config.
// Holds a reference to the corpus, which must outlive the context.
//
// The member scoring loops are OpenMP-parallel; tagrec::serial holds the
// single-threaded reference versions. Both produce identical output.
class RankingContext {
 public:
  using Index = Folksonomy::Index;

  RankingContext(const Folksonomy& f, RankingConfig cfg);

  const Folksonomy& corpus() const noexcept { return *corpus_; }
  const RankingConfig& config() const noexcept { return cfg_; }
  double document_score(Index r) const { return ds_[r]; }
  const TagVector& vector(Index r) const { return vectors_[r]; }

  UserBoost user_boost(const UserId& u) const;

  // Best anchor for one candidate; anchors are visited in index order and
  // only a strictly larger score replaces the current best.
  ScoredCandidate best_over_anchors(Index candidate, std::span<const Index> anchors,
                                    const UserBoost& boost) const;

  // One entry per candidate the user does not own, in candidate index order.
  std::vector<ScoredCandidate> score_candidates(const UserId& u) const;

  RecommendationList recommend(const UserId& u, std::size_t k) const;

  // One list per corpus user, in user index order.
  std::vector<RecommendationList> recommend_all(std::size_t k) const;

 private:
  const Folksonomy* corpus_;
  RankingConfig cfg_;
  std::vector<double> ds_;
  std::vector<TagVector> vectors_;
  std::vector<double> norms_;
};

// Throws InvalidArgument if k == 0; a user without bookmarks gets an empty list.
RecommendationList recommend(const UserId& u, const Folksonomy& f, std::size_t k = 5,
                             const RankingConfig& cfg = {});

namespace serial {

std::vector<ScoredCandidate> score_candidates(const RankingContext& ctx, const UserId& u);
RecommendationList recommend(const RankingContext& ctx, const UserId& u, std::size_t k);
std::vector<RecommendationList> recommend_all(const RankingContext& ctx, std::size_t k);

}  // namespace serial

}  // namespace tagrec
