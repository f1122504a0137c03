#pragma once

#include <cstddef>
#include <map>
#include <set>

#include "tagrec/folksonomy.hpp"

namespace tagrec {

inline constexpr double kDefaultPreferenceThreshold = 0.7;

// raw: number of users who assigned the tag to the resource.
// tf:  raw divided by all assignments on the resource.
enum class ReprMode { raw, tf };

struct DocumentScore {
  ResourceId resource;
  double score = 0.0;
};

struct UserProfile {
  UserId user;
  std::map<Tag, std::size_t> tag_counts;  // distinct resources per tag
  std::size_t distinct_tag_count = 0;
  std::set<Tag> preference_set;
};

// Fraction of resources carrying the tag. Throws EmptyCorpusError on an empty corpus.
double popularity(const Tag& t, const Folksonomy& f);
double popularity(Folksonomy::Index t, const Folksonomy& f);

double representativeness(const Tag& t, const ResourceId& r, const Folksonomy& f,
                          ReprMode mode = ReprMode::raw);

// (sum of tag popularities) * (sum of tag representativeness) over the
// resource's tags. Tags absent from the resource contribute zero to both
// sums, so summing over the whole vocabulary gives the same value.
DocumentScore document_score(const ResourceId& r, const Folksonomy& f, ReprMode mode = ReprMode::raw);
double document_score(Folksonomy::Index r, const Folksonomy& f, ReprMode mode);

// Distinct resources u tagged with t over distinct tags used by u.
// Throws NoAffinityError if u has no assignments.
double affinity(const UserId& u, const Tag& t, const Folksonomy& f);

// Tags whose usage count reaches threshold * (the user's maximum count).
// Throws InvalidArgument unless 0 < threshold <= 1.
std::set<Tag> preference_set(const UserId& u, const Folksonomy& f,
                             double threshold = kDefaultPreferenceThreshold);
std::set<Tag> preference_set(const std::map<Tag, std::size_t>& tag_counts,
                             double threshold = kDefaultPreferenceThreshold);

// Shared comparison used by every preference-set computation. A relative
// slack of 1e-9 keeps products such as 0.3 * 10 from excluding count 3.
bool meets_preference_threshold(std::size_t count, std::size_t max_count, double threshold);
void validate_preference_threshold(double threshold);

UserProfile user_profile(const UserId& u, const Folksonomy& f,
                         double threshold = kDefaultPreferenceThreshold);

}  // namespace tagrec
