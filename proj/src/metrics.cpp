#include "tagrec/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "tagrec/error.hpp"

namespace tagrec {

double popularity(Folksonomy::Index t, const Folksonomy& f) {
  if (f.resource_count() == 0) throw EmptyCorpusError();
  return static_cast<double>(f.resources_of_tag(t).size()) / static_cast<double>(f.resource_count());
}

double popularity(const Tag& t, const Folksonomy& f) {
  if (f.resource_count() == 0) throw EmptyCorpusError();
  auto ti = f.find_tag(t);
  return ti ? popularity(*ti, f) : 0.0;
}

double representativeness(const Tag& t, const ResourceId& r, const Folksonomy& f, ReprMode mode) {
  auto ri = f.find_resource(r);
  auto ti = f.find_tag(t);
  if (!ri || !ti) return 0.0;
  for (auto tc : f.tags_of_resource(*ri)) {
    if (tc.tag != *ti) continue;
    if (mode == ReprMode::raw) return tc.count;
    return static_cast<double>(tc.count) / static_cast<double>(f.resource_assignment_total(*ri));
  }
  return 0.0;
}

double document_score(Folksonomy::Index r, const Folksonomy& f, ReprMode mode) {
  if (f.resource_count() == 0) throw EmptyCorpusError();
  const double total = f.resource_assignment_total(r);
  double pop_sum = 0.0;
  double repr_sum = 0.0;
  for (auto tc : f.tags_of_resource(r)) {
    pop_sum += popularity(tc.tag, f);
    repr_sum += mode == ReprMode::raw ? static_cast<double>(tc.count) : tc.count / total;
  }
  return pop_sum * repr_sum;
}

DocumentScore document_score(const ResourceId& r, const Folksonomy& f, ReprMode mode) {
  if (f.resource_count() == 0) throw EmptyCorpusError();
  auto ri = f.find_resource(r);
  return {r, ri ? document_score(*ri, f, mode) : 0.0};
}

double affinity(const UserId& u, const Tag& t, const Folksonomy& f) {
  auto ui = f.find_user(u);
  if (!ui || f.tags_of_user(*ui).empty()) throw NoAffinityError(u.value());
  return static_cast<double>(user_tag_document_count(u, t, f)) /
         static_cast<double>(f.tags_of_user(*ui).size());
}

void validate_preference_threshold(double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw InvalidArgument("preference threshold must lie in (0, 1], got " + std::to_string(threshold));
  }
}

bool meets_preference_threshold(std::size_t count, std::size_t max_count, double threshold) {
  const double bar = threshold * static_cast<double>(max_count);
  return static_cast<double>(count) >= bar - 1e-9 * bar;
}

std::set<Tag> preference_set(const std::map<Tag, std::size_t>& tag_counts, double threshold) {
  validate_preference_threshold(threshold);
  std::size_t max_count = 0;
  for (const auto& [tag, c] : tag_counts) max_count = std::max(max_count, c);
  std::set<Tag> out;
  for (const auto& [tag, c] : tag_counts) {
    if (c > 0 && meets_preference_threshold(c, max_count, threshold)) out.insert(tag);
  }
  return out;
}

UserProfile user_profile(const UserId& u, const Folksonomy& f, double threshold) {
  UserProfile p;
  p.user = u;
  if (auto ui = f.find_user(u)) {
    for (auto tc : f.tags_of_user(*ui)) p.tag_counts.emplace(f.vocabulary()[tc.tag], tc.count);
  }
  p.distinct_tag_count = p.tag_counts.size();
  p.preference_set = preference_set(p.tag_counts, threshold);
  return p;
}

std::set<Tag> preference_set(const UserId& u, const Folksonomy& f, double threshold) {
  return user_profile(u, f, threshold).preference_set;
}

}  // namespace tagrec
