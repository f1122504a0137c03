#include "tagrec/folksonomy.hpp"

#include <algorithm>
#include <string_view>

#include "tagrec/error.hpp"

namespace tagrec {

namespace {

bool blank(std::string_view s) {
  return s.find_first_not_of(" \t\r\n\v\f") == std::string_view::npos;
}

template <class T>
std::optional<Folksonomy::Index> find_sorted(const std::vector<T>& sorted, const T& key) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), key);
  if (it == sorted.end() || *it != key) return std::nullopt;
  return static_cast<Folksonomy::Index>(it - sorted.begin());
}

template <class T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Folksonomy Folksonomy::build(std::span<const TagAssignment> assignments) {
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    const auto& a = assignments[i];
    if (blank(a.user.value())) throw InvalidAssignment(i, "empty user");
    if (blank(a.tag.value())) throw InvalidAssignment(i, "empty tag");
    if (blank(a.resource.value())) throw InvalidAssignment(i, "empty resource");
  }

  Folksonomy f;
  f.assignments_.assign(assignments.begin(), assignments.end());
  std::sort(f.assignments_.begin(), f.assignments_.end(), CanonicalOrder{});
  f.assignments_.erase(std::unique(f.assignments_.begin(), f.assignments_.end()),
                       f.assignments_.end());

  std::vector<Tag> tags;
  std::vector<ResourceId> resources;
  std::vector<UserId> users;
  tags.reserve(f.assignments_.size());
  resources.reserve(f.assignments_.size());
  users.reserve(f.assignments_.size());
  for (const auto& a : f.assignments_) {
    tags.push_back(a.tag);
    resources.push_back(a.resource);
    users.push_back(a.user);
  }
  f.vocabulary_ = sorted_unique(std::move(tags));
  f.resources_ = sorted_unique(std::move(resources));
  f.users_ = sorted_unique(std::move(users));

  f.resource_tags_.resize(f.resources_.size());
  f.resource_totals_.assign(f.resources_.size(), 0);
  f.tag_resources_.resize(f.vocabulary_.size());
  f.user_tags_.resize(f.users_.size());
  f.user_resources_.resize(f.users_.size());

  // Dense count matrices would be |R| x |T|; accumulate into sorted maps
  // per row instead and flatten afterwards.
  std::vector<std::map<Index, std::uint32_t>> rt(f.resources_.size());
  std::vector<std::map<Index, std::uint32_t>> ut(f.users_.size());
  for (const auto& a : f.assignments_) {
    const Index t = *find_sorted(f.vocabulary_, a.tag);
    const Index r = *find_sorted(f.resources_, a.resource);
    const Index u = *find_sorted(f.users_, a.user);
    ++rt[r][t];
    ++ut[u][t];  // (u, t, r) unique, so this counts distinct resources
    f.tag_resources_[t].push_back(r);
    f.user_resources_[u].push_back(r);
  }
  for (std::size_t r = 0; r < rt.size(); ++r) {
    for (auto [t, c] : rt[r]) {
      f.resource_tags_[r].push_back({t, c});
      f.resource_totals_[r] += c;
    }
  }
  for (std::size_t u = 0; u < ut.size(); ++u) {
    for (auto [t, c] : ut[u]) f.user_tags_[u].push_back({t, c});
  }
  for (auto& v : f.tag_resources_) v = sorted_unique(std::move(v));
  for (auto& v : f.user_resources_) v = sorted_unique(std::move(v));
  return f;
}

std::optional<Folksonomy::Index> Folksonomy::find_tag(const Tag& t) const {
  return find_sorted(vocabulary_, t);
}

std::optional<Folksonomy::Index> Folksonomy::find_resource(const ResourceId& r) const {
  return find_sorted(resources_, r);
}

std::optional<Folksonomy::Index> Folksonomy::find_user(const UserId& u) const {
  return find_sorted(users_, u);
}

std::map<Tag, std::size_t> tags_of(const ResourceId& resource, const Folksonomy& f) {
  std::map<Tag, std::size_t> out;
  if (auto r = f.find_resource(resource)) {
    for (auto tc : f.tags_of_resource(*r)) out.emplace(f.vocabulary()[tc.tag], tc.count);
  }
  return out;
}

std::size_t user_tag_document_count(const UserId& u, const Tag& t, const Folksonomy& f) {
  auto ui = f.find_user(u);
  auto ti = f.find_tag(t);
  if (!ui || !ti) return 0;
  auto row = f.tags_of_user(*ui);
  auto it = std::lower_bound(row.begin(), row.end(), *ti,
                             [](const Folksonomy::TagCount& tc, Folksonomy::Index x) { return tc.tag < x; });
  return (it != row.end() && it->tag == *ti) ? it->count : 0;
}

}  // namespace tagrec
