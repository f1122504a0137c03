#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "tagrec/types.hpp"

namespace tagrec {

// Immutable, indexed corpus of tag assignments.
//
// Users, resources and tags are interned into dense indices assigned in
// lexicographic order, so index order is identifier order everywhere. The
// tag index doubles as the vector dimension.
class Folksonomy {
 public:
  using Index = std::uint32_t;

  struct TagCount {
    Index tag;
    std::uint32_t count;
    friend bool operator==(const TagCount&, const TagCount&) = default;
  };

  Folksonomy() = default;

  // Rejects assignments with an empty (or whitespace-only) field and throws
  // InvalidAssignment naming the zero-based position. Duplicate triples collapse.
  static Folksonomy build(std::span<const TagAssignment> assignments);

  std::size_t user_count() const noexcept { return users_.size(); }
  std::size_t resource_count() const noexcept { return resources_.size(); }
  std::size_t tag_count() const noexcept { return vocabulary_.size(); }
  std::size_t assignment_count() const noexcept { return assignments_.size(); }
  bool empty() const noexcept { return assignments_.empty(); }

  // Deduplicated assignments in CanonicalOrder.
  std::span<const TagAssignment> assignments() const noexcept { return assignments_; }
  std::span<const Tag> vocabulary() const noexcept { return vocabulary_; }
  std::span<const ResourceId> resources() const noexcept { return resources_; }
  std::span<const UserId> users() const noexcept { return users_; }

  std::optional<Index> find_tag(const Tag& t) const;
  std::optional<Index> find_resource(const ResourceId& r) const;
  std::optional<Index> find_user(const UserId& u) const;

  // Tag -> number of users who assigned it to the resource, sorted by tag index.
  std::span<const TagCount> tags_of_resource(Index r) const { return resource_tags_[r]; }
  // Total assignments on the resource (sum of tags_of_resource counts).
  std::uint32_t resource_assignment_total(Index r) const { return resource_totals_[r]; }
  // Sorted resource indices carrying the tag.
  std::span<const Index> resources_of_tag(Index t) const { return tag_resources_[t]; }
  // Tag -> number of distinct resources the user tagged with it, sorted by tag index.
  std::span<const TagCount> tags_of_user(Index u) const { return user_tags_[u]; }
  // Sorted resource indices the user bookmarked.
  std::span<const Index> resources_of_user(Index u) const { return user_resources_[u]; }

  friend bool operator==(const Folksonomy&, const Folksonomy&) = default;

 private:
  std::vector<TagAssignment> assignments_;
  std::vector<Tag> vocabulary_;
  std::vector<ResourceId> resources_;
  std::vector<UserId> users_;

  std::vector<std::vector<TagCount>> resource_tags_;
  std::vector<std::uint32_t> resource_totals_;
  std::vector<std::vector<Index>> tag_resources_;
  std::vector<std::vector<TagCount>> user_tags_;
  std::vector<std::vector<Index>> user_resources_;
};

inline Folksonomy build_folksonomy(std::span<const TagAssignment> assignments) {
  return Folksonomy::build(assignments);
}

// Per-tag assignment counts for a resource; empty for an unknown resource.
std::map<Tag, std::size_t> tags_of(const ResourceId& resource, const Folksonomy& f);

// Distinct resources the user tagged with t.
std::size_t user_tag_document_count(const UserId& u, const Tag& t, const Folksonomy& f);

}  // namespace tagrec
