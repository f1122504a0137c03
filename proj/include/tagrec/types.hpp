#pragma once

#include <compare>
#include <string>
#include <utility>

namespace tagrec {

// Opaque string identifier; ordering is byte-lexicographic, which for UTF-8
// coincides with code point order.
template <class Kind>
class StrongId {
 public:
  StrongId() = default;
  explicit StrongId(std::string value) : value_(std::move(value)) {}

  const std::string& value() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }

  friend auto operator<=>(const StrongId&, const StrongId&) = default;
  friend bool operator==(const StrongId&, const StrongId&) = default;

 private:
  std::string value_;
};

using UserId = StrongId<struct UserIdKind>;
using ResourceId = StrongId<struct ResourceIdKind>;
using Tag = StrongId<struct TagKind>;

// One (user, tag, resource) triple.
struct TagAssignment {
  UserId user;
  Tag tag;
  ResourceId resource;

  friend bool operator==(const TagAssignment&, const TagAssignment&) = default;
};

// Canonical storage order: (user, resource, tag).
struct CanonicalOrder {
  bool operator()(const TagAssignment& a, const TagAssignment& b) const {
    if (a.user != b.user) return a.user < b.user;
    if (a.resource != b.resource) return a.resource < b.resource;
    return a.tag < b.tag;
  }
};

}  // namespace tagrec
