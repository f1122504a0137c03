#pragma once

#include <vector>

#include "tagrec/ranking.hpp"

namespace tagrec::detail {

double dot(const TagVector& a, const TagVector& b);
double cosine_with_norms(const TagVector& a, const TagVector& b, double norm_a, double norm_b);
TagVector vector_at(Folksonomy::Index r, const Folksonomy& f, VectorMode mode);

inline std::vector<char> owned_mask(const Folksonomy& f, std::span<const Folksonomy::Index> owned) {
  std::vector<char> mask(f.resource_count(), 0);
  for (auto r : owned) mask[r] = 1;
  return mask;
}

inline std::vector<ScoredCandidate> compact(std::vector<ScoredCandidate> slots, const std::vector<char>& owned) {
  std::vector<ScoredCandidate> out;
  out.reserve(slots.size());
  for (std::size_t c = 0; c < slots.size(); ++c) {
    if (!owned[c]) out.push_back(std::move(slots[c]));
  }
  return out;
}

}  // namespace tagrec::detail
