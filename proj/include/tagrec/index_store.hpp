#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "tagrec/folksonomy.hpp"
#include "tagrec/ranking.hpp"

namespace tagrec {

inline constexpr int kIndexSchemaVersion = 1;

struct CorpusStats {
  std::size_t users = 0;
  std::size_t resources = 0;
  std::size_t tags = 0;
  std::size_t assignments = 0;
  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

CorpusStats corpus_stats(const Folksonomy& f);

// A persisted corpus plus the ranking configuration it was built with.
// Assignments are stored as [user, resource, tag] arrays in canonical order.
struct IndexFile {
  int schema_version = kIndexSchemaVersion;
  RankingConfig config;
  Folksonomy corpus;
  CorpusStats stats;
};

std::string serialize_index(const Folksonomy& f, const RankingConfig& cfg);

// Throws SchemaError on malformed JSON, a version mismatch, or stats that
// disagree with the rebuilt corpus.
IndexFile parse_index(std::string_view text);

void save_index(const std::filesystem::path& path, const Folksonomy& f, const RankingConfig& cfg);
IndexFile load_index(const std::filesystem::path& path);

std::string_view to_string(ReprMode m);
std::string_view to_string(VectorMode m);
ReprMode parse_repr_mode(std::string_view s);
VectorMode parse_vector_mode(std::string_view s);

}  // namespace tagrec
