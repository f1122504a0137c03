#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tagrec/types.hpp"

namespace tagrec {

enum class CorpusFormat { jsonl, tsv };

// Trims, applies Unicode simple case folding and replaces each internal run of
// whitespace with a single '-'. Returns nullopt when nothing is left.
// Spelling variants ("web2.0" vs "web_20") are left distinct.
std::optional<Tag> normalize_tag(std::string_view raw);

struct BookmarkRecord {
  std::string user;
  std::string uri;
  std::vector<std::string> tags;
  std::optional<std::string> timestamp;  // accepted, unused
};

struct IngestReport {
  struct Malformed {
    std::size_t line;
    std::string reason;
  };
  struct RejectedTag {
    std::size_t line;
    std::string raw;
  };

  std::size_t lines_read = 0;
  std::size_t records_accepted = 0;
  std::size_t raw_tags = 0;  // total raw tags over accepted records
  std::size_t assignments_emitted = 0;
  std::vector<Malformed> malformed;
  std::vector<RejectedTag> rejected_tags;

  std::string to_json() const;
};

struct IngestResult {
  std::vector<TagAssignment> assignments;
  IngestReport report;
};

// Parses one line; throws DataError describing the defect. Blank lines are
// the caller's business.
BookmarkRecord parse_jsonl_record(std::string_view line);
BookmarkRecord parse_tsv_record(std::string_view line);

// Malformed records are skipped and reported; only I/O failure is fatal.
IngestResult load_corpus(std::istream& in, CorpusFormat format);
IngestResult load_corpus(const std::filesystem::path& path, CorpusFormat format);

CorpusFormat parse_corpus_format(std::string_view name);

}  // namespace tagrec
