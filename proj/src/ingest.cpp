#include "tagrec/ingest.hpp"

#include <fstream>

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include "json.hpp"
#include "tagrec/error.hpp"

namespace tagrec {

namespace {

using json = nlohmann::json;

void append_utf8(std::string& out, UChar32 c) {
  char buf[U8_MAX_LENGTH];
  int32_t len = 0;
  UBool error = false;
  U8_APPEND(buf, len, U8_MAX_LENGTH, c, error);
  if (!error) out.append(buf, static_cast<std::size_t>(len));
}

std::string trim_ascii(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\v\f");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\v\f");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw DataError(what);
}

BookmarkRecord finish(BookmarkRecord rec) {
  rec.user = trim_ascii(rec.user);
  rec.uri = trim_ascii(rec.uri);
  require(!rec.user.empty(), "empty user");
  require(!rec.uri.empty(), "empty uri");
  require(!rec.tags.empty(), "empty tag list");
  return rec;
}

}  // namespace

std::optional<Tag> normalize_tag(std::string_view raw) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(raw.data());
  const auto length = static_cast<int32_t>(raw.size());

  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c = 0;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) {
      // Ill-formed UTF-8 passes through byte for byte.
      if (pending_space && !out.empty()) out.push_back('-');
      pending_space = false;
      out.append(raw.data() + start, static_cast<std::size_t>(i - start));
      continue;
    }
    if (u_isUWhiteSpace(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out.push_back('-');
    pending_space = false;
    append_utf8(out, u_foldCase(c, U_FOLD_CASE_DEFAULT));
  }
  if (out.empty()) return std::nullopt;
  return Tag(std::move(out));
}

BookmarkRecord parse_jsonl_record(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("invalid JSON: ") + e.what());
  }
  require(j.is_object(), "record is not a JSON object");
  require(j.contains("user") && j["user"].is_string(), "missing string field 'user'");
  require(j.contains("uri") && j["uri"].is_string(), "missing string field 'uri'");
  require(j.contains("tags") && j["tags"].is_array(), "missing array field 'tags'");

  BookmarkRecord rec;
  rec.user = j["user"].get<std::string>();
  rec.uri = j["uri"].get<std::string>();
  for (const auto& t : j["tags"]) {
    require(t.is_string(), "non-string tag");
    rec.tags.push_back(t.get<std::string>());
  }
  if (auto it = j.find("timestamp"); it != j.end() && !it->is_null()) {
    require(it->is_string(), "timestamp is not a string");
    rec.timestamp = it->get<std::string>();
  }
  return finish(std::move(rec));
}

BookmarkRecord parse_tsv_record(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  const auto fields = split(line, '\t');
  require(fields.size() == 3 || fields.size() == 4, "expected 3 or 4 tab-separated fields");

  BookmarkRecord rec;
  rec.user = std::string(fields[0]);
  rec.uri = std::string(fields[1]);
  if (!trim_ascii(fields[2]).empty()) {
    for (auto t : split(fields[2], ',')) rec.tags.emplace_back(t);
  }
  if (fields.size() == 4 && !fields[3].empty()) rec.timestamp = std::string(fields[3]);
  return finish(std::move(rec));
}

IngestResult load_corpus(std::istream& in, CorpusFormat format) {
  IngestResult result;
  auto& report = result.report;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim_ascii(line).empty()) continue;
    ++report.lines_read;

    BookmarkRecord rec;
    try {
      rec = format == CorpusFormat::jsonl ? parse_jsonl_record(line) : parse_tsv_record(line);
    } catch (const DataError& e) {
      report.malformed.push_back({lineno, e.what()});
      continue;
    }

    ++report.records_accepted;
    report.raw_tags += rec.tags.size();
    for (const auto& raw : rec.tags) {
      auto tag = normalize_tag(raw);
      if (!tag) {
        report.rejected_tags.push_back({lineno, raw});
        continue;
      }
      result.assignments.push_back({UserId(rec.user), std::move(*tag), ResourceId(rec.uri)});
    }
  }
  if (in.bad()) throw IoError("read failure after line " + std::to_string(lineno));
  report.assignments_emitted = result.assignments.size();
  return result;
}

IngestResult load_corpus(const std::filesystem::path& path, CorpusFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file '" + path.string() + "'");
  return load_corpus(in, format);
}

CorpusFormat parse_corpus_format(std::string_view name) {
  if (name == "jsonl") return CorpusFormat::jsonl;
  if (name == "tsv") return CorpusFormat::tsv;
  throw InvalidArgument("unknown corpus format '" + std::string(name) + "'");
}

std::string IngestReport::to_json() const {
  json j;
  j["lines_read"] = lines_read;
  j["records_accepted"] = records_accepted;
  j["raw_tags"] = raw_tags;
  j["assignments_emitted"] = assignments_emitted;
  j["malformed"] = json::array();
  for (const auto& m : malformed) j["malformed"].push_back({{"line", m.line}, {"reason", m.reason}});
  j["rejected_tags"] = json::array();
  for (const auto& r : rejected_tags) j["rejected_tags"].push_back({{"line", r.line}, {"raw", r.raw}});
  return j.dump(2, ' ', false, json::error_handler_t::replace);
}

}  // namespace tagrec
