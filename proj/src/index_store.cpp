#include "tagrec/index_store.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "tagrec/error.hpp"

namespace tagrec {

using json = nlohmann::json;

CorpusStats corpus_stats(const Folksonomy& f) {
  return {f.user_count(), f.resource_count(), f.tag_count(), f.assignment_count()};
}

std::string_view to_string(ReprMode m) { return m == ReprMode::raw ? "raw" : "tf"; }
std::string_view to_string(VectorMode m) { return m == VectorMode::count ? "count" : "binary"; }

ReprMode parse_repr_mode(std::string_view s) {
  if (s == "raw") return ReprMode::raw;
  if (s == "tf") return ReprMode::tf;
  throw InvalidArgument("unknown representativeness mode '" + std::string(s) + "'");
}

VectorMode parse_vector_mode(std::string_view s) {
  if (s == "count") return VectorMode::count;
  if (s == "binary") return VectorMode::binary;
  throw InvalidArgument("unknown vector mode '" + std::string(s) + "'");
}

std::string serialize_index(const Folksonomy& f, const RankingConfig& cfg) {
  json j;
  j["schema_version"] = kIndexSchemaVersion;
  j["config"] = {{"repr_mode", to_string(cfg.repr_mode)},
                 {"vector_mode", to_string(cfg.vector_mode)},
                 {"pref_threshold", cfg.pref_threshold},
                 {"symmetric", cfg.symmetric}};
  const auto st = corpus_stats(f);
  j["stats"] = {{"users", st.users}, {"resources", st.resources}, {"tags", st.tags}, {"assignments", st.assignments}};
  auto& rows = j["assignments"] = json::array();
  for (const auto& a : f.assignments()) rows.push_back({a.user.value(), a.resource.value(), a.tag.value()});
  return j.dump(1) + "\n";
}

IndexFile parse_index(std::string_view text) {
  try {
    const auto j = json::parse(text);
    IndexFile idx;
    idx.schema_version = j.at("schema_version").get<int>();
    if (idx.schema_version != kIndexSchemaVersion) {
      throw SchemaError("index schema version " + std::to_string(idx.schema_version) + " is not supported (expected " +
                        std::to_string(kIndexSchemaVersion) + ")");
    }
    const auto& c = j.at("config");
    idx.config.repr_mode = parse_repr_mode(c.at("repr_mode").get<std::string>());
    idx.config.vector_mode = parse_vector_mode(c.at("vector_mode").get<std::string>());
    idx.config.pref_threshold = c.at("pref_threshold").get<double>();
    idx.config.symmetric = c.at("symmetric").get<bool>();
    validate_preference_threshold(idx.config.pref_threshold);

    std::vector<TagAssignment> rows;
    for (const auto& row : j.at("assignments")) {
      if (!row.is_array() || row.size() != 3) throw SchemaError("assignment row is not [user, resource, tag]");
      rows.push_back({UserId(row[0].get<std::string>()), Tag(row[2].get<std::string>()),
                      ResourceId(row[1].get<std::string>())});
    }
    idx.corpus = Folksonomy::build(rows);
    idx.stats = corpus_stats(idx.corpus);

    const auto& s = j.at("stats");
    const CorpusStats stored{s.at("users").get<std::size_t>(), s.at("resources").get<std::size_t>(),
                             s.at("tags").get<std::size_t>(), s.at("assignments").get<std::size_t>()};
    if (stored != idx.stats) throw SchemaError("stored corpus stats disagree with the assignments");
    return idx;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("corrupt index: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw SchemaError(std::string("corrupt index: ") + e.what());
  } catch (const InvalidAssignment& e) {
    throw SchemaError(std::string("corrupt index: ") + e.what());
  }
}

void save_index(const std::filesystem::path& path, const Folksonomy& f, const RankingConfig& cfg) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write index '" + path.string() + "'");
  out << serialize_index(f, cfg);
  if (!out) throw IoError("write failure on index '" + path.string() + "'");
}

IndexFile load_index(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open index '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failure on index '" + path.string() + "'");
  return parse_index(buf.str());
}

}  // namespace tagrec
