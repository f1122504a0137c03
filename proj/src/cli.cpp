#include "tagrec/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tagrec/error.hpp"
#include "tagrec/evaluation.hpp"
#include "tagrec/index_store.hpp"
#include "tagrec/ingest.hpp"
#include "tagrec/metrics.hpp"
#include "tagrec/ranking.hpp"

namespace tagrec::cli {

namespace {

using json = nlohmann::json;

enum class OutputFormat { json, tsv, table };

const std::map<std::string, OutputFormat> kOutputNames{
    {"json", OutputFormat::json}, {"tsv", OutputFormat::tsv}, {"table", OutputFormat::table}};

std::string fixed4(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << v;
  return os.str();
}

// Shortest representation that round-trips.
std::string exact(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void print_json(std::ostream& out, const json& j) {
  out << j.dump(2, ' ', false, json::error_handler_t::replace) << '\n';
}

// Left-aligned columns separated by two spaces.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

void print_tsv(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
    out << '\n';
  }
}

// Flags shared by ingest and recommend. Values only override the base config
// when actually given on the command line.
struct ConfigFlags {
  std::string repr_mode;
  std::string vector_mode;
  double pref_threshold = kDefaultPreferenceThreshold;
  bool symmetric = false;
  CLI::Option* repr_opt = nullptr;
  CLI::Option* vector_opt = nullptr;
  CLI::Option* threshold_opt = nullptr;
  CLI::Option* symmetric_opt = nullptr;

  void attach(CLI::App* app) {
    repr_opt = app->add_option("--repr-mode", repr_mode, "Tag representativeness: raw or tf")
                   ->check(CLI::IsMember({"raw", "tf"}));
    vector_opt = app->add_option("--vector-mode", vector_mode, "Tag vector weights: count or binary")
                     ->check(CLI::IsMember({"count", "binary"}));
    threshold_opt = app->add_option("--pref-threshold", pref_threshold, "Preference-set ratio in (0, 1]");
    symmetric_opt = app->add_flag("--symmetric", symmetric, "Use (Ds_a + Ds_c) * cosine");
  }

  RankingConfig apply(RankingConfig base) const {
    if (repr_opt->count()) base.repr_mode = parse_repr_mode(repr_mode);
    if (vector_opt->count()) base.vector_mode = parse_vector_mode(vector_mode);
    if (threshold_opt->count()) base.pref_threshold = pref_threshold;
    if (symmetric_opt->count()) base.symmetric = symmetric;
    validate_preference_threshold(base.pref_threshold);
    return base;
  }
};

json config_json(const RankingConfig& cfg) {
  return {{"repr_mode", to_string(cfg.repr_mode)},
          {"vector_mode", to_string(cfg.vector_mode)},
          {"pref_threshold", cfg.pref_threshold},
          {"symmetric", cfg.symmetric}};
}

struct IngestArgs {
  std::string input;
  std::string format = "jsonl";
  std::string index;
  std::string report;
  OutputFormat output = OutputFormat::table;
  ConfigFlags config;
};

int cmd_ingest(const IngestArgs& a, std::ostream& out, std::ostream& err) {
  const auto cfg = a.config.apply({});
  const auto result = load_corpus(a.input, parse_corpus_format(a.format));
  const auto corpus = Folksonomy::build(result.assignments);
  save_index(a.index, corpus, cfg);

  const auto report_json = result.report.to_json();
  if (!a.report.empty()) {
    std::ofstream rep(a.report);
    if (!rep) throw IoError("cannot write report '" + a.report + "'");
    rep << report_json << '\n';
  } else {
    err << report_json << '\n';
  }
  if (corpus.empty()) err << "warning: corpus is empty; writing an empty index\n";

  const auto& r = result.report;
  const auto st = corpus_stats(corpus);
  if (a.output == OutputFormat::json) {
    print_json(out, {{"records", r.records_accepted},
                     {"malformed", r.malformed.size()},
                     {"assignments", r.assignments_emitted},
                     {"rejected_tags", r.rejected_tags.size()},
                     {"index", a.index},
                     {"corpus", {{"users", st.users}, {"resources", st.resources}, {"tags", st.tags},
                                 {"assignments", st.assignments}}}});
    return kOk;
  }
  std::vector<std::vector<std::string>> rows{
      {"records", std::to_string(r.records_accepted)},
      {"malformed", std::to_string(r.malformed.size())},
      {"assignments", std::to_string(r.assignments_emitted)},
      {"rejected_tags", std::to_string(r.rejected_tags.size())},
      {"users", std::to_string(st.users)},
      {"resources", std::to_string(st.resources)},
      {"tags", std::to_string(st.tags)},
      {"unique_assignments", std::to_string(st.assignments)},
  };
  a.output == OutputFormat::tsv ? print_tsv(out, rows) : print_table(out, rows);
  return kOk;
}

struct RecommendArgs {
  std::string index;
  std::string user;
  std::size_t top_k = 5;
  bool explain = false;
  OutputFormat output = OutputFormat::table;
  ConfigFlags config;
};

int cmd_recommend(const RecommendArgs& a, std::ostream& out, std::ostream& err) {
  const auto idx = load_index(a.index);
  const auto cfg = a.config.apply(idx.config);
  const UserId user(a.user);

  RecommendationList list{user, a.top_k, {}};
  const auto ui = idx.corpus.find_user(user);
  if (!ui || idx.corpus.resources_of_user(*ui).empty()) {
    err << "warning: user '" << a.user << "' has no bookmarks in the index\n";
  } else {
    list = RankingContext(idx.corpus, cfg).recommend(user, a.top_k);
  }

  if (a.output == OutputFormat::json) {
    json items = json::array();
    for (std::size_t i = 0; i < list.items.size(); ++i) {
      const auto& it = list.items[i];
      json item{{"rank", i + 1}, {"candidate", it.candidate.value()}, {"anchor", it.anchor.value()},
                {"score", it.score}};
      if (a.explain) {
        const auto& x = it.factors;
        item["factors"] = {{"ds_anchor", x.ds_anchor},
                           {"ds_candidate", x.ds_candidate},
                           {"cosine", x.cosine},
                           {"boost_tag", x.boost_tag ? json(x.boost_tag->value()) : json(nullptr)},
                           {"boost", x.boost}};
      }
      items.push_back(std::move(item));
    }
    print_json(out, {{"user", a.user}, {"k", a.top_k}, {"config", config_json(cfg)}, {"items", items}});
    return kOk;
  }

  const bool tsv = a.output == OutputFormat::tsv;
  auto num = [tsv](double v) { return tsv ? exact(v) : fixed4(v); };
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"rank", "candidate", "score", "anchor"};
  if (a.explain) header.insert(header.end(), {"ds_anchor", "ds_candidate", "cosine", "boost_tag", "boost"});
  rows.push_back(header);
  for (std::size_t i = 0; i < list.items.size(); ++i) {
    const auto& it = list.items[i];
    std::vector<std::string> row{std::to_string(i + 1), it.candidate.value(), num(it.score), it.anchor.value()};
    if (a.explain) {
      const auto& x = it.factors;
      row.insert(row.end(), {num(x.ds_anchor), num(x.ds_candidate), num(x.cosine),
                             x.boost_tag ? x.boost_tag->value() : "-", num(x.boost)});
    }
    rows.push_back(std::move(row));
  }
  tsv ? print_tsv(out, rows) : print_table(out, rows);
  return kOk;
}

struct StatsArgs {
  std::string index;
  OutputFormat output = OutputFormat::table;
};

int cmd_stats(const StatsArgs& a, std::ostream& out) {
  const auto idx = load_index(a.index);
  const auto& f = idx.corpus;
  const auto st = corpus_stats(f);

  struct TagPop {
    Folksonomy::Index tag;
    double popularity;
  };
  std::vector<TagPop> pops;
  std::array<std::size_t, 10> buckets{};
  for (Folksonomy::Index t = 0; t < f.tag_count(); ++t) {
    pops.push_back({t, popularity(t, f)});
    const auto carriers = f.resources_of_tag(t).size();
    ++buckets[std::min<std::size_t>(9, 10 * carriers / f.resource_count())];
  }
  std::stable_sort(pops.begin(), pops.end(),
                   [](const TagPop& x, const TagPop& y) { return x.popularity > y.popularity; });
  if (pops.size() > 10) pops.resize(10);

  auto bucket_label = [](std::size_t b) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(1) << '[' << b / 10.0 << ',' << (b + 1) / 10.0 << (b == 9 ? ']' : ')');
    return os.str();
  };

  if (a.output == OutputFormat::json) {
    json j{{"users", st.users}, {"resources", st.resources}, {"tags", st.tags}, {"assignments", st.assignments}};
    if (!pops.empty()) {
      auto& top = j["top_tags"] = json::array();
      for (const auto& p : pops) top.push_back({{"tag", f.vocabulary()[p.tag].value()}, {"popularity", p.popularity}});
    }
    auto& hist = j["popularity_histogram"] = json::array();
    for (std::size_t b = 0; b < buckets.size(); ++b) hist.push_back({{"bucket", bucket_label(b)}, {"tags", buckets[b]}});
    print_json(out, j);
    return kOk;
  }

  const bool tsv = a.output == OutputFormat::tsv;
  auto emit = [&](const std::vector<std::vector<std::string>>& rows) {
    tsv ? print_tsv(out, rows) : print_table(out, rows);
  };
  emit({{"users", std::to_string(st.users)},
        {"resources", std::to_string(st.resources)},
        {"tags", std::to_string(st.tags)},
        {"assignments", std::to_string(st.assignments)}});
  if (!pops.empty()) {
    out << "\ntop tags\n";
    std::vector<std::vector<std::string>> rows{{"tag", "popularity"}};
    for (const auto& p : pops) rows.push_back({f.vocabulary()[p.tag].value(), tsv ? exact(p.popularity) : fixed4(p.popularity)});
    emit(rows);
  }
  out << "\npopularity histogram\n";
  std::vector<std::vector<std::string>> rows{{"bucket", "tags"}};
  for (std::size_t b = 0; b < buckets.size(); ++b) rows.push_back({bucket_label(b), std::to_string(buckets[b])});
  emit(rows);
  return kOk;
}

struct EvaluateArgs {
  std::string input;
  int set_size = kDefaultSetSize;
  OutputFormat output = OutputFormat::table;
};

int cmd_evaluate(const EvaluateArgs& a, std::ostream& out) {
  const auto rep = compute_report(load_acceptances(a.input, a.set_size));

  if (a.output == OutputFormat::json) {
    json hist = json::object();
    for (auto [value, count] : rep.histogram) hist[std::to_string(value)] = count;
    print_json(out, {{"n", rep.n},
                     {"set_size", rep.set_size},
                     {"total_accepted", rep.total_accepted},
                     {"mean", rep.mean},
                     {"sample_std_dev", rep.sample_std_dev},
                     {"standard_error", rep.standard_error},
                     {"acceptance_rate", rep.acceptance_rate},
                     {"histogram", hist},
                     {"above_threshold", rep.above_threshold},
                     {"above_threshold_fraction", rep.above_threshold_fraction},
                     {"verdict", to_string(rep.verdict)}});
    return kOk;
  }

  const bool tsv = a.output == OutputFormat::tsv;
  auto num = [tsv](double v) { return tsv ? exact(v) : fixed4(v); };
  std::vector<std::vector<std::string>> rows{
      {"participants", std::to_string(rep.n)},
      {"set_size", std::to_string(rep.set_size)},
      {"total_accepted", std::to_string(rep.total_accepted)},
      {"mean", num(rep.mean)},
      {"sample_std_dev", num(rep.sample_std_dev)},
      {"standard_error", num(rep.standard_error)},
      {"acceptance_rate", num(rep.acceptance_rate)},
      {"above_threshold", std::to_string(rep.above_threshold)},
      {"above_threshold_fraction", num(rep.above_threshold_fraction)},
      {"verdict", std::string(to_string(rep.verdict))},
  };
  std::vector<std::vector<std::string>> hist{{"accepted", "participants"}};
  for (auto [value, count] : rep.histogram) hist.push_back({std::to_string(value), std::to_string(count)});
  if (tsv) {
    print_tsv(out, rows);
    for (std::size_t i = 1; i < hist.size(); ++i) out << "histogram\t" << hist[i][0] << '\t' << hist[i][1] << '\n';
  } else {
    print_table(out, rows);
    out << '\n';
    print_table(out, hist);
  }
  return kOk;
}

void add_output_option(CLI::App* app, OutputFormat& target) {
  app->add_option("--output", target, "Output format: json, tsv or table")
      ->transform(CLI::CheckedTransformer(kOutputNames, CLI::ignore_case));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tag-based resource recommender", "tagrec"};
  app.require_subcommand(1);

  IngestArgs ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Parse a bookmark corpus and write an index");
  ingest_cmd->add_option("input", ingest.input, "Corpus file (JSONL or TSV)")->required();
  ingest_cmd->add_option("--format", ingest.format, "Input format: jsonl or tsv")
      ->check(CLI::IsMember({"jsonl", "tsv"}));
  ingest_cmd->add_option("--index", ingest.index, "Index file to write")->required();
  ingest_cmd->add_option("--report", ingest.report, "Write the ingest report here instead of stderr");
  add_output_option(ingest_cmd, ingest.output);
  ingest.config.attach(ingest_cmd);

  RecommendArgs rec;
  auto* rec_cmd = app.add_subcommand("recommend", "Top-k recommendations for one user");
  rec_cmd->add_option("--index", rec.index, "Index file")->required();
  rec_cmd->add_option("--user", rec.user, "User id")->required();
  rec_cmd->add_option("--top-k", rec.top_k, "Number of recommendations")->check(CLI::PositiveNumber);
  rec_cmd->add_flag("--explain", rec.explain, "Print the factor breakdown per item");
  add_output_option(rec_cmd, rec.output);
  rec.config.attach(rec_cmd);

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Corpus statistics");
  stats_cmd->add_option("--index", stats.index, "Index file")->required();
  add_output_option(stats_cmd, stats.output);

  EvaluateArgs eval;
  auto* eval_cmd = app.add_subcommand("evaluate", "Statistics over per-participant acceptance counts");
  eval_cmd->add_option("input", eval.input, "Acceptance file")->required();
  eval_cmd->add_option("--set-size", eval.set_size, "Items recommended per participant")
      ->check(CLI::PositiveNumber);
  add_output_option(eval_cmd, eval.output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*ingest_cmd) return cmd_ingest(ingest, out, err);
    if (*rec_cmd) return cmd_recommend(rec, out, err);
    if (*stats_cmd) return cmd_stats(stats, out);
    if (*eval_cmd) return cmd_evaluate(eval, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  }
  return kUsage;
}

}  // namespace tagrec::cli
