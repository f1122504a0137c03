#include "tagrec/evaluation.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "tagrec/error.hpp"

namespace tagrec {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::excellent:
      return "excellent";
    case Verdict::satisfactory:
      return "satisfactory";
    case Verdict::needs_review:
      return "needs-review";
  }
  return "needs-review";
}

Verdict verdict_for(long total_accepted, std::size_t n, int set_size) {
  const long offered = static_cast<long>(n) * set_size;
  if (5 * total_accepted >= 4 * offered) return Verdict::excellent;
  if (2 * total_accepted >= offered) return Verdict::satisfactory;
  return Verdict::needs_review;
}

EvaluationReport compute_report(const EvaluationSample& sample) {
  if (sample.set_size < 1) throw DataError("set size must be at least 1");
  if (sample.accepted_counts.empty()) throw DataError("evaluation sample is empty");

  EvaluationReport rep;
  rep.n = sample.accepted_counts.size();
  rep.set_size = sample.set_size;
  for (int v = 0; v <= sample.set_size; ++v) rep.histogram[v] = 0;
  for (std::size_t i = 0; i < rep.n; ++i) {
    const int c = sample.accepted_counts[i];
    if (c < 0 || c > sample.set_size) {
      throw DataError("participant " + std::to_string(i) + ": count " + std::to_string(c) +
                      " outside [0, " + std::to_string(sample.set_size) + "]");
    }
    rep.total_accepted += c;
    ++rep.histogram[c];
  }

  const double n = static_cast<double>(rep.n);
  rep.mean = static_cast<double>(rep.total_accepted) / n;
  if (rep.n > 1) {
    double ss = 0.0;
    for (int c : sample.accepted_counts) ss += (c - rep.mean) * (c - rep.mean);
    rep.sample_std_dev = std::sqrt(ss / (n - 1.0));
  }
  rep.standard_error = rep.sample_std_dev / std::sqrt(n);
  rep.acceptance_rate = static_cast<double>(rep.total_accepted) / (n * sample.set_size);
  for (int c : sample.accepted_counts) {
    if (c > rep.mean) ++rep.above_threshold;
  }
  rep.above_threshold_fraction = static_cast<double>(rep.above_threshold) / n;
  rep.verdict = verdict_for(rep.total_accepted, rep.n, sample.set_size);
  return rep;
}

EvaluationSample load_acceptances(std::istream& in, int set_size) {
  if (set_size < 1) throw InvalidArgument("set size must be at least 1");
  EvaluationSample sample;
  sample.set_size = set_size;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    if (auto comma = text.rfind(','); comma != std::string_view::npos) {
      text = trim(text.substr(comma + 1));
      if (text == "count" && sample.accepted_counts.empty()) continue;  // CSV header
    }

    int value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
      throw DataError("line " + std::to_string(lineno) + ": not an integer: '" + std::string(text) + "'");
    }
    if (value < 0 || value > set_size) {
      throw DataError("line " + std::to_string(lineno) + ": count " + std::to_string(value) + " outside [0, " +
                      std::to_string(set_size) + "]");
    }
    sample.accepted_counts.push_back(value);
  }
  if (in.bad()) throw IoError("read failure after line " + std::to_string(lineno));
  return sample;
}

EvaluationSample load_acceptances(const std::filesystem::path& path, int set_size) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open acceptance file '" + path.string() + "'");
  return load_acceptances(in, set_size);
}

}  // namespace tagrec
