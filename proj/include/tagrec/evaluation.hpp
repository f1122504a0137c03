#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tagrec {

inline constexpr int kDefaultSetSize = 5;

// Accepted-recommendation counts, one per participant.
struct EvaluationSample {
  std::vector<int> accepted_counts;
  int set_size = kDefaultSetSize;
};

enum class Verdict { excellent, satisfactory, needs_review };

std::string_view to_string(Verdict v);

struct EvaluationReport {
  std::size_t n = 0;
  int set_size = kDefaultSetSize;
  long total_accepted = 0;
  double mean = 0.0;
  double sample_std_dev = 0.0;  // n - 1 denominator; 0 when n == 1
  double standard_error = 0.0;  // sample_std_dev / sqrt(n)
  double acceptance_rate = 0.0;
  std::map<int, std::size_t> histogram;  // every value 0..set_size present
  std::size_t above_threshold = 0;       // participants with count > mean
  double above_threshold_fraction = 0.0;
  Verdict verdict = Verdict::needs_review;
};

// Acceptance rate >= 0.8 is excellent, >= 0.5 satisfactory, otherwise
// needs-review. Compared in integer arithmetic so the boundaries are exact.
Verdict verdict_for(long total_accepted, std::size_t n, int set_size);

// Throws DataError on an empty sample or a count outside [0, set_size]
// (the message names the zero-based participant index).
EvaluationReport compute_report(const EvaluationSample& sample);

// One integer per line, or "participant_id,count" (an optional header whose
// count column reads "count" is allowed). Blank lines and lines starting
// with '#' are skipped. Throws DataError naming the line number on
// a non-integer or out-of-range value, IoError if the file cannot be read.
EvaluationSample load_acceptances(std::istream& in, int set_size = kDefaultSetSize);
EvaluationSample load_acceptances(const std::filesystem::path& path, int set_size = kDefaultSetSize);

}  // namespace tagrec
