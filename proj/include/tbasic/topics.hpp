#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tbasic/corpus.hpp"
#include "tbasic/time.hpp"

namespace tbasic {

// A minimal set of co-occurring terms over a time window; a related tweet
// must contain every keyword.
struct Topic {
  std::string id;
  std::vector<std::string> keywords;  // lowercased, non-empty, ordered as declared
  Period window;
};

struct TermScore {
  std::string term;
  double score = 0;
  double min = 0;
  double max = 0;
  double avg = 0;
  std::int64_t total = 0;
};

// Interestingness of an occurrence-count vector:
//   (avg^2 + min * max) / (min * avg)
// The score rewards a high max/avg peak over a low min/avg floor and is
// exactly 2 for a constant vector. Non-recurrent terms (min = 0) have no
// score and are reported as nullopt.
template <typename Derived>
std::optional<double> score_term(const Eigen::DenseBase<Derived>& counts) {
  if (counts.size() == 0) throw std::invalid_argument("score_term: empty count vector");
  using Scalar = typename Derived::Scalar;
  const Scalar lo = counts.minCoeff();
  if (lo <= Scalar(0)) return std::nullopt;
  const double mn = static_cast<double>(lo);
  const double mx = static_cast<double>(counts.maxCoeff());
  const double avg = static_cast<double>(counts.sum()) / static_cast<double>(counts.size());
  return (avg * avg + mn * mx) / (mn * avg);
}

// All recurrent terms with at least min_total_count occurrences, descending
// by score, ties broken lexicographically; at most top_k entries.
std::vector<TermScore> rank_terms(const std::vector<TweetRecord>& tweets, const Period& period,
                                  std::size_t top_k, std::int64_t min_total_count,
                                  int bin_hours = 4);

bool match_tweet(const Topic& topic, const TweetRecord& tweet);

// Terms most frequently sharing a tweet with `term` inside the period.
std::vector<std::pair<std::string, std::int64_t>> top_cooccurring(
    const std::vector<TweetRecord>& tweets, const Period& period, const std::string& term,
    std::size_t top_k);

std::vector<Topic> load_topics(const std::string& path);
void save_topics(const std::string& path, const std::vector<Topic>& topics);

}  // namespace tbasic
