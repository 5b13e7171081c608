#pragma once

#include <Eigen/Core>
#include <array>
#include <map>
#include <string>

#include "tbasic/corpus.hpp"
#include "tbasic/topics.hpp"

namespace tbasic {

inline constexpr int kFeatureCount = 13;
using FeatureVector = Eigen::Matrix<double, kFeatureCount, 1>;

// Fixed feature order; every consumer (training, serialization, simulation)
// relies on it.
inline constexpr std::array<const char*, kFeatureCount> kFeatureNames = {
    "i_src",  "i_dst",  "hk_src",  "hk_dst",  "hm_src_dst", "hm_dst_src", "mr_src",
    "mr_dst", "dtr_src", "dtr_dst", "a_src",   "a_dst",      "h_src_dst"};

// Hourly tweet frequency cap: one month of hours (30.4 days x 24 h).
inline constexpr double kActivityEpsilon = 30.4 * 24.0;
// Mention-rate cap.
inline constexpr double kMentionRateMu = 200.0;

// I(v): average tweets per hour over the period, bounded by 1.
double activity(const UserProfile& v);

// H(x, y): Jaccard overlap of the mentioned-user sets; 0 when both empty.
double homogeneity(const UserProfile& x, const UserProfile& y);

// dTR(v): share of directed tweets.
double directed_ratio(const UserProfile& v);

// hM(x, y): 1 iff x mentioned y during the period.
double has_mentioned(const UserProfile& x, const std::string& user_y);

// mR(v): received mentions over mu, bounded by 1.
double mention_rate(const UserProfile& v);

enum class KeywordMatch {
  kAllInOneMessage,  // one past message containing every topic keyword
  kFirstKeyword,     // first topic keyword anywhere in the user's keyword set
};

// hK(v, i): 1 iff the user already tweeted about the topic.
double has_keyword(const UserProfile& v, const Topic& topic,
                   KeywordMatch mode = KeywordMatch::kAllInOneMessage);

// A(v, t): the 4-hour receptivity bin holding t. t must lie in [0, 24).
double receptivity(const UserProfile& v, double hours_of_day);

FeatureVector assemble(const UserProfile& src, const UserProfile& dst, const Topic& topic,
                       double hours_of_day, KeywordMatch mode = KeywordMatch::kAllInOneMessage);

// assemble() with hK memoized per user; used on simulation hot paths where
// the topic is fixed. Produces bit-identical vectors to assemble().
class FeatureAssembler {
 public:
  FeatureAssembler(const Topic& topic, KeywordMatch mode = KeywordMatch::kAllInOneMessage)
      : topic_(topic), mode_(mode) {}

  FeatureVector operator()(const UserProfile& src, const UserProfile& dst,
                           double hours_of_day) const;

 private:
  double cached_has_keyword(const UserProfile& v) const;

  const Topic& topic_;
  KeywordMatch mode_;
  mutable std::map<const UserProfile*, double> hk_cache_;
};

}  // namespace tbasic
