#include "tbasic/features.hpp"

#include <algorithm>
#include <stdexcept>

namespace tbasic {

double activity(const UserProfile& v) {
  const double m = static_cast<double>(v.message_count);
  return m < kActivityEpsilon ? m / kActivityEpsilon : 1.0;
}

double homogeneity(const UserProfile& x, const UserProfile& y) {
  if (x.mentioned_users.empty() && y.mentioned_users.empty()) return 0.0;
  std::size_t inter = 0;
  for (const std::string& u : x.mentioned_users) inter += y.mentioned_users.count(u);
  const std::size_t uni = x.mentioned_users.size() + y.mentioned_users.size() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

double directed_ratio(const UserProfile& v) {
  if (v.message_count == 0) return 0.0;
  return static_cast<double>(v.directed_count) / static_cast<double>(v.message_count);
}

double has_mentioned(const UserProfile& x, const std::string& user_y) {
  return x.mentioned_users.count(user_y) ? 1.0 : 0.0;
}

double mention_rate(const UserProfile& v) {
  const double r = static_cast<double>(v.mention_received_count);
  return r < kMentionRateMu ? r / kMentionRateMu : 1.0;
}

double has_keyword(const UserProfile& v, const Topic& topic, KeywordMatch mode) {
  if (mode == KeywordMatch::kFirstKeyword) {
    return v.keyword_set.count(topic.keywords.front()) ? 1.0 : 0.0;
  }
  for (const std::vector<std::string>& tokens : v.message_tokens) {
    bool all = true;
    for (const std::string& kw : topic.keywords) {
      if (!std::binary_search(tokens.begin(), tokens.end(), kw)) {
        all = false;
        break;
      }
    }
    if (all) return 1.0;
  }
  return 0.0;
}

double receptivity(const UserProfile& v, double hours_of_day) {
  if (!(hours_of_day >= 0.0 && hours_of_day < 24.0)) {
    throw std::out_of_range("receptivity: time of day must lie in [0, 24)");
  }
  return v.receptivity[static_cast<int>(hours_of_day / 4.0)];
}

FeatureVector assemble(const UserProfile& src, const UserProfile& dst, const Topic& topic,
                       double hours_of_day, KeywordMatch mode) {
  FeatureVector f;
  f << activity(src), activity(dst),
      has_keyword(src, topic, mode), has_keyword(dst, topic, mode),
      has_mentioned(src, dst.user_id), has_mentioned(dst, src.user_id),
      mention_rate(src), mention_rate(dst),
      directed_ratio(src), directed_ratio(dst),
      receptivity(src, hours_of_day), receptivity(dst, hours_of_day),
      homogeneity(src, dst);
  return f;
}

double FeatureAssembler::cached_has_keyword(const UserProfile& v) const {
  auto [it, inserted] = hk_cache_.try_emplace(&v, 0.0);
  if (inserted) it->second = has_keyword(v, topic_, mode_);
  return it->second;
}

FeatureVector FeatureAssembler::operator()(const UserProfile& src, const UserProfile& dst,
                                           double hours_of_day) const {
  FeatureVector f;
  f << activity(src), activity(dst),
      cached_has_keyword(src), cached_has_keyword(dst),
      has_mentioned(src, dst.user_id), has_mentioned(dst, src.user_id),
      mention_rate(src), mention_rate(dst),
      directed_ratio(src), directed_ratio(dst),
      receptivity(src, hours_of_day), receptivity(dst, hours_of_day),
      homogeneity(src, dst);
  return f;
}

}  // namespace tbasic
