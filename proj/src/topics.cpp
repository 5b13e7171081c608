#include "tbasic/topics.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <map>

#include "tbasic/error.hpp"

namespace tbasic {

std::vector<TermScore> rank_terms(const std::vector<TweetRecord>& tweets, const Period& period,
                                  std::size_t top_k, std::int64_t min_total_count,
                                  int bin_hours) {
  if (top_k == 0) throw std::invalid_argument("rank_terms: top_k must be >= 1");
  if (!period.valid()) throw InputError("rank_terms: empty period");
  const std::int64_t bin_seconds = static_cast<std::int64_t>(bin_hours) * 3600;
  if (bin_hours <= 0 || 24 % bin_hours != 0) {
    throw std::invalid_argument("bin_hours must divide 24");
  }
  const std::int64_t n_bins = (period.span_seconds() + bin_seconds - 1) / bin_seconds;

  // term -> per-bin tweet counts (a tweet counts once per term it contains)
  std::map<std::string, std::vector<std::int64_t>> occurrence;
  for (const TweetRecord& t : tweets) {
    if (!period.contains(t.timestamp)) continue;
    const std::size_t bin = static_cast<std::size_t>((t.timestamp - period.from) / bin_seconds);
    std::vector<std::string> tokens = tokenize(t.text);
    std::sort(tokens.begin(), tokens.end());
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    for (std::string& tok : tokens) {
      auto [it, _] = occurrence.try_emplace(std::move(tok));
      if (it->second.empty()) it->second.resize(n_bins, 0);
      ++it->second[bin];
    }
  }

  std::vector<TermScore> scored;
  for (const auto& [term, bins] : occurrence) {
    Eigen::Map<const Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>> counts(bins.data(),
                                                                            bins.size());
    const std::int64_t total = counts.sum();
    if (total < min_total_count) continue;
    const std::optional<double> score = score_term(counts);
    if (!score) continue;  // non-recurrent
    TermScore entry;
    entry.term = term;
    entry.score = *score;
    entry.min = static_cast<double>(counts.minCoeff());
    entry.max = static_cast<double>(counts.maxCoeff());
    entry.avg = static_cast<double>(total) / static_cast<double>(counts.size());
    entry.total = total;
    scored.push_back(std::move(entry));
  }

  std::sort(scored.begin(), scored.end(), [](const TermScore& a, const TermScore& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.term < b.term;
  });
  if (scored.size() > top_k) scored.resize(top_k);
  return scored;
}

bool match_tweet(const Topic& topic, const TweetRecord& tweet) {
  if (!topic.window.contains(tweet.timestamp)) return false;
  const std::vector<std::string> tokens = tokenize(tweet.text);
  for (const std::string& kw : topic.keywords) {
    if (std::find(tokens.begin(), tokens.end(), kw) == tokens.end()) return false;
  }
  return true;
}

std::vector<std::pair<std::string, std::int64_t>> top_cooccurring(
    const std::vector<TweetRecord>& tweets, const Period& period, const std::string& term,
    std::size_t top_k) {
  std::map<std::string, std::int64_t> counts;
  for (const TweetRecord& t : tweets) {
    if (!period.contains(t.timestamp)) continue;
    std::vector<std::string> tokens = tokenize(t.text);
    std::sort(tokens.begin(), tokens.end());
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    if (std::find(tokens.begin(), tokens.end(), term) == tokens.end()) continue;
    for (const std::string& tok : tokens) {
      if (tok != term) ++counts[tok];
    }
  }
  std::vector<std::pair<std::string, std::int64_t>> out(counts.begin(), counts.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (out.size() > top_k) out.resize(top_k);
  return out;
}

namespace {

using nlohmann::json;

std::int64_t json_time(const json& v) {
  if (v.is_number()) return v.get<std::int64_t>();
  return parse_time_point(v.get<std::string>());
}

}  // namespace

std::vector<Topic> load_topics(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open topic file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("topic file " + path + ": " + e.what());
  }
  if (!j.is_array()) throw InputError("topic file must be a JSON array");
  std::vector<Topic> topics;
  for (const json& tj : j) {
    Topic t;
    t.id = tj.at("id").get<std::string>();
    for (const auto& kw : tj.at("keywords")) {
      std::string k = kw.get<std::string>();
      for (char& c : k) c = (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
      if (std::find(t.keywords.begin(), t.keywords.end(), k) == t.keywords.end()) {
        t.keywords.push_back(std::move(k));
      }
    }
    t.window.from = json_time(tj.at("window").at("from"));
    t.window.to = json_time(tj.at("window").at("to"));
    if (t.keywords.empty()) throw InputError("topic '" + t.id + "' has no keywords");
    if (!t.window.valid()) throw InputError("topic '" + t.id + "' has a degenerate window");
    topics.push_back(std::move(t));
  }
  return topics;
}

void save_topics(const std::string& path, const std::vector<Topic>& topics) {
  json j = json::array();
  for (const Topic& t : topics) {
    j.push_back({{"id", t.id},
                 {"keywords", t.keywords},
                 {"window", {{"from", t.window.from}, {"to", t.window.to}}}});
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write topic file: " + path);
  out << j.dump(1) << '\n';
}

}  // namespace tbasic
