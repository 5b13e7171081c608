#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "tbasic/time.hpp"

namespace tbasic {

struct TweetRecord {
  std::string author_id;
  std::int64_t timestamp = 0;  // epoch seconds, UTC
  std::string text;
  std::vector<std::string> mentions;  // lowercased, first occurrence order, no duplicates
  bool is_directed = false;           // holds iff mentions is non-empty
};

// "@name" scan: '@' followed by [A-Za-z0-9_]+, lowercased, deduplicated.
std::vector<std::string> extract_mentions(const std::string& text);

// Lowercased terms split on whitespace and punctuation; '@', '#', '.', '-'
// do not split, and '.'/'-' are trimmed at token edges so "bit.ly" survives
// while a sentence-final dot does not.
std::vector<std::string> tokenize(const std::string& text);

// Line format: author_id|epoch_seconds|text  ('|' in text escaped as \|).
TweetRecord parse_tweet_line(const std::string& line, std::size_t line_no);
std::string format_tweet_line(const TweetRecord& tweet);

std::vector<TweetRecord> load_tweets(const std::string& path, const Period& period);
void save_tweets(const std::string& path, const std::vector<TweetRecord>& tweets);

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct MentionEdge {
  NodeId src = 0;  // author
  NodeId dst = 0;  // mentioned user
  std::int64_t t = 0;
};

// Directed multi-graph: passive follow edges plus active mention edges.
// NodeIds are dense and assigned in insertion order.
class SocialGraph {
 public:
  NodeId intern(const std::string& user);
  std::optional<NodeId> find(const std::string& user) const;
  const std::string& name(NodeId v) const { return names_[v]; }
  std::size_t node_count() const { return names_.size(); }

  // Self-loops are rejected and counted instead of stored.
  void add_follow_edge(const std::string& follower, const std::string& followee);
  void record_mentions(const std::vector<TweetRecord>& tweets);

  // Sorts and deduplicates adjacency; required before any traversal.
  void finalize();
  bool finalized() const { return finalized_; }

  std::span<const NodeId> followers(NodeId v) const;  // users who follow v
  std::span<const NodeId> followees(NodeId v) const;  // users v follows
  bool has_follow_edge(NodeId follower, NodeId followee) const;
  std::size_t follow_edge_count() const { return follow_edge_count_; }
  std::size_t skipped_self_loops() const { return skipped_self_loops_; }
  const std::vector<MentionEdge>& mention_edges() const { return mention_edges_; }

 private:
  std::map<std::string, NodeId> index_;
  std::vector<std::string> names_;
  std::vector<std::vector<NodeId>> followers_;
  std::vector<std::vector<NodeId>> followees_;
  std::vector<MentionEdge> mention_edges_;
  std::size_t follow_edge_count_ = 0;
  std::size_t skipped_self_loops_ = 0;
  bool finalized_ = false;
};

// Edge file: follower<TAB>followee per line.
SocialGraph load_follow_edges(const std::string& path);

using ReceptivityBins = Eigen::Matrix<double, 6, 1>;

// Six 4-hour bins, normalized; users with no tweets get the uniform profile.
ReceptivityBins uniform_receptivity();

struct UserProfile {
  std::string user_id;
  std::int64_t message_count = 0;   // |M_v|
  std::int64_t directed_count = 0;  // |D_v|
  std::set<std::string> mentioned_users;
  std::int64_t mention_received_count = 0;
  std::set<std::string> keyword_set;
  std::vector<std::vector<std::string>> message_tokens;  // per message, sorted unique
  ReceptivityBins receptivity = uniform_receptivity();
};

class ProfileStore {
 public:
  ProfileStore() = default;
  explicit ProfileStore(Period period) : period_(period) {}

  UserProfile& upsert(const std::string& user);
  // Unknown users resolve to a shared zero-activity profile.
  const UserProfile& get(const std::string& user) const;
  bool contains(const std::string& user) const { return profiles_.count(user) > 0; }
  std::size_t size() const { return profiles_.size(); }
  const Period& period() const { return period_; }

  const std::map<std::string, UserProfile>& all() const { return profiles_; }

  void save(const std::string& path) const;
  static ProfileStore load(const std::string& path);

 private:
  Period period_;
  std::map<std::string, UserProfile> profiles_;
};

ProfileStore build_profiles(const std::vector<TweetRecord>& tweets, const SocialGraph& graph,
                            const Period& period);

// Count vector over bins aligned to period start; element i counts tweets in
// bin i whose token set contains the term.
Eigen::VectorXd term_occurrence_vector(const std::vector<TweetRecord>& tweets,
                                       const Period& period, const std::string& term,
                                       int bin_hours = 4);

}  // namespace tbasic
