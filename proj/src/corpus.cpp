#include "tbasic/corpus.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <json.hpp>

#include "tbasic/error.hpp"

namespace tbasic {

namespace {

bool is_mention_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

// Codepoints that terminate a token. ASCII whitespace/punctuation except
// '@', '#', '.', '-', plus the common Unicode whitespace and punctuation
// blocks; all other non-ASCII codepoints count as word characters.
bool splits_token(char32_t cp) {
  if (cp < 0x80) {
    const char c = static_cast<char>(cp);
    if (std::isspace(static_cast<unsigned char>(c))) return true;
    if (std::ispunct(static_cast<unsigned char>(c))) {
      return !(c == '@' || c == '#' || c == '.' || c == '-');
    }
    return false;
  }
  if (cp == 0x00A0 || cp == 0x1680 || (cp >= 0x2000 && cp <= 0x200A) || cp == 0x2028 ||
      cp == 0x2029 || cp == 0x202F || cp == 0x205F || cp == 0x3000) {
    return true;
  }
  if ((cp >= 0x00A1 && cp <= 0x00BF) || (cp >= 0x2010 && cp <= 0x2027) ||
      (cp >= 0x2030 && cp <= 0x205E) || (cp >= 0x3001 && cp <= 0x303F)) {
    return true;
  }
  return false;
}

// Minimal UTF-8 decode; malformed bytes pass through as single codepoints.
char32_t decode_utf8(const std::string& s, std::size_t& i) {
  const unsigned char b0 = static_cast<unsigned char>(s[i]);
  int extra = 0;
  char32_t cp = b0;
  if (b0 >= 0xF0) {
    extra = 3;
    cp = b0 & 0x07;
  } else if (b0 >= 0xE0) {
    extra = 2;
    cp = b0 & 0x0F;
  } else if (b0 >= 0xC0) {
    extra = 1;
    cp = b0 & 0x1F;
  }
  if (i + extra >= s.size()) {
    ++i;
    return b0;
  }
  for (int k = 1; k <= extra; ++k) {
    const unsigned char bk = static_cast<unsigned char>(s[i + k]);
    if ((bk & 0xC0) != 0x80) {
      ++i;
      return b0;
    }
    cp = (cp << 6) | (bk & 0x3F);
  }
  i += extra + 1;
  return cp;
}

void push_token(std::vector<std::string>& out, std::string& tok) {
  // trim edge '.'/'-' so sentence punctuation does not fork terms
  std::size_t b = 0, e = tok.size();
  while (b < e && (tok[b] == '.' || tok[b] == '-')) ++b;
  while (e > b && (tok[e - 1] == '.' || tok[e - 1] == '-')) --e;
  if (e > b) out.push_back(tok.substr(b, e - b));
  tok.clear();
}

}  // namespace

std::vector<std::string> extract_mentions(const std::string& text) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '@') continue;
    std::size_t j = i + 1;
    while (j < text.size() && is_mention_char(text[j])) ++j;
    if (j > i + 1) {
      std::string name = text.substr(i + 1, j - i - 1);
      for (char& c : name) c = ascii_lower(c);
      if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
      i = j - 1;
    }
  }
  return out;
}

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> out;
  std::string tok;
  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t start = i;
    const char32_t cp = decode_utf8(text, i);
    if (splits_token(cp)) {
      push_token(out, tok);
    } else if (cp < 0x80) {
      tok.push_back(ascii_lower(static_cast<char>(cp)));
    } else {
      tok.append(text, start, i - start);
    }
  }
  push_token(out, tok);
  return out;
}

TweetRecord parse_tweet_line(const std::string& line, std::size_t line_no) {
  const auto fail = [&](const std::string& why) {
    throw InputError("tweet file line " + std::to_string(line_no) + ": " + why);
  };
  const std::size_t p1 = line.find('|');
  if (p1 == std::string::npos || p1 == 0) fail("expected author_id|epoch|text");
  const std::size_t p2 = line.find('|', p1 + 1);
  if (p2 == std::string::npos || p2 == p1 + 1) fail("expected author_id|epoch|text");

  TweetRecord rec;
  rec.author_id = line.substr(0, p1);
  const std::string ts = line.substr(p1 + 1, p2 - p1 - 1);
  for (char c : ts) {
    if (c < '0' || c > '9') fail("timestamp is not a non-negative integer");
  }
  try {
    rec.timestamp = std::stoll(ts);
  } catch (const std::exception&) {
    fail("timestamp out of range");
  }

  std::string text;
  for (std::size_t i = p2 + 1; i < line.size(); ++i) {
    if (line[i] == '\\' && i + 1 < line.size() && line[i + 1] == '|') {
      text.push_back('|');
      ++i;
    } else {
      text.push_back(line[i]);
    }
  }
  rec.text = std::move(text);
  rec.mentions = extract_mentions(rec.text);
  rec.is_directed = !rec.mentions.empty();
  return rec;
}

std::string format_tweet_line(const TweetRecord& tweet) {
  std::string out = tweet.author_id;
  out.push_back('|');
  out += std::to_string(tweet.timestamp);
  out.push_back('|');
  for (char c : tweet.text) {
    if (c == '|') out += "\\|";
    else out.push_back(c);
  }
  return out;
}

std::vector<TweetRecord> load_tweets(const std::string& path, const Period& period) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open tweet file: " + path);
  std::vector<TweetRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    TweetRecord rec = parse_tweet_line(line, line_no);
    if (period.contains(rec.timestamp)) out.push_back(std::move(rec));
  }
  return out;
}

void save_tweets(const std::string& path, const std::vector<TweetRecord>& tweets) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write tweet file: " + path);
  for (const TweetRecord& t : tweets) out << format_tweet_line(t) << '\n';
}

NodeId SocialGraph::intern(const std::string& user) {
  auto it = index_.find(user);
  if (it != index_.end()) return it->second;
  const NodeId id = static_cast<NodeId>(names_.size());
  index_.emplace(user, id);
  names_.push_back(user);
  followers_.emplace_back();
  followees_.emplace_back();
  finalized_ = false;
  return id;
}

std::optional<NodeId> SocialGraph::find(const std::string& user) const {
  auto it = index_.find(user);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void SocialGraph::add_follow_edge(const std::string& follower, const std::string& followee) {
  if (follower == followee) {
    ++skipped_self_loops_;
    return;
  }
  const NodeId a = intern(follower);
  const NodeId b = intern(followee);
  followees_[a].push_back(b);
  followers_[b].push_back(a);
  finalized_ = false;
}

void SocialGraph::record_mentions(const std::vector<TweetRecord>& tweets) {
  for (const TweetRecord& t : tweets) {
    const NodeId src = intern(t.author_id);
    for (const std::string& m : t.mentions) {
      mention_edges_.push_back({src, intern(m), t.timestamp});
    }
  }
}

void SocialGraph::finalize() {
  follow_edge_count_ = 0;
  for (auto* lists : {&followers_, &followees_}) {
    for (auto& adj : *lists) {
      std::sort(adj.begin(), adj.end());
      adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
  }
  for (const auto& adj : followees_) follow_edge_count_ += adj.size();
  finalized_ = true;
}

std::span<const NodeId> SocialGraph::followers(NodeId v) const { return followers_[v]; }

std::span<const NodeId> SocialGraph::followees(NodeId v) const { return followees_[v]; }

bool SocialGraph::has_follow_edge(NodeId follower, NodeId followee) const {
  const auto& adj = followees_[follower];
  return std::binary_search(adj.begin(), adj.end(), followee);
}

SocialGraph load_follow_edges(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open edge file: " + path);
  SocialGraph g;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size() ||
        line.find('\t', tab + 1) != std::string::npos) {
      throw InputError("edge file line " + std::to_string(line_no) +
                       ": expected follower<TAB>followee");
    }
    g.add_follow_edge(line.substr(0, tab), line.substr(tab + 1));
  }
  g.finalize();
  return g;
}

ReceptivityBins uniform_receptivity() { return ReceptivityBins::Constant(1.0 / 6.0); }

UserProfile& ProfileStore::upsert(const std::string& user) {
  auto [it, inserted] = profiles_.try_emplace(user);
  if (inserted) it->second.user_id = user;
  return it->second;
}

const UserProfile& ProfileStore::get(const std::string& user) const {
  static const UserProfile zero{};
  auto it = profiles_.find(user);
  return it == profiles_.end() ? zero : it->second;
}

ProfileStore build_profiles(const std::vector<TweetRecord>& tweets, const SocialGraph& graph,
                            const Period& period) {
  ProfileStore store(period);
  std::map<std::string, std::array<std::int64_t, 6>> bin_counts;

  for (const TweetRecord& t : tweets) {
    if (!period.contains(t.timestamp)) continue;
    UserProfile& p = store.upsert(t.author_id);
    ++p.message_count;
    if (t.is_directed) ++p.directed_count;
    for (const std::string& m : t.mentions) {
      p.mentioned_users.insert(m);
      ++store.upsert(m).mention_received_count;
    }
    std::vector<std::string> tokens = tokenize(t.text);
    std::sort(tokens.begin(), tokens.end());
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    p.keyword_set.insert(tokens.begin(), tokens.end());
    p.message_tokens.push_back(std::move(tokens));

    auto [it, _] = bin_counts.try_emplace(t.author_id, std::array<std::int64_t, 6>{});
    ++it->second[static_cast<int>(hours_of_day_utc(t.timestamp) / 4.0)];
  }

  for (NodeId v = 0; v < graph.node_count(); ++v) store.upsert(graph.name(v));

  for (auto& [user, counts] : bin_counts) {
    UserProfile& p = store.upsert(user);
    if (p.message_count == 0) continue;
    for (int b = 0; b < 6; ++b) {
      p.receptivity[b] = static_cast<double>(counts[b]) / static_cast<double>(p.message_count);
    }
  }
  return store;
}

Eigen::VectorXd term_occurrence_vector(const std::vector<TweetRecord>& tweets,
                                       const Period& period, const std::string& term,
                                       int bin_hours) {
  if (!period.valid()) throw InputError("term_occurrence_vector: empty period");
  if (bin_hours <= 0 || 24 % bin_hours != 0) {
    throw std::invalid_argument("bin_hours must divide 24");
  }
  const std::int64_t bin_seconds = static_cast<std::int64_t>(bin_hours) * 3600;
  const std::int64_t n_bins = (period.span_seconds() + bin_seconds - 1) / bin_seconds;
  Eigen::VectorXd bins = Eigen::VectorXd::Zero(n_bins);
  for (const TweetRecord& t : tweets) {
    if (!period.contains(t.timestamp)) continue;
    const std::vector<std::string> tokens = tokenize(t.text);
    if (std::find(tokens.begin(), tokens.end(), term) != tokens.end()) {
      bins[(t.timestamp - period.from) / bin_seconds] += 1.0;
    }
  }
  return bins;
}

namespace {

using nlohmann::json;

json profile_to_json(const UserProfile& p) {
  json j;
  j["message_count"] = p.message_count;
  j["directed_count"] = p.directed_count;
  j["mentioned_users"] = p.mentioned_users;
  j["mention_received_count"] = p.mention_received_count;
  j["keywords"] = p.keyword_set;
  j["message_tokens"] = p.message_tokens;
  j["receptivity"] = std::vector<double>(p.receptivity.data(), p.receptivity.data() + 6);
  return j;
}

UserProfile profile_from_json(const std::string& user, const json& j) {
  UserProfile p;
  p.user_id = user;
  p.message_count = j.at("message_count").get<std::int64_t>();
  p.directed_count = j.at("directed_count").get<std::int64_t>();
  p.mentioned_users = j.at("mentioned_users").get<std::set<std::string>>();
  p.mention_received_count = j.at("mention_received_count").get<std::int64_t>();
  p.keyword_set = j.at("keywords").get<std::set<std::string>>();
  p.message_tokens = j.at("message_tokens").get<std::vector<std::vector<std::string>>>();
  const auto bins = j.at("receptivity").get<std::vector<double>>();
  if (bins.size() != 6) throw InputError("profile receptivity must have 6 bins");
  for (int b = 0; b < 6; ++b) p.receptivity[b] = bins[b];
  return p;
}

}  // namespace

void ProfileStore::save(const std::string& path) const {
  json j;
  j["period"] = {{"from", period_.from}, {"to", period_.to}};
  json& users = j["profiles"] = json::object();
  for (const auto& [user, p] : profiles_) users[user] = profile_to_json(p);
  std::ofstream out(path);
  if (!out) throw InputError("cannot write profiles file: " + path);
  out << j.dump(1) << '\n';
}

ProfileStore ProfileStore::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open profiles file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("profiles file " + path + ": " + e.what());
  }
  ProfileStore store(Period{j.at("period").at("from").get<std::int64_t>(),
                            j.at("period").at("to").get<std::int64_t>()});
  for (const auto& [user, pj] : j.at("profiles").items()) {
    store.profiles_[user] = profile_from_json(user, pj);
  }
  return store;
}

}  // namespace tbasic
