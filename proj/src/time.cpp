#include "tbasic/time.hpp"

#include <cstdio>
#include <stdexcept>

namespace tbasic {

std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& year, unsigned& month, unsigned& day) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  day = doy - (153 * mp + 2) / 5 + 1;
  month = mp + (mp < 10 ? 3 : -9);
  year = static_cast<int>(y + (month <= 2));
}

namespace {

bool parse_fixed_int(const std::string& s, std::size_t pos, std::size_t len, int& out) {
  if (pos + len > s.size()) return false;
  int v = 0;
  for (std::size_t i = pos; i < pos + len; ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    v = v * 10 + (s[i] - '0');
  }
  out = v;
  return true;
}

}  // namespace

std::int64_t parse_iso8601(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.back() == 'Z') s.pop_back();
  int year, month, day, hour = 0, minute = 0, second = 0;
  bool ok = s.size() >= 10 && parse_fixed_int(s, 0, 4, year) && s[4] == '-' &&
            parse_fixed_int(s, 5, 2, month) && s[7] == '-' && parse_fixed_int(s, 8, 2, day);
  if (ok && s.size() > 10) {
    ok = s[10] == 'T' && s.size() >= 16 && parse_fixed_int(s, 11, 2, hour) && s[13] == ':' &&
         parse_fixed_int(s, 14, 2, minute);
    if (ok && s.size() > 16) {
      ok = s[16] == ':' && s.size() == 19 && parse_fixed_int(s, 17, 2, second);
    } else if (ok) {
      ok = s.size() == 16;
    }
  } else if (ok) {
    ok = s.size() == 10;
  }
  if (!ok || month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 || minute > 59 ||
      second > 60) {
    throw std::invalid_argument("not an ISO-8601 timestamp: '" + text + "'");
  }
  return days_from_civil(year, static_cast<unsigned>(month), static_cast<unsigned>(day)) * 86400 +
         hour * 3600 + minute * 60 + second;
}

std::string format_iso8601(std::int64_t epoch_seconds) {
  std::int64_t days = epoch_seconds / 86400;
  std::int64_t rem = epoch_seconds % 86400;
  if (rem < 0) {
    rem += 86400;
    --days;
  }
  int year;
  unsigned month, day;
  civil_from_days(days, year, month, day);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lldZ", year, month, day,
                static_cast<long long>(rem / 3600), static_cast<long long>((rem / 60) % 60),
                static_cast<long long>(rem % 60));
  return buf;
}

std::int64_t parse_time_point(const std::string& text) {
  if (!text.empty() && (text.find('-') == std::string::npos || text[0] == '-')) {
    std::size_t pos = 0;
    const long long v = std::stoll(text, &pos);
    if (pos == text.size()) return v;
  }
  return parse_iso8601(text);
}

double hours_of_day_utc(std::int64_t epoch_seconds) {
  std::int64_t rem = epoch_seconds % 86400;
  if (rem < 0) rem += 86400;
  return static_cast<double>(rem) / 3600.0;
}

std::int64_t utc_midnight(std::int64_t epoch_seconds) {
  std::int64_t rem = epoch_seconds % 86400;
  if (rem < 0) rem += 86400;
  return epoch_seconds - rem;
}

}  // namespace tbasic
