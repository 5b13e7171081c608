#pragma once

#include <cstdint>
#include <string>

namespace tbasic {

// Half-open interval [from, to) in epoch seconds, UTC.
struct Period {
  std::int64_t from = 0;
  std::int64_t to = 0;

  bool contains(std::int64_t t) const { return t >= from && t < to; }
  std::int64_t span_seconds() const { return to - from; }
  bool valid() const { return from < to; }
};

// Days since 1970-01-01 for a proleptic Gregorian civil date.
std::int64_t days_from_civil(int year, unsigned month, unsigned day);
void civil_from_days(std::int64_t days, int& year, unsigned& month, unsigned& day);

// Accepts "YYYY-MM-DD", "YYYY-MM-DDTHH:MM", "YYYY-MM-DDTHH:MM:SS",
// optionally suffixed with 'Z'. Throws std::invalid_argument otherwise.
std::int64_t parse_iso8601(const std::string& text);
std::string format_iso8601(std::int64_t epoch_seconds);

// Accepts either an ISO-8601 string or a raw epoch-seconds integer string.
std::int64_t parse_time_point(const std::string& text);

// Hours since UTC midnight, in [0, 24).
double hours_of_day_utc(std::int64_t epoch_seconds);

// UTC midnight of the day containing the given instant.
std::int64_t utc_midnight(std::int64_t epoch_seconds);

}  // namespace tbasic
