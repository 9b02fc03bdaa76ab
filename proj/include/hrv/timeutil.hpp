#pragma once

#include <cstdint>
#include <string>

namespace hrv::timeutil {

// Civil-date <-> day-count conversions (proleptic Gregorian, days since
// 1970-01-01).
int64_t days_from_civil(int year, int month, int day);
void civil_from_days(int64_t days, int& year, int& month, int& day);

// 0 = Monday ... 6 = Sunday.
int weekday_monday0(int64_t days_since_epoch);

// Decomposition of an epoch instant shifted into local time by a fixed
// offset. No DST, no named zones; local = UTC + offset hours.
struct LocalTime {
    int64_t day_index;     // local days since 1970-01-01
    int weekday;           // 0 = Monday
    double second_of_day;  // [0, 86400)
};
LocalTime local_time(double epoch_s, double utc_offset_h);

// Parses `YYYY-MM-DD[T ]HH:MM:SS[.frac][Z]` or a plain epoch-seconds number.
// Returns false when the text matches neither form.
bool parse_timestamp(const std::string& text, double& epoch_s);

// ISO-8601 UTC with millisecond precision; the fractional part is omitted
// when it is zero (`1970-01-01T00:00:01Z`, `...:01.500Z`).
std::string format_iso8601(double epoch_s);

}  // namespace hrv::timeutil
