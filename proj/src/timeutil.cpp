#include "hrv/timeutil.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace hrv::timeutil {

int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<int64_t>(doe) - 719468;
}

void civil_from_days(int64_t z, int& year, int& month, int& day) {
    z += 719468;
    const int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int64_t y = static_cast<int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    day = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    month = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    year = static_cast<int>(y + (month <= 2));
}

int weekday_monday0(int64_t days_since_epoch) {
    // 1970-01-01 was a Thursday.
    int64_t w = (days_since_epoch + 3) % 7;
    if (w < 0) w += 7;
    return static_cast<int>(w);
}

LocalTime local_time(double epoch_s, double utc_offset_h) {
    const double local_s = epoch_s + utc_offset_h * 3600.0;
    double day_f = std::floor(local_s / 86400.0);
    double sod = local_s - day_f * 86400.0;
    if (sod >= 86400.0) {  // guard against floor rounding at day boundaries
        sod -= 86400.0;
        day_f += 1.0;
    }
    LocalTime lt;
    lt.day_index = static_cast<int64_t>(day_f);
    lt.weekday = weekday_monday0(lt.day_index);
    lt.second_of_day = sod;
    return lt;
}

namespace {

bool parse_uint_fixed(const char* s, int width, int& out) {
    int v = 0;
    for (int i = 0; i < width; ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
        v = v * 10 + (s[i] - '0');
    }
    out = v;
    return true;
}

}  // namespace

bool parse_timestamp(const std::string& text, double& epoch_s) {
    // Trim ASCII whitespace.
    size_t b = text.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return false;
    size_t e = text.find_last_not_of(" \t\r\n");
    const std::string t = text.substr(b, e - b + 1);

    // ISO-8601 form: YYYY-MM-DD[T ]HH:MM:SS[.frac][Z]
    if (t.size() >= 19 && t[4] == '-' && t[7] == '-' && (t[10] == 'T' || t[10] == ' ') &&
        t[13] == ':' && t[16] == ':') {
        int y, mo, d, h, mi, s;
        if (!parse_uint_fixed(t.c_str(), 4, y) || !parse_uint_fixed(t.c_str() + 5, 2, mo) ||
            !parse_uint_fixed(t.c_str() + 8, 2, d) || !parse_uint_fixed(t.c_str() + 11, 2, h) ||
            !parse_uint_fixed(t.c_str() + 14, 2, mi) || !parse_uint_fixed(t.c_str() + 17, 2, s))
            return false;
        if (mo < 1 || mo > 12 || d < 1 || d > 31 || h > 23 || mi > 59 || s > 60) return false;
        size_t pos = 19;
        double frac = 0.0;
        if (pos < t.size() && t[pos] == '.') {
            ++pos;
            double scale = 0.1;
            bool any = false;
            while (pos < t.size() && t[pos] >= '0' && t[pos] <= '9') {
                frac += (t[pos] - '0') * scale;
                scale *= 0.1;
                ++pos;
                any = true;
            }
            if (!any) return false;
        }
        if (pos < t.size() && (t[pos] == 'Z' || t[pos] == 'z')) ++pos;
        if (pos != t.size()) return false;
        const int64_t days = days_from_civil(y, mo, d);
        epoch_s = static_cast<double>(days) * 86400.0 + h * 3600.0 + mi * 60.0 + s + frac;
        return true;
    }

    // Plain number: epoch seconds.
    char* endp = nullptr;
    const double v = std::strtod(t.c_str(), &endp);
    if (endp == t.c_str() || *endp != '\0') return false;
    if (!std::isfinite(v)) return false;
    epoch_s = v;
    return true;
}

std::string format_iso8601(double epoch_s) {
    // Round to whole milliseconds first so the printed instant is stable.
    double ms_total = std::round(epoch_s * 1000.0);
    double day_f = std::floor(ms_total / 86400000.0);
    int64_t ms_of_day = static_cast<int64_t>(ms_total - day_f * 86400000.0);
    if (ms_of_day >= 86400000) {
        ms_of_day -= 86400000;
        day_f += 1.0;
    }
    int y, mo, d;
    civil_from_days(static_cast<int64_t>(day_f), y, mo, d);
    const int h = static_cast<int>(ms_of_day / 3600000);
    const int mi = static_cast<int>((ms_of_day / 60000) % 60);
    const int s = static_cast<int>((ms_of_day / 1000) % 60);
    const int ms = static_cast<int>(ms_of_day % 1000);
    char buf[40];
    if (ms == 0)
        std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", y, mo, d, h, mi, s);
    else
        std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02d.%03dZ", y, mo, d, h, mi, s, ms);
    return buf;
}

}  // namespace hrv::timeutil
