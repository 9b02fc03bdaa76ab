#include "hrv/timeseries.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hrv/timeutil.hpp"

namespace hrv {

RrSeries make_rr_series(double start_epoch_s, std::vector<double> intervals_ms) {
    RrSeries s;
    s.start_epoch_s = start_epoch_s;
    s.intervals_ms = std::move(intervals_ms);
    s.timestamps_s.resize(s.intervals_ms.size());
    double t = start_epoch_s;
    for (size_t k = 0; k < s.intervals_ms.size(); ++k) {
        const double rr = s.intervals_ms[k];
        if (!(rr > 0.0))
            throw HrvError(Errc::non_positive_interval,
                           "non-positive RR interval at beat " + std::to_string(k),
                           static_cast<long>(k));
        t += rr / 1000.0;
        s.timestamps_s[k] = t;
    }
    return s;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

RrSeries parse_rr_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw HrvError(Errc::malformed_header, "empty document, expected RR CSV header");
    {
        auto cols = split_csv_line(line);
        if (cols.size() != 3 || trim(cols[0]) != "timestamp" ||
            trim(cols[1]) != "rr_interval_ms" || trim(cols[2]) != "heart_rate_bpm")
            throw HrvError(Errc::malformed_header,
                           "expected header 'timestamp,rr_interval_ms,heart_rate_bpm', got '" +
                               trim(line) + "'");
    }

    std::vector<double> intervals;
    std::vector<double> raw_ts;
    long row = 1;  // header was row 1
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        auto cols = split_csv_line(line);
        if (cols.size() != 3)
            throw HrvError(Errc::malformed_header,
                           "row " + std::to_string(row) + ": expected 3 columns", row);
        double ts;
        if (!timeutil::parse_timestamp(cols[0], ts))
            throw HrvError(Errc::malformed_header,
                           "row " + std::to_string(row) + ": unparseable timestamp '" +
                               trim(cols[0]) + "'",
                           row);
        char* endp = nullptr;
        const std::string rr_text = trim(cols[1]);
        const double rr = std::strtod(rr_text.c_str(), &endp);
        if (endp == rr_text.c_str() || *endp != '\0' || !std::isfinite(rr))
            throw HrvError(Errc::malformed_header,
                           "row " + std::to_string(row) + ": unparseable rr_interval_ms", row);
        if (!(rr > 0.0))
            throw HrvError(Errc::non_positive_interval,
                           "row " + std::to_string(row) + ": rr_interval_ms must be > 0", row);
        if (!raw_ts.empty() && !(ts > raw_ts.back()))
            throw HrvError(Errc::non_monotonic_timestamp,
                           "row " + std::to_string(row) + ": timestamp not increasing", row);
        raw_ts.push_back(ts);
        intervals.push_back(rr);
    }
    if (intervals.empty())
        throw HrvError(Errc::empty_series, "RR CSV contains no data rows");

    // RR is authoritative; timestamps are re-derived from the cumulative sum
    // anchored so the first beat lands on its recorded timestamp.
    const double start_epoch = raw_ts.front() - intervals.front() / 1000.0;
    return make_rr_series(start_epoch, std::move(intervals));
}

CleanResult clean_rr(const RrSeries& series, const CleaningPolicy& policy) {
    if (series.empty()) throw HrvError(Errc::empty_series, "clean_rr: empty series");
    if (!(policy.min_rr_ms > 0.0) || !(policy.min_rr_ms < policy.max_rr_ms))
        throw HrvError(Errc::invalid_config, "clean_rr: require 0 < min_rr_ms < max_rr_ms");

    std::vector<double> kept;
    std::vector<double> window;  // last <= 11 accepted intervals, insertion order
    std::vector<Rejection> rejected;
    kept.reserve(series.size());

    for (size_t k = 0; k < series.size(); ++k) {
        const double rr = series.intervals_ms[k];
        if (rr < policy.min_rr_ms) {
            rejected.push_back({k, rr, RejectReason::below_min});
            continue;
        }
        if (rr > policy.max_rr_ms) {
            rejected.push_back({k, rr, RejectReason::above_max});
            continue;
        }
        if (!window.empty()) {
            std::vector<double> sorted = window;
            std::sort(sorted.begin(), sorted.end());
            const double med = sorted.size() % 2 == 1
                                   ? sorted[sorted.size() / 2]
                                   : 0.5 * (sorted[sorted.size() / 2 - 1] + sorted[sorted.size() / 2]);
            if (std::abs(rr - med) / med > policy.max_relative_jump) {
                rejected.push_back({k, rr, RejectReason::jump});
                continue;
            }
        }
        kept.push_back(rr);
        window.push_back(rr);
        if (window.size() > 11) window.erase(window.begin());
    }

    if (kept.empty())
        throw HrvError(Errc::all_beats_rejected, "clean_rr: every beat rejected by policy");

    CleanResult result;
    result.series = make_rr_series(series.start_epoch_s, std::move(kept));
    result.rejected = std::move(rejected);
    return result;
}

HrSeries derive_hr(const RrSeries& series, double grid_step_s) {
    if (series.empty()) throw HrvError(Errc::empty_series, "derive_hr: empty series");
    if (!(grid_step_s > 0.0))
        throw HrvError(Errc::invalid_config, "derive_hr: grid_step_s must be > 0");

    const auto& ts = series.timestamps_s;
    const auto& rr = series.intervals_ms;
    HrSeries hr;
    const double t0 = ts.front();
    const double t1 = ts.back();
    const size_t n = static_cast<size_t>(std::floor((t1 - t0) / grid_step_s)) + 1;
    hr.sample_times_s.reserve(n);
    hr.bpm.reserve(n);

    size_t seg = 0;  // invariant: ts[seg] <= t <= ts[seg+1] while interpolating
    for (size_t k = 0; k < n; ++k) {
        const double t = t0 + static_cast<double>(k) * grid_step_s;
        double rr_at;
        if (series.size() == 1 || t <= ts.front()) {
            rr_at = rr.front();
        } else if (t >= ts.back()) {
            rr_at = rr.back();
        } else {
            while (ts[seg + 1] < t) ++seg;
            const double span = ts[seg + 1] - ts[seg];
            const double a = span > 0.0 ? (t - ts[seg]) / span : 0.0;
            rr_at = rr[seg] + a * (rr[seg + 1] - rr[seg]);
        }
        hr.sample_times_s.push_back(t);
        hr.bpm.push_back(60000.0 / rr_at);
    }
    return hr;
}

std::string export_rr_csv(const RrSeries& series) {
    std::string out = "timestamp,rr_interval_ms,heart_rate_bpm\r\n";
    char buf[96];
    for (size_t k = 0; k < series.size(); ++k) {
        const double rr = series.intervals_ms[k];
        std::snprintf(buf, sizeof(buf), ",%.3f,%.3f\r\n", rr, 60000.0 / rr);
        out += timeutil::format_iso8601(series.timestamps_s[k]);
        out += buf;
    }
    return out;
}

std::string export_hr_csv(const HrSeries& hr, double start_epoch_s) {
    std::string out = "time_s,time_min,heart_rate_bpm,timestamp\r\n";
    char buf[96];
    for (size_t k = 0; k < hr.bpm.size(); ++k) {
        const double t = hr.sample_times_s[k];
        const double rel = t - start_epoch_s;
        std::snprintf(buf, sizeof(buf), "%.3f,%.5f,%.3f,", rel, rel / 60.0, hr.bpm[k]);
        out += buf;
        out += timeutil::format_iso8601(t);
        out += "\r\n";
    }
    return out;
}

}  // namespace hrv
