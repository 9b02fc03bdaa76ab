#pragma once

#include <string>
#include <vector>

#include "hrv/errors.hpp"

namespace hrv {

// Timestamped beat-to-beat interval sequence; the universal input of every
// analysis module. `timestamps_s[k] = start_epoch_s + sum(intervals_ms[0..k]) / 1000`,
// so the k-th timestamp marks the *end* of the k-th interval.
struct RrSeries {
    double start_epoch_s = 0.0;
    std::vector<double> intervals_ms;
    std::vector<double> timestamps_s;

    size_t size() const { return intervals_ms.size(); }
    bool empty() const { return intervals_ms.empty(); }
    double duration_s() const {
        return empty() ? 0.0 : timestamps_s.back() - timestamps_s.front();
    }
};

// Builds the series from intervals, deriving timestamps by cumulative sum.
// Throws Errc::non_positive_interval if any interval is <= 0.
RrSeries make_rr_series(double start_epoch_s, std::vector<double> intervals_ms);

struct HrSeries {
    std::vector<double> sample_times_s;  // epoch seconds
    std::vector<double> bpm;
};

struct CleaningPolicy {
    double min_rr_ms = 300.0;
    double max_rr_ms = 2000.0;
    double max_relative_jump = 0.2;  // fraction of running median
};

enum class RejectReason { below_min, above_max, jump };

struct Rejection {
    size_t index;  // beat index in the input series
    double rr_ms;
    RejectReason reason;
};

struct CleanResult {
    RrSeries series;
    std::vector<Rejection> rejected;
};

// CSV ingest. Header must be `timestamp,rr_interval_ms,heart_rate_bpm`;
// timestamps are ISO-8601 or epoch seconds; the bpm column is ignored
// (regenerated on export from RR, which is authoritative).
RrSeries parse_rr_csv(const std::string& text);

// Range + relative-jump filter. The jump test compares each interval
// against the median of up to the 11 most recently accepted intervals.
CleanResult clean_rr(const RrSeries& series, const CleaningPolicy& policy = {});

// Instantaneous HR on a uniform grid: 60000 / (linear interpolation of RR).
HrSeries derive_hr(const RrSeries& series, double grid_step_s);

// CSV export, RFC-4180 (CRLF) line endings, bpm regenerated per row.
std::string export_rr_csv(const RrSeries& series);

// HR CSV with header `time_s,time_min,heart_rate_bpm,timestamp`;
// time_s is seconds since the series' start epoch.
std::string export_hr_csv(const HrSeries& hr, double start_epoch_s);

}  // namespace hrv
