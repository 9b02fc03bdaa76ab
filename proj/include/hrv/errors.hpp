#pragma once

#include <stdexcept>
#include <string>

namespace hrv {

// Every recoverable failure in the toolkit carries one of these codes so
// callers (and the CLI exit-code mapping) can dispatch without string
// matching.
enum class Errc {
    malformed_header,
    non_positive_interval,
    non_monotonic_timestamp,
    all_beats_rejected,
    empty_series,
    too_few_beats,
    too_few_pairs,
    too_few_rows,
    series_too_short,
    segment_too_short,
    invalid_config,
    schedule_infeasible,
    no_beats_on_day,
    degenerate_distances,
    degenerate_spread,
    bisection_failed,
    numerical_divergence,
    unknown_palette,
    unknown_label,
    wrong_item_set,
    missing_item,
    unparseable_response,
    incomplete_coverage,
    io_error,
};

class HrvError : public std::runtime_error {
public:
    HrvError(Errc code, std::string message, long row = -1)
        : std::runtime_error(std::move(message)), code_(code), row_(row) {}

    Errc code() const noexcept { return code_; }

    // 1-based row number for CSV/table errors, -1 when not applicable.
    long row() const noexcept { return row_; }

private:
    Errc code_;
    long row_;
};

// Network/endpoint failures map to their own CLI exit code (4), so they get
// a distinct type rather than an Errc.
class TransportError : public std::runtime_error {
public:
    explicit TransportError(std::string message)
        : std::runtime_error(std::move(message)) {}
};

}  // namespace hrv
