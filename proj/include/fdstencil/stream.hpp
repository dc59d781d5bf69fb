#pragma once

#include "fdstencil/stencil.hpp"

#include <deque>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fdstencil {

struct Sample {
    double t = 0.0;  // timestamp, seconds
    double y = 0.0;
};

struct StreamConfig {
    int window = 5;               // samples per window, n
    int k = 1;                    // derivative order, 0 < k < n
    int quantization_digits = 6;  // decimal digits used to snap node ratios
};

struct WindowNodes {
    double h = 0.0;  // gap between the two most recent samples
    NodeSet nodes;
};

/// Maps a full window of strictly increasing timestamps onto (h, nodes):
/// the most recent sample is the reference point with offset 0, h is the
/// most recent gap, and each ratio (t_j - t_n) / h snaps to the simplest
/// rational within half a unit of the configured decimal precision. Throws
/// if two offsets coincide after snapping.
WindowNodes window_to_nodes(std::span<const Sample> window, const StreamConfig& config);

/// Derivative estimate at the newest timestamp of the window, from a fresh
/// per-window stencil.
double estimate_derivative(std::span<const Sample> window, const StreamConfig& config);

struct StreamEstimate {
    double t = 0.0;
    double value = 0.0;
};

/// One rejected or skipped input, identified by its 1-based position in the
/// feed (the CSV driver reports physical line numbers instead).
struct StreamIssue {
    std::size_t index = 0;
    std::string reason;
};

struct StreamStats {
    std::size_t accepted = 0;
    std::size_t rejected = 0;
    std::size_t emitted = 0;
    std::size_t solves = 0;      // cache misses
    std::size_t cache_hits = 0;
};

/// Sliding-window derivative estimator over a live sample feed. Coefficient
/// sets are cached keyed by the snapped offset tuple, so a regularly spaced
/// stream performs exactly one exact solve. Single-owner mutable state: one
/// processor per stream, no concurrent sharing.
class StreamProcessor {
public:
    explicit StreamProcessor(StreamConfig config);

    /// Feeds one sample. Returns an estimate once the window is full; samples
    /// with non-increasing timestamps are skipped (recorded, window kept).
    std::optional<StreamEstimate> push(const Sample& sample);

    const std::vector<StreamIssue>& issues() const { return issues_; }
    const StreamStats& stats() const { return stats_; }
    const StreamConfig& config() const { return config_; }

private:
    StreamConfig config_;
    std::deque<Sample> window_;
    std::map<RationalVector, std::shared_ptr<const Stencil>> cache_;
    std::vector<StreamIssue> issues_;
    StreamStats stats_;
    std::size_t position_ = 0;
};

struct StreamResult {
    std::vector<StreamEstimate> estimates;
    std::vector<StreamIssue> issues;
    StreamStats stats;
};

/// Runs a whole sample sequence through a fresh processor.
StreamResult stream_process(std::span<const Sample> samples, const StreamConfig& config);

/// CSV driver: reads "t,y" rows from `in`, writes "t,estimate" rows to
/// `out`, and streams "line,reason" diagnostics to `diag`. Returns the
/// stats; lines that fail to parse are diagnosed and skipped.
StreamStats run_csv_stream(std::istream& in, std::ostream& out, std::ostream& diag,
                           const StreamConfig& config);

}  // namespace fdstencil
