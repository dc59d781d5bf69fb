#include "fdstencil/stream.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace fdstencil {

namespace {

void validate_config(const StreamConfig& config) {
    if (config.window < 2) {
        throw std::invalid_argument("window size must be at least 2");
    }
    if (config.k <= 0 || config.k >= config.window) {
        throw std::invalid_argument("derivative order out of range");
    }
    if (config.quantization_digits < 1 || config.quantization_digits > 12) {
        throw std::invalid_argument("quantization digits must be in 1..12");
    }
}

Rational snap_ratio(double ratio, const Rational& tolerance) {
    const Rational exact = Rational::from_double(ratio);
    return simplest_rational_between(exact - tolerance, exact + tolerance);
}

std::string format_double(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

}  // namespace

WindowNodes window_to_nodes(std::span<const Sample> window, const StreamConfig& config) {
    validate_config(config);
    const std::size_t n = static_cast<std::size_t>(config.window);
    if (window.size() != n) {
        throw std::invalid_argument("window is not full");
    }
    for (std::size_t j = 1; j < n; ++j) {
        if (!(window[j].t > window[j - 1].t)) {
            throw std::invalid_argument("timestamps must be strictly increasing");
        }
    }

    const double t_ref = window[n - 1].t;
    const double h = t_ref - window[n - 2].t;

    // Snap each ratio to the simplest rational within half a unit in the
    // last configured decimal place; exact grids come out as exact integers
    // and repeated spacings share one cache key.
    Rational tolerance = Rational(1, 2);
    for (int i = 0; i < config.quantization_digits; ++i) {
        tolerance /= Rational(10);
    }

    RationalVector offsets(n);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        offsets[j] = snap_ratio((window[j].t - t_ref) / h, tolerance);
    }
    offsets[n - 1] = Rational(0);

    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (offsets[a] == offsets[b]) {
                throw std::invalid_argument("samples too close for configured quantization");
            }
        }
    }
    return {h, NodeSet(std::move(offsets))};
}

double estimate_derivative(std::span<const Sample> window, const StreamConfig& config) {
    WindowNodes wn = window_to_nodes(window, config);
    const Stencil stencil = generate_stencil(wn.nodes, config.k);
    std::vector<double> values(window.size());
    for (std::size_t j = 0; j < window.size(); ++j) {
        values[j] = window[j].y;
    }
    return evaluate_stencil(stencil, values, wn.h);
}

StreamProcessor::StreamProcessor(StreamConfig config) : config_(config) {
    validate_config(config_);
}

std::optional<StreamEstimate> StreamProcessor::push(const Sample& sample) {
    ++position_;
    if (!std::isfinite(sample.t) || !std::isfinite(sample.y)) {
        ++stats_.rejected;
        issues_.push_back({position_, "sample is not finite"});
        return std::nullopt;
    }
    if (!window_.empty() && !(sample.t > window_.back().t)) {
        ++stats_.rejected;
        issues_.push_back({position_, "timestamp not increasing"});
        return std::nullopt;
    }

    ++stats_.accepted;
    window_.push_back(sample);
    if (window_.size() > static_cast<std::size_t>(config_.window)) {
        window_.pop_front();
    }
    if (window_.size() < static_cast<std::size_t>(config_.window)) {
        return std::nullopt;  // warm-up
    }

    const std::vector<Sample> snapshot(window_.begin(), window_.end());
    std::optional<WindowNodes> wn;
    try {
        wn = window_to_nodes(snapshot, config_);
    } catch (const std::invalid_argument& e) {
        // The sample stays in the window; only this window's estimate is lost.
        issues_.push_back({position_, e.what()});
        return std::nullopt;
    }

    std::shared_ptr<const Stencil> stencil;
    if (auto it = cache_.find(wn->nodes.offsets()); it != cache_.end()) {
        stencil = it->second;
        ++stats_.cache_hits;
    } else {
        stencil = std::make_shared<const Stencil>(generate_stencil(wn->nodes, config_.k));
        cache_.emplace(wn->nodes.offsets(), stencil);
        ++stats_.solves;
    }

    std::vector<double> values(snapshot.size());
    for (std::size_t j = 0; j < snapshot.size(); ++j) {
        values[j] = snapshot[j].y;
    }
    const double estimate = evaluate_stencil(*stencil, values, wn->h);
    ++stats_.emitted;
    return StreamEstimate{sample.t, estimate};
}

StreamResult stream_process(std::span<const Sample> samples, const StreamConfig& config) {
    StreamProcessor processor(config);
    StreamResult result;
    result.estimates.reserve(samples.size());
    for (const Sample& s : samples) {
        if (auto est = processor.push(s)) {
            result.estimates.push_back(*est);
        }
    }
    result.issues = processor.issues();
    result.stats = processor.stats();
    return result;
}

namespace {

bool parse_field(std::string_view field, double& out) {
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) {
        field.remove_prefix(1);
    }
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) {
        field.remove_suffix(1);
    }
    if (field.empty()) return false;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last && std::isfinite(out);
}

}  // namespace

StreamStats run_csv_stream(std::istream& in, std::ostream& out, std::ostream& diag,
                           const StreamConfig& config) {
    StreamProcessor processor(config);
    out << "t,estimate\n";

    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!header_seen) {
            header_seen = true;
            // Tolerate a missing header: a first line that parses as data is data.
            std::string_view sv(line);
            if (sv.find(',') != std::string_view::npos) {
                double probe = 0.0;
                if (!parse_field(sv.substr(0, sv.find(',')), probe)) {
                    continue;  // header row
                }
            }
        }

        const auto comma = line.find(',');
        double t = 0.0;
        double y = 0.0;
        if (comma == std::string::npos ||
            line.find(',', comma + 1) != std::string::npos ||
            !parse_field(std::string_view(line).substr(0, comma), t) ||
            !parse_field(std::string_view(line).substr(comma + 1), y)) {
            diag << line_no << ",malformed row\n";
            continue;
        }

        const std::size_t issues_before = processor.issues().size();
        if (auto est = processor.push({t, y})) {
            out << format_double(est->t) << ',' << format_double(est->value) << '\n';
        }
        for (std::size_t i = issues_before; i < processor.issues().size(); ++i) {
            diag << line_no << ',' << processor.issues()[i].reason << '\n';
        }
    }
    return processor.stats();
}

}  // namespace fdstencil
