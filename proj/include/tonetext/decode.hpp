#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tonetext/audio.hpp"
#include "tonetext/errors.hpp"
#include "tonetext/freqmap.hpp"

namespace tonetext {

// Framing contract mirroring SynthParams, plus the decision thresholds.
struct DecodeParams {
    double symbol_duration_s = 0.040;
    double gap_duration_s = 0.010;
    double analysis_margin_s = 0.002;  // trimmed from each symbol edge (the fade region)
    double min_confidence = 2.0;       // best / runner-up power ratio
    double min_energy = 1e-6;          // silence gate on mean squared amplitude

    void validate() const {
        if (!(symbol_duration_s > 0.0)) throw DomainError("symbol duration must be positive");
        if (gap_duration_s < 0.0) throw DomainError("gap duration must be non-negative");
        if (analysis_margin_s < 0.0) throw DomainError("analysis margin must be non-negative");
        if (2.0 * analysis_margin_s >= symbol_duration_s) {
            throw DomainError("analysis margins leave no symbol window");
        }
        if (min_confidence < 1.0) throw DomainError("min confidence must be >= 1");
        if (min_energy < 0.0) throw DomainError("min energy must be non-negative");
    }

    std::size_t symbol_samples(int rate) const {
        return static_cast<std::size_t>(std::llround(symbol_duration_s * rate));
    }
    std::size_t frame_samples(int rate) const {
        return static_cast<std::size_t>(std::llround((symbol_duration_s + gap_duration_s) * rate));
    }
    std::size_t margin_samples(int rate) const {
        return static_cast<std::size_t>(std::llround(analysis_margin_s * rate));
    }
};

struct SymbolDetection {
    std::size_t index = 0;
    std::optional<char> detected_char;
    double target_frequency_hz = 0.0;  // frequency of the winning table entry
    double power = 0.0;                // Goertzel magnitude squared / N^2
    double confidence = 0.0;           // winning power / runner-up power
    double cents_error = 0.0;          // parabolic estimate, informational
};

struct DecodeResult {
    std::string text;  // failed symbols rendered as the substitution marker
    std::vector<SymbolDetection> detections;
    std::size_t symbol_count = 0;
    std::size_t failed_count = 0;
};

inline constexpr char kSubstitutionMarker = '?';

// Squared magnitude of the segment's discrete-time Fourier transform at
// target_hz, evaluated by the Goertzel recurrence and normalized by the
// squared segment length. A unit sine at the target over an integer number
// of cycles yields 0.25.
inline double goertzel_power(std::span<const double> segment, double sample_rate_hz,
                             double target_hz) {
    if (segment.size() < 8) {
        throw DomainError("segment too short for tone detection (" +
                          std::to_string(segment.size()) + " samples)");
    }
    if (!(target_hz > 0.0) || target_hz >= sample_rate_hz / 2.0) {
        throw DomainError("target " + std::to_string(target_hz) +
                          " Hz outside (0, Nyquist) at sample rate " +
                          std::to_string(sample_rate_hz));
    }
    const double omega = 2.0 * std::numbers::pi * target_hz / sample_rate_hz;
    const double coeff = 2.0 * std::cos(omega);
    double q1 = 0.0, q2 = 0.0;
    for (double s : segment) {
        const double q0 = s + coeff * q1 - q2;
        q2 = q1;
        q1 = q0;
    }
    const double n = static_cast<double>(segment.size());
    return (q1 * q1 + q2 * q2 - coeff * q1 * q2) / (n * n);
}

namespace detail {

// Goertzel at several targets in one sweep over the samples. Runs the same
// recurrence as goertzel_power, so results are bit-identical to per-target
// calls; targets at or above Nyquist yield -1 (not evaluable).
inline std::vector<double> goertzel_bank(std::span<const double> segment, double sample_rate_hz,
                                         std::span<const double> targets_hz) {
    const std::size_t m = targets_hz.size();
    std::vector<double> coeff(m, 0.0), q1(m, 0.0), q2(m, 0.0);
    std::vector<bool> active(m, false);
    for (std::size_t t = 0; t < m; ++t) {
        if (targets_hz[t] > 0.0 && targets_hz[t] < sample_rate_hz / 2.0) {
            active[t] = true;
            coeff[t] = 2.0 * std::cos(2.0 * std::numbers::pi * targets_hz[t] / sample_rate_hz);
        }
    }
    for (double s : segment) {
        for (std::size_t t = 0; t < m; ++t) {
            const double q0 = s + coeff[t] * q1[t] - q2[t];
            q2[t] = q1[t];
            q1[t] = q0;
        }
    }
    const double n2 = static_cast<double>(segment.size()) * static_cast<double>(segment.size());
    std::vector<double> powers(m);
    for (std::size_t t = 0; t < m; ++t) {
        powers[t] = active[t] ? (q1[t] * q1[t] + q2[t] * q2[t] - coeff[t] * q1[t] * q2[t]) / n2 : -1.0;
    }
    return powers;
}

// Peak offset of a parabola through three equally spaced power samples,
// in units of the spacing; 0 when the points are collinear.
inline double parabolic_offset(double left, double center, double right) {
    const double denom = left - 2.0 * center + right;
    if (denom == 0.0) return 0.0;
    double delta = 0.5 * (left - right) / denom;
    if (delta < -1.0) delta = -1.0;
    if (delta > 1.0) delta = 1.0;
    return delta;
}

}  // namespace detail

// Classifies one symbol segment against the tone alphabet. Failures are
// reported in the detection (detected_char empty), never thrown: silence
// below min_energy, ambiguous winners below min_confidence, or a segment
// too short to analyze.
inline SymbolDetection detect_symbol(std::span<const double> segment, double sample_rate_hz,
                                     const FrequencyTable& table, const DecodeParams& params) {
    params.validate();
    SymbolDetection det;

    const std::size_t margin = params.margin_samples(static_cast<int>(sample_rate_hz));
    if (segment.size() < 2 * margin + 8) return det;  // nothing analyzable
    const std::span<const double> window = segment.subspan(margin, segment.size() - 2 * margin);

    double energy = 0.0;
    for (double s : window) energy += s * s;
    energy /= static_cast<double>(window.size());
    if (energy < params.min_energy) return det;  // silence

    std::vector<double> targets(kAlphabetSize);
    for (std::size_t t = 0; t < kAlphabetSize; ++t) targets[t] = table[t].frequency_hz;
    const std::vector<double> powers = detail::goertzel_bank(window, sample_rate_hz, targets);

    std::size_t best = kAlphabetSize;
    double best_power = 0.0, second_power = 0.0;
    for (std::size_t t = 0; t < kAlphabetSize; ++t) {
        if (powers[t] < 0.0) continue;
        if (best == kAlphabetSize || powers[t] > best_power) {  // ties keep the lower frequency
            second_power = best == kAlphabetSize ? 0.0 : best_power;
            best = t;
            best_power = powers[t];
        } else if (powers[t] > second_power) {
            second_power = powers[t];
        }
    }
    if (best == kAlphabetSize || best_power <= 0.0) return det;

    const CharTone& tone = table[best];
    det.target_frequency_hz = tone.frequency_hz;
    det.power = best_power;
    det.confidence = second_power > 0.0 ? best_power / second_power
                                        : std::numeric_limits<double>::infinity();

    // Refine the frequency estimate over a +-50 cent parabola around the
    // winner; informational only, the decision is the argmax above.
    const double f_lo = tone.frequency_hz * std::exp2(-1.0 / 24.0);
    const double f_hi = tone.frequency_hz * std::exp2(1.0 / 24.0);
    if (f_hi < sample_rate_hz / 2.0) {
        const double p_lo = goertzel_power(window, sample_rate_hz, f_lo);
        const double p_hi = goertzel_power(window, sample_rate_hz, f_hi);
        det.cents_error = 50.0 * detail::parabolic_offset(p_lo, best_power, p_hi);
    }

    if (det.confidence >= params.min_confidence) det.detected_char = tone.character;
    return det;
}

// Splits the buffer into fixed frames of round((symbol + gap) * rate)
// samples and detects one symbol per frame. A final partial frame is
// analyzed if it still covers the trimmed symbol window, else dropped.
inline DecodeResult decode_audio(const AudioBuffer& buffer, const FrequencyTable& table,
                                 const DecodeParams& params) {
    params.validate();
    DecodeResult result;
    if (buffer.empty()) return result;

    const int rate = buffer.sample_rate_hz;
    if (rate < 2.0 * table.front().frequency_hz) {
        throw DomainError("sample rate " + std::to_string(rate) +
                          " Hz cannot represent the lowest tone at " +
                          std::to_string(table.front().frequency_hz) + " Hz");
    }
    const std::size_t frame = params.frame_samples(rate);
    const std::size_t symbol = params.symbol_samples(rate);
    const std::size_t margin = params.margin_samples(rate);

    for (std::size_t pos = 0; pos < buffer.size(); pos += frame) {
        const std::size_t remaining = buffer.size() - pos;
        if (remaining < frame && remaining < symbol - margin) break;  // partial too short
        const std::size_t len = remaining < symbol ? remaining : symbol;
        SymbolDetection det = detect_symbol(
            std::span<const double>(buffer.samples).subspan(pos, len), rate, table, params);
        det.index = result.detections.size();
        result.text.push_back(det.detected_char.value_or(kSubstitutionMarker));
        if (!det.detected_char) ++result.failed_count;
        result.detections.push_back(std::move(det));
    }
    result.symbol_count = result.detections.size();
    return result;
}

}  // namespace tonetext
