#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "tonetext/audio.hpp"
#include "tonetext/decode.hpp"
#include "tonetext/errors.hpp"
#include "tonetext/freqmap.hpp"
#include "tonetext/synth.hpp"

namespace tonetext {

namespace detail {

// In-place iterative radix-2 FFT; size must be a power of two.
inline void fft(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = -2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> step(std::cos(angle), std::sin(angle));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= step;
            }
        }
    }
}

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// periodic Hann window
inline std::vector<double> hann_window(std::size_t n) {
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / n));
    }
    return w;
}

}  // namespace detail

// Time x frequency magnitudes from a sliding Hann-windowed DFT, normalized
// by the window's coherent gain (sum of window values), so a bin-centered
// sine of amplitude A peaks at A/2.
struct Spectrogram {
    std::vector<std::vector<double>> frames;  // [frame][bin], bin count = window_size/2 + 1
    int window_size = 0;
    int hop = 0;
    int sample_rate_hz = 0;

    std::size_t frame_count() const { return frames.size(); }
    std::size_t bin_count() const { return static_cast<std::size_t>(window_size) / 2 + 1; }
    double bin_frequency_hz(std::size_t bin) const {
        return static_cast<double>(bin) * sample_rate_hz / window_size;
    }
};

inline Spectrogram stft(const AudioBuffer& buffer, int window_size, int hop) {
    if (window_size < 64 || !detail::is_power_of_two(static_cast<std::size_t>(window_size))) {
        throw DomainError("window size must be a power of two >= 64, got " + std::to_string(window_size));
    }
    if (hop <= 0 || hop > window_size) {
        throw DomainError("hop must be in (0, window size], got " + std::to_string(hop));
    }
    if (buffer.size() < static_cast<std::size_t>(window_size)) {
        throw DomainError("buffer shorter than one analysis window (" +
                          std::to_string(buffer.size()) + " < " + std::to_string(window_size) + ")");
    }

    const std::size_t n = static_cast<std::size_t>(window_size);
    const std::vector<double> window = detail::hann_window(n);
    const double coherent_gain = std::accumulate(window.begin(), window.end(), 0.0);

    Spectrogram spec{{}, window_size, hop, buffer.sample_rate_hz};
    const std::size_t frame_count = (buffer.size() - n) / static_cast<std::size_t>(hop) + 1;
    spec.frames.reserve(frame_count);

    std::vector<std::complex<double>> workspace(n);
    for (std::size_t f = 0; f < frame_count; ++f) {
        const std::size_t offset = f * static_cast<std::size_t>(hop);
        for (std::size_t i = 0; i < n; ++i) {
            workspace[i] = buffer.samples[offset + i] * window[i];
        }
        detail::fft(workspace);
        std::vector<double> magnitudes(n / 2 + 1);
        for (std::size_t b = 0; b <= n / 2; ++b) {
            magnitudes[b] = std::abs(workspace[b]) / coherent_gain;
        }
        spec.frames.push_back(std::move(magnitudes));
    }
    return spec;
}

namespace detail {

// black -> red -> yellow -> white ramp over t in [0, 1]
inline void hot_color(double t, unsigned char rgb[3]) {
    const auto channel = [](double v) {
        v = std::clamp(v, 0.0, 1.0);
        return static_cast<unsigned char>(std::lround(255.0 * v));
    };
    rgb[0] = channel(3.0 * t);
    rgb[1] = channel(3.0 * t - 1.0);
    rgb[2] = channel(3.0 * t - 2.0);
}

inline std::vector<std::uint8_t> ppm_image(std::size_t width, std::size_t height,
                                           std::span<const unsigned char> rgb) {
    const std::string header =
        "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    std::vector<std::uint8_t> bytes(header.begin(), header.end());
    bytes.insert(bytes.end(), rgb.begin(), rgb.end());
    return bytes;
}

}  // namespace detail

// Binary portable pixmap of the spectrogram: one column per frame, one row
// per bin with frequency increasing upward, intensity 20*log10(mag/max)
// mapped from [db_floor, 0] dB onto the hot color ramp.
inline std::vector<std::uint8_t> render_spectrogram(const Spectrogram& spec, double db_floor = -80.0) {
    if (spec.frames.empty()) throw DomainError("empty spectrogram");
    if (!(db_floor < 0.0)) throw DomainError("db floor must be negative");

    double max_magnitude = 0.0;
    for (const auto& frame : spec.frames) {
        for (double m : frame) max_magnitude = std::max(max_magnitude, m);
    }
    if (max_magnitude <= 0.0) throw DomainError("silent input");

    const std::size_t width = spec.frame_count();
    const std::size_t height = spec.bin_count();
    std::vector<unsigned char> rgb(width * height * 3);
    for (std::size_t row = 0; row < height; ++row) {
        const std::size_t bin = height - 1 - row;  // top row = highest frequency
        for (std::size_t col = 0; col < width; ++col) {
            const double magnitude = spec.frames[col][bin];
            double t = 0.0;
            if (magnitude > 0.0) {
                const double db = 20.0 * std::log10(magnitude / max_magnitude);
                t = std::clamp(1.0 - db / db_floor, 0.0, 1.0);
            }
            detail::hot_color(t, &rgb[(row * width + col) * 3]);
        }
    }
    return detail::ppm_image(width, height, rgb);
}

// Tonal grid: one column per symbol frame, one row per alphabet character
// (ascending ASCII from the top), grayscale intensity = per-symbol Goertzel
// power normalized within the column. Framing matches decode_audio, so the
// brightest cell of a column is the decoder's pick.
inline std::vector<std::uint8_t> render_tone_grid(const AudioBuffer& buffer,
                                                  const FrequencyTable& table,
                                                  const DecodeParams& params) {
    params.validate();
    if (buffer.empty()) throw DomainError("empty buffer");
    const int rate = buffer.sample_rate_hz;
    if (rate < 2.0 * table.front().frequency_hz) {
        throw DomainError("sample rate " + std::to_string(rate) +
                          " Hz cannot represent the lowest tone at " +
                          std::to_string(table.front().frequency_hz) + " Hz");
    }

    std::vector<double> targets(kAlphabetSize);
    for (std::size_t t = 0; t < kAlphabetSize; ++t) targets[t] = table[t].frequency_hz;

    const std::size_t frame = params.frame_samples(rate);
    const std::size_t symbol = params.symbol_samples(rate);
    const std::size_t margin = params.margin_samples(rate);

    std::vector<std::vector<double>> columns;
    for (std::size_t pos = 0; pos < buffer.size(); pos += frame) {
        const std::size_t remaining = buffer.size() - pos;
        if (remaining < frame && remaining < symbol - margin) break;
        const std::size_t len = remaining < symbol ? remaining : symbol;
        std::vector<double> powers(kAlphabetSize, 0.0);
        if (len >= 2 * margin + 8) {
            const auto window =
                std::span<const double>(buffer.samples).subspan(pos + margin, len - 2 * margin);
            powers = detail::goertzel_bank(window, rate, targets);
            for (double& p : powers) p = std::max(p, 0.0);  // skipped targets render dark
        }
        columns.push_back(std::move(powers));
    }
    if (columns.empty()) throw DomainError("buffer shorter than one symbol frame");

    const std::size_t width = columns.size();
    const std::size_t height = kAlphabetSize;
    std::vector<unsigned char> rgb(width * height * 3);
    for (std::size_t col = 0; col < width; ++col) {
        const double column_max = *std::max_element(columns[col].begin(), columns[col].end());
        for (std::size_t row = 0; row < height; ++row) {
            const double t = column_max > 0.0 ? columns[col][row] / column_max : 0.0;
            const unsigned char v = static_cast<unsigned char>(std::lround(255.0 * t));
            unsigned char* px = &rgb[(row * width + col) * 3];
            px[0] = px[1] = px[2] = v;
        }
    }
    return detail::ppm_image(width, height, rgb);
}

// Throughput of the framing against a configurable speech baseline.
struct RateReport {
    double bits_per_symbol = 0.0;       // log2(95)
    double symbols_per_second = 0.0;    // 1 / (symbol + gap)
    double bits_per_second = 0.0;
    double speech_baseline_bps = 0.0;
    bool exceeds_speech = false;
};

inline constexpr double kDefaultSpeechBaselineBps = 39.0;

inline RateReport info_rate(const SynthParams& params,
                            double speech_baseline_bps = kDefaultSpeechBaselineBps) {
    params.validate();
    if (!(speech_baseline_bps > 0.0)) throw DomainError("speech baseline must be positive");
    RateReport report;
    report.bits_per_symbol = std::log2(static_cast<double>(kAlphabetSize));
    report.symbols_per_second = 1.0 / (params.symbol_duration_s + params.gap_duration_s);
    report.bits_per_second = report.bits_per_symbol * report.symbols_per_second;
    report.speech_baseline_bps = speech_baseline_bps;
    report.exceeds_speech = report.bits_per_second > speech_baseline_bps;
    return report;
}

}  // namespace tonetext
