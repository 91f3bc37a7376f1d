#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tonetext/audio.hpp"
#include "tonetext/decode.hpp"
#include "tonetext/errors.hpp"

namespace tonetext {

// Simulated transmitter/medium/receiver chain, applied in the fixed order
// gain -> low-pass -> additive noise. All stages are deterministic given
// the seed.
struct ChannelConfig {
    std::optional<double> snr_db;             // absent = noiseless
    std::optional<double> lowpass_cutoff_hz;  // absent = full band
    double gain = 1.0;
    std::uint64_t seed = 0;
    int fir_taps = 511;
};

// Tap count for the 20 kHz human-audibility preset. The first ultrasonic
// tone sits 5.5% above the cutoff; this length puts it deep enough into
// the Hamming stopband that its residual falls below the decoder's
// silence gate.
inline constexpr int kAudibilityFirTaps = 2047;

// Channel presenting only the human-audible band: 20 kHz low-pass,
// optional noise.
inline ChannelConfig human_band_channel(std::optional<double> snr_db = std::nullopt,
                                        std::uint64_t seed = 0) {
    return ChannelConfig{snr_db, kUltrasonicLimitHz, 1.0, seed, kAudibilityFirTaps};
}

namespace detail {

// splitmix64: the documented noise generator. state advances by the
// constant 0x9E3779B97F4A7C15; each output is the finalizing mix below.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in (0, 1]: 53-bit mantissa, zero excluded
    double next_unit_open() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }
    // uniform in [0, 1)
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Standard normal deviates via the Box-Muller transform over splitmix64
// uniforms; pairs are consumed cosine-first.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = rng_.next_unit_open();
        const double u2 = rng_.next_unit();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    SplitMix64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace detail

// Adds zero-mean white Gaussian noise with variance signal_power /
// 10^(snr_db / 10), signal_power being the buffer's mean squared
// amplitude. Pure function of (buffer, snr_db, seed).
inline AudioBuffer apply_awgn(const AudioBuffer& buffer, double snr_db, std::uint64_t seed) {
    if (buffer.empty()) throw DomainError("cannot add noise to an empty buffer");
    const double sigma = std::sqrt(buffer.mean_power() / std::pow(10.0, snr_db / 10.0));
    detail::GaussianSource noise(seed);
    AudioBuffer out = buffer;
    for (double& s : out.samples) s += sigma * noise.next();
    return out;
}

namespace detail {

// Hamming-windowed sinc taps, normalized to unity gain at DC.
inline std::vector<double> lowpass_taps(double cutoff_hz, int taps, int sample_rate_hz) {
    const int mid = (taps - 1) / 2;
    const double fc = cutoff_hz / sample_rate_hz;
    std::vector<double> h(static_cast<std::size_t>(taps));
    double sum = 0.0;
    for (int n = 0; n < taps; ++n) {
        const double x = 2.0 * fc * (n - mid);
        const double sinc = x == 0.0 ? 1.0 : std::sin(std::numbers::pi * x) / (std::numbers::pi * x);
        const double window = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * n / (taps - 1));
        h[static_cast<std::size_t>(n)] = 2.0 * fc * sinc * window;
        sum += h[static_cast<std::size_t>(n)];
    }
    for (double& v : h) v /= sum;
    return h;
}

}  // namespace detail

// Linear-phase FIR low-pass, applied zero-phase by compensating the
// center-tap delay: output is aligned to the input timeline, same length,
// with zero padding at the edges.
inline AudioBuffer apply_lowpass(const AudioBuffer& buffer, double cutoff_hz, int fir_taps) {
    if (buffer.sample_rate_hz <= 0) throw DomainError("buffer has no sample rate");
    if (!(cutoff_hz > 0.0) || cutoff_hz >= buffer.sample_rate_hz / 2.0) {
        throw DomainError("cutoff " + std::to_string(cutoff_hz) +
                          " Hz outside (0, Nyquist) at sample rate " +
                          std::to_string(buffer.sample_rate_hz));
    }
    if (fir_taps <= 0 || fir_taps % 2 == 0) {
        throw DomainError("FIR length must be odd and positive, got " + std::to_string(fir_taps));
    }

    const std::vector<double> h = detail::lowpass_taps(cutoff_hz, fir_taps, buffer.sample_rate_hz);
    const std::ptrdiff_t mid = (fir_taps - 1) / 2;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(buffer.size());

    AudioBuffer out{std::vector<double>(buffer.size(), 0.0), buffer.sample_rate_hz};
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, k - mid);
        const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(n - 1, k + mid);
        double acc = 0.0;
        for (std::ptrdiff_t i = lo; i <= hi; ++i) {
            acc += buffer.samples[static_cast<std::size_t>(i)] *
                   h[static_cast<std::size_t>(mid + (i - k))];
        }
        out.samples[static_cast<std::size_t>(k)] = acc;
    }
    return out;
}

// gain, then low-pass (if set), then noise (if set).
inline AudioBuffer apply_channel(const AudioBuffer& buffer, const ChannelConfig& config) {
    if (!(config.gain > 0.0)) throw DomainError("gain must be positive");
    AudioBuffer out = buffer;
    if (config.gain != 1.0) {
        for (double& s : out.samples) s *= config.gain;
    }
    if (config.lowpass_cutoff_hz) {
        out = apply_lowpass(out, *config.lowpass_cutoff_hz, config.fir_taps);
    }
    if (config.snr_db) {
        out = apply_awgn(out, *config.snr_db, config.seed);
    }
    return out;
}

// Symbol error rate of a decode against the transmitted text. confusion
// counts mismatched (sent, received) pairs only.
struct SerReport {
    std::size_t total = 0;
    std::size_t errors = 0;
    double ser = 0.0;
    std::map<std::pair<char, char>, std::size_t> confusion;
};

inline SerReport measure_ser(std::string_view sent, const DecodeResult& received) {
    if (sent.size() != received.symbol_count) {
        throw DomainError("alignment: sent " + std::to_string(sent.size()) +
                          " symbols but decoded " + std::to_string(received.symbol_count));
    }
    SerReport report;
    report.total = sent.size();
    for (std::size_t i = 0; i < sent.size(); ++i) {
        if (received.text[i] != sent[i]) {
            ++report.errors;
            ++report.confusion[{sent[i], received.text[i]}];
        }
    }
    report.ser = report.total == 0 ? 0.0 : static_cast<double>(report.errors) / report.total;
    return report;
}

}  // namespace tonetext
