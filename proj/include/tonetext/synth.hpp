#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <string_view>

#include "tonetext/audio.hpp"
#include "tonetext/errors.hpp"
#include "tonetext/freqmap.hpp"

namespace tonetext {

// Framing contract shared by the synthesizer and (mirrored) by the decoder:
// each character is symbol_duration_s of tone followed by gap_duration_s of
// silence, with raised-cosine ramps of fade_duration_s at both tone edges.
struct SynthParams {
    int sample_rate_hz = 192000;      // Nyquist 96 kHz clears the 50.2 kHz top tone
    double symbol_duration_s = 0.040;
    double gap_duration_s = 0.010;
    double fade_duration_s = 0.002;
    double amplitude = 0.8;

    void validate() const {
        if (sample_rate_hz <= 0) throw DomainError("sample rate must be positive");
        if (!(symbol_duration_s > 0.0)) throw DomainError("symbol duration must be positive");
        if (gap_duration_s < 0.0) throw DomainError("gap duration must be non-negative");
        if (fade_duration_s < 0.0) throw DomainError("fade duration must be non-negative");
        if (2.0 * fade_duration_s > symbol_duration_s) {
            throw DomainError("fades (2 x " + std::to_string(fade_duration_s) +
                              " s) exceed the symbol duration " + std::to_string(symbol_duration_s) + " s");
        }
        if (!(amplitude > 0.0) || amplitude > 1.0) throw DomainError("amplitude must be in (0, 1]");
    }

    std::size_t symbol_samples() const {
        return static_cast<std::size_t>(std::llround(symbol_duration_s * sample_rate_hz));
    }
    std::size_t gap_samples() const {
        return static_cast<std::size_t>(std::llround(gap_duration_s * sample_rate_hz));
    }
    std::size_t fade_samples() const {
        return static_cast<std::size_t>(std::llround(fade_duration_s * sample_rate_hz));
    }
    std::size_t frame_samples() const { return symbol_samples() + gap_samples(); }
};

// One windowed sine tone: round(symbol_duration_s * rate) samples of
// amplitude * sin(2 pi f t), phase starting at zero, with raised-cosine
// fade-in/out over fade_duration_s.
inline AudioBuffer synth_symbol(double frequency_hz, const SynthParams& params) {
    params.validate();
    if (!(frequency_hz > 0.0)) {
        throw DomainError("tone frequency must be positive, got " + std::to_string(frequency_hz));
    }
    if (frequency_hz >= params.sample_rate_hz / 2.0) {
        throw DomainError("tone at " + std::to_string(frequency_hz) +
                          " Hz aliases at sample rate " + std::to_string(params.sample_rate_hz) +
                          " Hz (Nyquist " + std::to_string(params.sample_rate_hz / 2.0) + " Hz)");
    }

    const std::size_t n = params.symbol_samples();
    const std::size_t nf = params.fade_samples();
    const double omega = 2.0 * std::numbers::pi * frequency_hz / params.sample_rate_hz;

    AudioBuffer out{std::vector<double>(n), params.sample_rate_hz};
    for (std::size_t k = 0; k < n; ++k) {
        double gain = params.amplitude;
        if (nf > 0) {
            if (k < nf) {
                gain *= 0.5 * (1.0 - std::cos(std::numbers::pi * static_cast<double>(k) / nf));
            } else if (k >= n - nf) {
                const std::size_t j = n - 1 - k;  // mirror of the fade-in ramp
                gain *= 0.5 * (1.0 - std::cos(std::numbers::pi * static_cast<double>(j) / nf));
            }
        }
        out.samples[k] = gain * std::sin(omega * static_cast<double>(k));
    }
    return out;
}

// Text to framed tone sequence: per character, one symbol tone followed by
// gap_duration_s of silence. Deterministic for identical inputs.
inline AudioBuffer encode_text(std::string_view text, const FrequencyTable& table,
                               const SynthParams& params) {
    params.validate();
    const std::size_t frame = params.frame_samples();

    AudioBuffer out{{}, params.sample_rate_hz};
    out.samples.reserve(text.size() * frame);
    for (std::size_t i = 0; i < text.size(); ++i) {
        const int code = static_cast<unsigned char>(text[i]);
        if (code < kFirstAscii || code > kLastAscii) {
            throw FormatError("unmappable character at index " + std::to_string(i) +
                              " (code point " + std::to_string(code) + ")");
        }
        const AudioBuffer symbol = synth_symbol(table.at_ascii(code).frequency_hz, params);
        out.samples.insert(out.samples.end(), symbol.samples.begin(), symbol.samples.end());
        out.samples.insert(out.samples.end(), params.gap_samples(), 0.0);
    }
    return out;
}

}  // namespace tonetext
