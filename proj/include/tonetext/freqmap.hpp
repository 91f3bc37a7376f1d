#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>

#include "tonetext/errors.hpp"

namespace tonetext {

inline constexpr int kFirstAscii = 32;   // space
inline constexpr int kLastAscii = 126;   // tilde
inline constexpr int kAlphabetSize = kLastAscii - kFirstAscii + 1;  // 95

// Base tone assigned to ASCII 32; every following code is one equal-tempered
// semitone (ratio 2^(1/12)) higher.
inline constexpr double kBaseFrequencyHz = 220.0;

// Adult hearing limit; tones above it are machine-only.
inline constexpr double kUltrasonicLimitHz = 20000.0;

// One playable character: ASCII code, semitone index above the base tone,
// carrier frequency and human-facing note name.
struct CharTone {
    int ascii_code = 0;
    char character = '\0';
    int semitone_index = 0;
    double frequency_hz = 0.0;
    std::string note_name;
    bool ultrasonic = false;
};

// f = 220 * 2^((ascii - 32) / 12) Hz.
inline double frequency_of(int ascii_code) {
    if (ascii_code < kFirstAscii || ascii_code > kLastAscii) {
        throw DomainError("ascii code " + std::to_string(ascii_code) +
                          " outside the printable range [32, 126]");
    }
    return kBaseFrequencyHz * std::exp2((ascii_code - kFirstAscii) / 12.0);
}

// Scientific pitch name of the tone `semitone_index` semitones above the
// base. 220 Hz is A3; spelling is sharps-only and the octave number bumps
// at each C.
inline std::string note_name(int semitone_index) {
    if (semitone_index < 0 || semitone_index >= kAlphabetSize) {
        throw DomainError("semitone index " + std::to_string(semitone_index) +
                          " outside [0, " + std::to_string(kAlphabetSize - 1) + "]");
    }
    static constexpr std::array<const char*, 12> kPitchClasses = {
        "C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B"};
    const int absolute = semitone_index + 45;  // A3 is 45 semitones above C0
    return std::string(kPitchClasses[absolute % 12]) + std::to_string(absolute / 12);
}

// The canonical 95-entry character/frequency mapping.
class FrequencyTable {
public:
    using Entries = std::array<CharTone, kAlphabetSize>;

    explicit FrequencyTable(Entries entries) : entries_(std::move(entries)) {}

    const Entries& entries() const { return entries_; }
    const CharTone& operator[](std::size_t semitone_index) const { return entries_[semitone_index]; }

    const CharTone& at_ascii(int ascii_code) const {
        if (ascii_code < kFirstAscii || ascii_code > kLastAscii) {
            throw DomainError("ascii code " + std::to_string(ascii_code) +
                              " outside the printable range [32, 126]");
        }
        return entries_[static_cast<std::size_t>(ascii_code - kFirstAscii)];
    }

    const CharTone& front() const { return entries_.front(); }
    const CharTone& back() const { return entries_.back(); }
    static constexpr std::size_t size() { return kAlphabetSize; }

    Entries::const_iterator begin() const { return entries_.begin(); }
    Entries::const_iterator end() const { return entries_.end(); }

private:
    Entries entries_;
};

inline FrequencyTable build_table() {
    FrequencyTable::Entries entries;
    for (int i = 0; i < kAlphabetSize; ++i) {
        const int ascii = kFirstAscii + i;
        const double f = frequency_of(ascii);
        entries[static_cast<std::size_t>(i)] = CharTone{
            ascii, static_cast<char>(ascii), i, f, note_name(i), f > kUltrasonicLimitHz};
    }
    return FrequencyTable(std::move(entries));
}

struct NearestChar {
    CharTone tone;
    double cents_error = 0.0;  // signed, frequency relative to the chosen tone
};

// Quantizes a frequency to the closest table entry in cents (geometric
// distance). Frequencies outside the table clamp to the end entries, with
// the misfit reported in cents_error.
inline NearestChar nearest_char(const FrequencyTable& table, double frequency_hz) {
    if (!(frequency_hz > 0.0)) {
        throw DomainError("frequency must be positive, got " + std::to_string(frequency_hz));
    }
    const double cents_above_base = 1200.0 * std::log2(frequency_hz / kBaseFrequencyHz);
    long index = std::lround(cents_above_base / 100.0);
    if (index < 0) index = 0;
    if (index > kAlphabetSize - 1) index = kAlphabetSize - 1;
    const CharTone& tone = table[static_cast<std::size_t>(index)];
    return NearestChar{tone, cents_above_base - 100.0 * static_cast<double>(index)};
}

// log2(highest / lowest frequency) over a contiguous range of entries.
inline double octave_span(std::span<const CharTone> entries) {
    if (entries.empty()) {
        throw DomainError("octave_span requires at least one entry");
    }
    return std::log2(entries.back().frequency_hz / entries.front().frequency_hz);
}

inline double octave_span(const FrequencyTable& table) {
    return octave_span(std::span<const CharTone>(table.entries()));
}

}  // namespace tonetext
