#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "tonetext/audio.hpp"
#include "tonetext/errors.hpp"

namespace tonetext {

namespace detail {

inline void put_u16(std::ostream& out, std::uint16_t v) {
    const char bytes[2] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff)};
    out.write(bytes, 2);
}

inline void put_u32(std::ostream& out, std::uint32_t v) {
    const char bytes[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                           static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
    out.write(bytes, 4);
}

inline std::uint16_t get_u16(std::istream& in, const char* field) {
    unsigned char b[2];
    if (!in.read(reinterpret_cast<char*>(b), 2)) throw FormatError(std::string("truncated ") + field);
    return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
}

inline std::uint32_t get_u32(std::istream& in, const char* field) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4)) throw FormatError(std::string("truncated ") + field);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

inline std::string get_tag(std::istream& in, const char* field) {
    char tag[4];
    if (!in.read(tag, 4)) throw FormatError(std::string("truncated ") + field);
    return std::string(tag, 4);
}

}  // namespace detail

// Quantization used by the 16-bit PCM interchange format.
inline std::int16_t quantize_sample(double s) {
    long v = std::lround(s * 32767.0);
    if (v < -32768) v = -32768;
    if (v > 32767) v = 32767;
    return static_cast<std::int16_t>(v);
}

// Emits RIFF/WAVE: format tag 1 (integer PCM), mono, 16 bits per sample,
// little-endian. Returns the number of bytes written (44 + 2 per sample).
inline std::size_t write_wav(const AudioBuffer& buffer, std::ostream& out) {
    const std::uint32_t data_size = static_cast<std::uint32_t>(buffer.samples.size() * 2);

    out.write("RIFF", 4);
    detail::put_u32(out, 36 + data_size);
    out.write("WAVE", 4);
    out.write("fmt ", 4);
    detail::put_u32(out, 16);                                            // fmt chunk size
    detail::put_u16(out, 1);                                             // integer PCM
    detail::put_u16(out, 1);                                             // mono
    detail::put_u32(out, static_cast<std::uint32_t>(buffer.sample_rate_hz));
    detail::put_u32(out, static_cast<std::uint32_t>(buffer.sample_rate_hz) * 2u);  // byte rate
    detail::put_u16(out, 2);                                             // block align
    detail::put_u16(out, 16);                                            // bits per sample
    out.write("data", 4);
    detail::put_u32(out, data_size);
    for (double s : buffer.samples) {
        detail::put_u16(out, static_cast<std::uint16_t>(quantize_sample(s)));
    }
    if (!out) throw IoError("write failure while emitting WAV data");
    return 44 + static_cast<std::size_t>(data_size);
}

// Reads mono 16-bit integer PCM at any sample rate; skips unknown chunks
// before the data chunk. Samples are dequantized by s / 32768.
inline AudioBuffer read_wav(std::istream& in) {
    if (detail::get_tag(in, "RIFF header") != "RIFF") throw FormatError("missing RIFF tag");
    detail::get_u32(in, "RIFF size");
    if (detail::get_tag(in, "WAVE header") != "WAVE") throw FormatError("missing WAVE tag");

    bool have_fmt = false;
    std::uint32_t sample_rate = 0;
    while (true) {
        char tag_bytes[4];
        if (!in.read(tag_bytes, 4)) throw FormatError("missing data chunk");
        const std::string tag(tag_bytes, 4);
        const std::uint32_t size = detail::get_u32(in, "chunk size");

        if (tag == "fmt ") {
            if (size < 16) throw FormatError("fmt chunk too small");
            const std::uint16_t format = detail::get_u16(in, "format tag");
            if (format != 1) throw FormatError("unsupported format tag=" + std::to_string(format));
            const std::uint16_t channels = detail::get_u16(in, "channel count");
            if (channels != 1) throw FormatError("channels=" + std::to_string(channels) + ", expected mono");
            sample_rate = detail::get_u32(in, "sample rate");
            detail::get_u32(in, "byte rate");
            detail::get_u16(in, "block align");
            const std::uint16_t bits = detail::get_u16(in, "bits per sample");
            if (bits != 16) throw FormatError("bits_per_sample=" + std::to_string(bits) + ", expected 16");
            if (size > 16) in.ignore(size - 16 + (size % 2));
            have_fmt = true;
        } else if (tag == "data") {
            if (!have_fmt) throw FormatError("data chunk before fmt chunk");
            AudioBuffer buffer{{}, static_cast<int>(sample_rate)};
            const std::size_t count = size / 2;
            buffer.samples.resize(count);
            for (std::size_t i = 0; i < count; ++i) {
                const std::int16_t v = static_cast<std::int16_t>(detail::get_u16(in, "data chunk (truncated)"));
                buffer.samples[i] = static_cast<double>(v) / 32768.0;
            }
            return buffer;
        } else {
            in.ignore(size + (size % 2));  // chunks are word-aligned
            if (!in) throw FormatError("truncated chunk '" + tag + "'");
        }
    }
}

inline std::size_t write_wav_file(const AudioBuffer& buffer, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    const std::size_t n = write_wav(buffer, out);
    out.flush();
    if (!out) throw IoError("write failure on " + path.string());
    return n;
}

inline AudioBuffer read_wav_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string() + " for reading");
    return read_wav(in);
}

}  // namespace tonetext
