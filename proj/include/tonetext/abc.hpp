#pragma once

#include <cctype>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tonetext/errors.hpp"
#include "tonetext/freqmap.hpp"
#include "tonetext/synth.hpp"

namespace tonetext {

// One note token. octave_offset counts octaves relative to the ABC
// reference row (uppercase C..B, the octave of middle C): 0 renders as the
// bare uppercase letter, -1 as "X,", +1 as lowercase, +2 as "x'", and so on.
struct AbcNote {
    char pitch_letter = 'C';  // A..G
    bool sharp = false;
    int octave_offset = 0;
};

// Header + note sequence of the archival print format. The key is fixed at
// "K:none" so accidentals always apply per note.
struct AbcDocument {
    int reference_number = 1;
    std::string title = "tonetext";
    int tempo_bpm = 300;
    std::pair<int, int> unit_length{1, 4};
    std::vector<AbcNote> notes;
};

namespace detail {

// pitch class within an octave (C=0 .. B=11) -> letter and sharp flag
inline constexpr char kPitchLetter[12] = {'C', 'C', 'D', 'D', 'E', 'F',
                                          'F', 'G', 'G', 'A', 'A', 'B'};
inline constexpr bool kPitchSharp[12] = {false, true, false, true, false, false,
                                         true, false, true, false, true, false};

inline int letter_pitch_class(char letter) {
    switch (letter) {
        case 'C': return 0;
        case 'D': return 2;
        case 'E': return 4;
        case 'F': return 5;
        case 'G': return 7;
        case 'A': return 9;
        case 'B': return 11;
        default: return -1;
    }
}

}  // namespace detail

// Note for the tone `semitone_index` semitones above the 220 Hz base (A3).
inline AbcNote note_for_semitone(int semitone_index) {
    if (semitone_index < 0 || semitone_index >= kAlphabetSize) {
        throw DomainError("semitone index " + std::to_string(semitone_index) +
                          " outside [0, " + std::to_string(kAlphabetSize - 1) + "]");
    }
    const int absolute = semitone_index + 45;  // semitones above C0; A3 = 45
    const int pitch_class = absolute % 12;
    return AbcNote{detail::kPitchLetter[pitch_class], detail::kPitchSharp[pitch_class],
                   absolute / 12 - 4};
}

inline int semitone_for_note(const AbcNote& note) {
    const int pitch_class = detail::letter_pitch_class(note.pitch_letter);
    if (pitch_class < 0) throw DomainError(std::string("invalid pitch letter '") + note.pitch_letter + "'");
    return (note.octave_offset + 4) * 12 + pitch_class + (note.sharp ? 1 : 0) - 45;
}

// Canonical token spelling: sharps only; octaves up to the reference row
// use the uppercase letter with commas, octaves above it use lowercase with
// apostrophes.
inline std::string render_note(const AbcNote& note) {
    std::string token;
    if (note.sharp) token.push_back('^');
    if (note.octave_offset <= 0) {
        token.push_back(note.pitch_letter);
        token.append(static_cast<std::size_t>(-note.octave_offset), ',');
    } else {
        token.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(note.pitch_letter))));
        token.append(static_cast<std::size_t>(note.octave_offset - 1), '\'');
    }
    return token;
}

// Headers in fixed order X, T, Q, L, K, then the body wrapped at 64 tokens
// per line. Byte-deterministic for identical documents.
inline std::string render_abc(const AbcDocument& doc) {
    std::string out;
    out += "X:" + std::to_string(doc.reference_number) + "\n";
    out += "T:" + doc.title + "\n";
    out += "Q:" + std::to_string(doc.tempo_bpm) + "\n";
    out += "L:" + std::to_string(doc.unit_length.first) + "/" + std::to_string(doc.unit_length.second) + "\n";
    out += "K:none\n";
    for (std::size_t i = 0; i < doc.notes.size(); ++i) {
        out += render_note(doc.notes[i]);
        out.push_back((i + 1) % 64 == 0 || i + 1 == doc.notes.size() ? '\n' : ' ');
    }
    return out;
}

// Tempo pinned so one unit-length note spans one symbol frame.
inline int abc_tempo(const SynthParams& params) {
    return static_cast<int>(std::lround(60.0 / (params.symbol_duration_s + params.gap_duration_s) / 4.0));
}

inline AbcDocument make_abc_document(std::string_view text, const SynthParams& params) {
    params.validate();
    AbcDocument doc;
    doc.tempo_bpm = abc_tempo(params);
    doc.notes.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const int code = static_cast<unsigned char>(text[i]);
        if (code < kFirstAscii || code > kLastAscii) {
            throw FormatError("unmappable character at index " + std::to_string(i) +
                              " (code point " + std::to_string(code) + ")");
        }
        doc.notes.push_back(note_for_semitone(code - kFirstAscii));
    }
    return doc;
}

// Text -> ABC document text, one unit-length note per character.
inline std::string to_abc(std::string_view text, const SynthParams& params) {
    return render_abc(make_abc_document(text, params));
}

// Parses a document in the dialect emitted by to_abc: header lines
// ("<letter>:...") are skipped; body tokens are [^] letter [,']* in either
// octave spelling. Inverse of to_abc on its image.
inline std::string parse_abc(std::string_view document) {
    std::string text;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < document.size()) {
        std::size_t eol = document.find('\n', pos);
        if (eol == std::string_view::npos) eol = document.size();
        const std::string_view line = document.substr(pos, eol - pos);
        ++line_no;
        pos = eol + 1;

        // header line: letter immediately followed by ':'
        if (line.size() >= 2 && std::isalpha(static_cast<unsigned char>(line[0])) && line[1] == ':') {
            continue;
        }

        std::size_t col = 0;
        while (col < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[col]))) {
                ++col;
                continue;
            }
            const std::size_t token_col = col;
            AbcNote note;
            if (line[col] == '^') {
                note.sharp = true;
                ++col;
            }
            if (col >= line.size() || detail::letter_pitch_class(static_cast<char>(
                                          std::toupper(static_cast<unsigned char>(line[col])))) < 0) {
                const std::string token(line.substr(token_col, col - token_col + 1));
                throw ParseError(line_no, token_col + 1, "malformed note token '" + token + "'");
            }
            const char raw = line[col];
            note.pitch_letter = static_cast<char>(std::toupper(static_cast<unsigned char>(raw)));
            const bool lowercase = std::islower(static_cast<unsigned char>(raw));
            ++col;
            int marks = 0;
            while (col < line.size() && (line[col] == ',' || line[col] == '\'')) {
                marks += line[col] == '\'' ? 1 : -1;
                ++col;
            }
            note.octave_offset = (lowercase ? 1 : 0) + marks;

            const int semitone = semitone_for_note(note);
            if (semitone < 0 || semitone >= kAlphabetSize) {
                throw ParseError(line_no, token_col + 1,
                                 "note '" + std::string(line.substr(token_col, col - token_col)) +
                                     "' maps to semitone " + std::to_string(semitone) +
                                     " outside [0, " + std::to_string(kAlphabetSize - 1) + "]");
            }
            text.push_back(static_cast<char>(kFirstAscii + semitone));
        }
    }
    return text;
}

}  // namespace tonetext
