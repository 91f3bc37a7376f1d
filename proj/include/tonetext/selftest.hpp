#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "tonetext/abc.hpp"
#include "tonetext/channel.hpp"
#include "tonetext/decode.hpp"
#include "tonetext/freqmap.hpp"
#include "tonetext/reference_table.hpp"
#include "tonetext/synth.hpp"

namespace tonetext {

struct SelfTestCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SelfTestReport {
    std::vector<SelfTestCheck> checks;
    bool all_passed() const {
        for (const auto& c : checks) {
            if (!c.passed) return false;
        }
        return true;
    }
};

// Computed table vs the embedded two-decimal reference, at the reference's
// printed precision. The expected values are injectable so the failure
// path is testable.
inline SelfTestCheck check_golden_table(std::span<const double> expected_hz) {
    SelfTestCheck check{"golden-table", true, ""};
    const FrequencyTable table = build_table();
    if (expected_hz.size() != table.size()) {
        return {"golden-table", false, "expected 95 reference rows"};
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
        const double diff = std::abs(table[i].frequency_hz - expected_hz[i]);
        if (diff > 0.01) {
            check.passed = false;
            check.detail = "ascii " + std::to_string(table[i].ascii_code) + ": computed " +
                           std::to_string(table[i].frequency_hz) + " Hz vs reference " +
                           std::to_string(expected_hz[i]) + " Hz";
            break;
        }
    }
    return check;
}

inline std::string full_alphabet() {
    std::string s;
    for (int c = kFirstAscii; c <= kLastAscii; ++c) s.push_back(static_cast<char>(c));
    return s;
}

// Encode + decode of all 95 characters at default framing.
inline SelfTestCheck check_round_trip() {
    const FrequencyTable table = build_table();
    const std::string sent = full_alphabet();
    const DecodeResult result = decode_audio(encode_text(sent, table, {}), table, {});
    if (result.text == sent && result.failed_count == 0) {
        return {"round-trip-95", true, ""};
    }
    return {"round-trip-95", false,
            std::to_string(result.failed_count) + " failed symbols, got \"" + result.text + "\""};
}

inline SelfTestCheck check_abc_round_trip() {
    const std::string sent = full_alphabet();
    const std::string recovered = parse_abc(to_abc(sent, {}));
    if (recovered == sent) return {"abc-round-trip", true, ""};
    return {"abc-round-trip", false, "recovered \"" + recovered + "\""};
}

// The 20 kHz low-pass channel must split the alphabet exactly at the
// ultrasonic boundary: ASCII 32..110 decodable, 111..126 not.
inline SelfTestCheck check_ultrasonic_partition() {
    const FrequencyTable table = build_table();
    const std::string sent = full_alphabet();
    const AudioBuffer received = apply_channel(encode_text(sent, table, {}), human_band_channel());
    const DecodeResult result = decode_audio(received, table, {});
    if (result.symbol_count != sent.size()) {
        return {"ultrasonic-partition", false, "symbol count mismatch"};
    }
    for (std::size_t i = 0; i < sent.size(); ++i) {
        const bool expect_pass = !table[i].ultrasonic;
        const bool passed = result.text[i] == sent[i];
        if (passed != expect_pass) {
            return {"ultrasonic-partition", false,
                    std::string("ascii ") + std::to_string(kFirstAscii + static_cast<int>(i)) +
                        (expect_pass ? " lost below" : " survived above") + " the 20 kHz boundary"};
        }
    }
    return {"ultrasonic-partition", true, ""};
}

inline SelfTestReport run_selftest() {
    SelfTestReport report;
    report.checks.push_back(check_golden_table(kReferenceFrequenciesHz));
    report.checks.push_back(check_round_trip());
    report.checks.push_back(check_abc_round_trip());
    report.checks.push_back(check_ultrasonic_partition());
    return report;
}

}  // namespace tonetext
