#pragma once

#include <cstddef>
#include <vector>

namespace tonetext {

// Mono PCM audio held as real samples, nominally in [-1, 1].
struct AudioBuffer {
    std::vector<double> samples;
    int sample_rate_hz = 0;

    std::size_t size() const { return samples.size(); }
    bool empty() const { return samples.empty(); }
    double duration_s() const {
        return sample_rate_hz > 0 ? static_cast<double>(samples.size()) / sample_rate_hz : 0.0;
    }
    double nyquist_hz() const { return sample_rate_hz / 2.0; }

    // Mean squared amplitude; 0 for an empty buffer.
    double mean_power() const {
        if (samples.empty()) return 0.0;
        double acc = 0.0;
        for (double s : samples) acc += s * s;
        return acc / static_cast<double>(samples.size());
    }
};

}  // namespace tonetext
