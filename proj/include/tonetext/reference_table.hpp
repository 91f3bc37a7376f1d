#pragma once

#include <array>

#include "tonetext/freqmap.hpp"

namespace tonetext {

// Reference frequencies for ASCII 32..126, printed at two decimals, as
// published for the 220 Hz equal-temperament character mapping. The
// self-test and golden-table checks compare the computed table against
// these values at the table's printed precision (+-0.01 Hz).
inline constexpr std::array<double, kAlphabetSize> kReferenceFrequenciesHz = {
    220.00, 233.08, 246.94, 261.63, 277.18,
    293.66, 311.13, 329.63, 349.23, 369.99,
    392.00, 415.30, 440.00, 466.16, 493.88,
    523.25, 554.37, 587.33, 622.25, 659.26,
    698.46, 739.99, 783.99, 830.61, 880.00,
    932.33, 987.77, 1046.50, 1108.73, 1174.66,
    1244.51, 1318.51, 1396.91, 1479.98, 1567.98,
    1661.22, 1760.00, 1864.66, 1975.53, 2093.00,
    2217.46, 2349.32, 2489.02, 2637.02, 2793.83,
    2959.96, 3135.96, 3322.44, 3520.00, 3729.31,
    3951.07, 4186.01, 4434.92, 4698.64, 4978.03,
    5274.04, 5587.65, 5919.91, 6271.93, 6644.88,
    7040.00, 7458.62, 7902.13, 8372.02, 8869.84,
    9397.27, 9956.06, 10548.08, 11175.30, 11839.82,
    12543.85, 13289.75, 14080.00, 14917.24, 15804.27,
    16744.04, 17739.69, 18794.55, 19912.13, 21096.16,
    22350.61, 23679.64, 25087.71, 26579.50, 28160.00,
    29834.48, 31608.53, 33488.07, 35479.38, 37589.09,
    39824.25, 42192.33, 44701.21, 47359.29, 50175.42,
};

}  // namespace tonetext
