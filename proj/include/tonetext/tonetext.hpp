#pragma once

// Umbrella header for the text <-> tone codec library.

#include "tonetext/abc.hpp"
#include "tonetext/analysis.hpp"
#include "tonetext/audio.hpp"
#include "tonetext/channel.hpp"
#include "tonetext/decode.hpp"
#include "tonetext/errors.hpp"
#include "tonetext/freqmap.hpp"
#include "tonetext/reference_table.hpp"
#include "tonetext/selftest.hpp"
#include "tonetext/synth.hpp"
#include "tonetext/version.hpp"
#include "tonetext/wav.hpp"
