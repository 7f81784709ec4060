#pragma once

#include <string>
#include <vector>

#include "rational.hpp"

namespace ncl {

/// Synthetic token marking a rest; one past the top MIDI note code.
inline constexpr int kPauseCode = 128;
/// MIDI note codes 0..127 plus the pause token.
inline constexpr int kNoteSymbols = 129;

/// One annotated note: a time span plus its position in the metrical
/// structure. Beat is the exact rational offset within the measure, on the
/// [0,1) per-measure scale.
struct NoteLabel {
  double start_time = 0.0;
  double end_time = 0.0;
  int instrument = 0;  // MIDI instrument code, 1..128
  int pitch = 0;       // MIDI note code, 0..127
  long long measure = 0;
  Rational beat;
  std::string note_value;  // optional, e.g. "Quarter"

  /// Global metrical position: measure + beat.
  Rational onset() const { return Rational::from_int(measure) + beat; }
};

struct PieceMetadata {
  int piece_id = 0;
  std::string composer;
  std::string title;
  std::string movement;
  std::string ensemble;
};

/// One step of an instrument stream: every pitch sounding at one exact
/// onset. A pause is the singleton {kPauseCode}.
struct NoteEvent {
  Rational onset;
  std::vector<int> pitches;  // sorted, unique, within [0,128]

  bool is_pause() const { return pitches.size() == 1 && pitches[0] == kPauseCode; }
};

}  // namespace ncl
