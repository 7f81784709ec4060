#pragma once

#include <string_view>
#include <vector>

namespace ncl {

/// Token alphabets for a coded note sequence.
enum class CodingScheme {
  midi,      // raw codes 0..127, pause = 128
  pitch,     // pitch classes 0..11 (C=0 .. B=11), pause = 12
  relative,  // offsets from the first note, pause = 1000
  change,    // successive intervals, pause = 1000
};

/// Pause marker used by the relative and change alphabets, deliberately
/// outside the interval range [-127,127].
inline constexpr int kRecodedPause = 1000;
inline constexpr int kPitchClassPause = 12;

const char* scheme_name(CodingScheme scheme);
CodingScheme scheme_from_name(std::string_view name);

/// A per-instrument token sequence under one coding scheme.
struct CodedSequence {
  CodingScheme scheme = CodingScheme::midi;
  std::vector<int> tokens;
  int pause_token = 128;

  static CodedSequence from_midi(std::vector<int> tokens);
};

/// Drops octaves: token mod 12, pause 128 -> 12. Requires the midi scheme.
CodedSequence pitch_code(const CodedSequence& seq);

/// Recodes against the first sounding note as baseline 0, so transposed
/// copies of a piece come out identical. Pauses keep their positions.
/// Requires at least one non-pause token.
CodedSequence relative_code(const CodedSequence& seq);

/// Successive intervals between sounding notes (ascending positive);
/// differences bridge across pauses, each pause emitting its own marker in
/// place. Output is one token shorter than the input. Requires at least two
/// non-pause tokens.
CodedSequence change_code(const CodedSequence& seq);

/// Applies the named scheme to a midi sequence (midi returns a copy).
CodedSequence apply_coding(const CodedSequence& midi_seq, CodingScheme scheme);

}  // namespace ncl
