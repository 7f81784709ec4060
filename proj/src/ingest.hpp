#pragma once

#include <filesystem>
#include <map>
#include <vector>

#include "interval_tree.hpp"
#include "labels.hpp"
#include "rational.hpp"

namespace ncl {

/// Parses a per-piece label CSV with header
/// `start_time,end_time,instrument,note,measure,beat,note_value`.
/// Row order is preserved. Rows that violate label invariants raise
/// Errc::malformed_row with their line number; a file with no data rows
/// raises Errc::empty_file.
std::vector<NoteLabel> parse_label_file(const std::filesystem::path& path);

/// Serializes labels back to the same CSV schema (beats as exact decimals).
void write_label_file(const std::filesystem::path& path, const std::vector<NoteLabel>& labels);

/// Parses `metadata.csv` (header `id,composer,title,movement,ensemble`).
/// An empty file yields an empty map; duplicate ids raise Errc::duplicate_id.
std::map<int, PieceMetadata> parse_metadata(const std::filesystem::path& path);

/// Piecewise-linear map from label time units (seconds or sample indices;
/// treated as opaque ordered reals) to the global beat axis, fitted from
/// every label's (start_time, measure + beat) pair. Only note *ends* need
/// this map; onsets always come from the exact measure/beat annotations.
class BeatMap {
 public:
  static BeatMap from_labels(const std::vector<NoteLabel>& labels);
  double beat_at(double time) const;

 private:
  std::vector<double> times_;  // strictly increasing
  std::vector<double> beats_;  // non-decreasing
};

/// Instrument event carrying the beat-domain end needed by the pause rules.
struct TimedEvent {
  NoteEvent event;
  double end_beat = 0.0;  // for pauses, the onset itself
  long long measure = 0;  // measure of the onset
};

/// Earliest onset and latest beat-domain end over all instruments, per measure.
struct MeasureBounds {
  Rational first_onset;
  double last_end = 0.0;
};

/// Groups labels into per-instrument event lists. Labels of one instrument
/// share a NoteEvent iff their global onsets are exactly equal as rationals.
std::map<int, std::vector<TimedEvent>> group_instrument_events(
    const std::vector<NoteLabel>& labels, const BeatMap& map);

std::map<long long, MeasureBounds> compute_measure_bounds(const std::vector<NoteLabel>& labels,
                                                          const BeatMap& map);

/// Inserts one pause wherever an instrument enters a measure later than the
/// corpus-wide start (or leaves earlier than the corpus-wide end) by more
/// than the threshold, including measures the instrument skips entirely.
/// Never inserts next to an existing pause, so the pass is idempotent.
void add_measure_pauses(std::vector<TimedEvent>& stream,
                        const std::map<long long, MeasureBounds>& bounds,
                        const Rational& pause_threshold);

/// Inserts one pause between consecutive sounding events whose beat-domain
/// gap exceeds the threshold. Pairs touching a pause are skipped, so the
/// pass is idempotent.
void add_gap_pauses(std::vector<TimedEvent>& stream, const Rational& pause_threshold);

/// Full §-style extraction: group, add measure-boundary pauses, add
/// between-note pauses. Streams are strictly ordered by onset and never
/// contain two consecutive pauses.
std::map<int, std::vector<NoteEvent>> extract_streams(const std::vector<NoteLabel>& labels,
                                                      const Rational& pause_threshold);

/// Collapses each event to its numerically highest pitch (pauses map to
/// kPauseCode). Output length equals the event count.
std::vector<int> flatten_monophonic(const std::vector<NoteEvent>& stream);

struct PieceRecord {
  PieceMetadata metadata;
  IntervalTree labels;
  std::map<int, std::vector<NoteEvent>> streams;
};

struct IngestOptions {
  Rational pause_threshold{1, 16};
  std::vector<int> instruments;  // MIDI instrument codes to keep; empty = all
};

/// Loads `metadata.csv` plus every `<piece_id>.csv` from a data directory,
/// ascending by piece id. Pieces with no labels for the selected
/// instruments are dropped.
std::vector<PieceRecord> load_corpus(const std::filesystem::path& data_dir,
                                     const IngestOptions& options);

}  // namespace ncl
