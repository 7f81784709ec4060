#include "ingest.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "csv.hpp"
#include "error.hpp"

namespace ncl {

namespace {

const char* kLabelHeader = "start_time,end_time,instrument,note,measure,beat,note_value";

[[noreturn]] void row_error(std::size_t line, const std::string& reason) {
  fail(Errc::malformed_row, "line " + std::to_string(line) + ": " + reason);
}

/// Beats parse from decimals, so reduced denominators divide 10^9 and an
/// exact decimal rendering always exists.
std::string beat_to_decimal(const Rational& beat) {
  std::int64_t den = beat.den();
  std::int64_t scale = 1;
  int digits = 0;
  while (scale % den != 0) {
    scale *= 10;
    if (++digits > 18) return beat.str();  // synthetic rational; keep num/den form
  }
  std::int64_t units = beat.num() * (scale / den);
  std::int64_t whole = units / scale;
  std::int64_t frac = units % scale;
  if (digits == 0) return std::to_string(whole);
  std::string frac_text = std::to_string(frac);
  frac_text.insert(0, static_cast<std::size_t>(digits) - frac_text.size(), '0');
  while (frac_text.size() > 1 && frac_text.back() == '0') frac_text.pop_back();
  if (frac_text == "0") return std::to_string(whole);
  return std::to_string(whole) + "." + frac_text;
}

bool is_pause_event(const TimedEvent& e) { return e.event.is_pause(); }

TimedEvent make_pause(Rational onset) {
  TimedEvent pause;
  pause.event.onset = onset;
  pause.event.pitches = {kPauseCode};
  pause.end_beat = onset.to_double();
  pause.measure = static_cast<long long>(std::floor(onset.to_double()));
  return pause;
}

/// Inserts a pause at the given onset unless a pause already borders the
/// insertion point or a note occupies the exact onset. Returns true when a
/// pause was actually added.
bool insert_pause_at(std::vector<TimedEvent>& stream, const Rational& onset) {
  auto pos = std::lower_bound(stream.begin(), stream.end(), onset,
                              [](const TimedEvent& e, const Rational& o) { return e.event.onset < o; });
  if (pos != stream.end() && pos->event.onset == onset) {
    return false;  // occupied; if it is a pause the silence is already marked
  }
  if (pos != stream.begin() && is_pause_event(*std::prev(pos))) return false;
  if (pos != stream.end() && is_pause_event(*pos)) return false;
  stream.insert(pos, make_pause(onset));
  return true;
}

}  // namespace

std::vector<NoteLabel> parse_label_file(const std::filesystem::path& path) {
  auto rows = read_csv(path);
  if (rows.empty()) fail(Errc::empty_file, "label file is empty: " + path.string());
  std::vector<std::string> expected = split_csv_line(kLabelHeader);
  if (rows[0] != expected) {
    fail(Errc::malformed_row, "line 1: bad label header in " + path.string());
  }
  if (rows.size() == 1) fail(Errc::empty_file, "label file has no data rows: " + path.string());

  std::vector<NoteLabel> labels;
  labels.reserve(rows.size() - 1);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    std::size_t line = r + 1;
    if (row.size() != expected.size()) row_error(line, "expected 7 fields");
    NoteLabel label;
    try {
      label.start_time = parse_double(row[0]);
      label.end_time = parse_double(row[1]);
      label.instrument = static_cast<int>(parse_int(row[2]));
      label.pitch = static_cast<int>(parse_int(row[3]));
      label.measure = parse_int(row[4]);
      label.beat = Rational::parse_decimal(row[5]);
      label.note_value = row[6];
    } catch (const Error& e) {
      row_error(line, e.what());
    }
    if (label.start_time < 0.0) row_error(line, "negative start_time");
    if (!(label.end_time > label.start_time)) row_error(line, "end_time must exceed start_time");
    if (label.instrument < 1 || label.instrument > 128) row_error(line, "instrument outside [1,128]");
    if (label.pitch < 0 || label.pitch > 127) row_error(line, "note outside [0,127]");
    if (label.measure < 0) row_error(line, "negative measure");
    if (label.beat < Rational(0, 1) || !(label.beat < Rational(1, 1))) {
      row_error(line, "beat outside [0,1)");
    }
    labels.push_back(std::move(label));
  }
  return labels;
}

void write_label_file(const std::filesystem::path& path, const std::vector<NoteLabel>& labels) {
  std::string out = kLabelHeader;
  out += '\n';
  for (const auto& label : labels) {
    out += format_double(label.start_time);
    out += ',';
    out += format_double(label.end_time);
    out += ',';
    out += std::to_string(label.instrument);
    out += ',';
    out += std::to_string(label.pitch);
    out += ',';
    out += std::to_string(label.measure);
    out += ',';
    out += beat_to_decimal(label.beat);
    out += ',';
    out += csv_escape(label.note_value);
    out += '\n';
  }
  write_file(path, out);
}

std::map<int, PieceMetadata> parse_metadata(const std::filesystem::path& path) {
  std::map<int, PieceMetadata> result;
  auto rows = read_csv(path);
  if (rows.empty()) return result;
  std::vector<std::string> expected = split_csv_line("id,composer,title,movement,ensemble");
  if (rows[0] != expected) {
    fail(Errc::malformed_row, "line 1: bad metadata header in " + path.string());
  }
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    std::size_t line = r + 1;
    if (row.size() != expected.size()) row_error(line, "expected 5 fields");
    PieceMetadata meta;
    try {
      meta.piece_id = static_cast<int>(parse_int(row[0]));
    } catch (const Error& e) {
      row_error(line, e.what());
    }
    meta.composer = row[1];
    meta.title = row[2];
    meta.movement = row[3];
    meta.ensemble = row[4];
    if (!result.emplace(meta.piece_id, std::move(meta)).second) {
      fail(Errc::duplicate_id, "duplicate piece id " + row[0] + " at line " + std::to_string(line));
    }
  }
  return result;
}

BeatMap BeatMap::from_labels(const std::vector<NoteLabel>& labels) {
  std::vector<std::pair<double, double>> points;
  points.reserve(labels.size());
  for (const auto& label : labels) {
    points.emplace_back(label.start_time, label.onset().to_double());
  }
  std::sort(points.begin(), points.end());
  BeatMap map;
  for (const auto& [t, b] : points) {
    if (!map.times_.empty()) {
      if (t <= map.times_.back()) continue;       // keep strictly increasing times
      if (b < map.beats_.back()) continue;        // drop non-monotone annotations
    }
    map.times_.push_back(t);
    map.beats_.push_back(b);
  }
  return map;
}

double BeatMap::beat_at(double time) const {
  if (times_.empty()) return 0.0;
  if (times_.size() == 1) return beats_[0];
  std::size_t hi = std::upper_bound(times_.begin(), times_.end(), time) - times_.begin();
  // Clamp to the first/last segment; ends of the final note extrapolate
  // with the closing tempo.
  if (hi == 0) hi = 1;
  if (hi == times_.size()) hi = times_.size() - 1;
  std::size_t lo = hi - 1;
  double slope = (beats_[hi] - beats_[lo]) / (times_[hi] - times_[lo]);
  return beats_[lo] + (time - times_[lo]) * slope;
}

std::map<int, std::vector<TimedEvent>> group_instrument_events(
    const std::vector<NoteLabel>& labels, const BeatMap& map) {
  // (instrument, exact onset) -> event.
  std::map<int, std::map<Rational, TimedEvent>> byInstrument;
  for (const auto& label : labels) {
    Rational onset = label.onset();
    auto& slot = byInstrument[label.instrument][onset];
    if (slot.event.pitches.empty()) {
      slot.event.onset = onset;
      slot.measure = label.measure;
      slot.end_beat = map.beat_at(label.end_time);
    } else {
      slot.end_beat = std::max(slot.end_beat, map.beat_at(label.end_time));
    }
    slot.event.pitches.push_back(label.pitch);
  }
  std::map<int, std::vector<TimedEvent>> result;
  for (auto& [instrument, events] : byInstrument) {
    auto& stream = result[instrument];
    stream.reserve(events.size());
    for (auto& [onset, event] : events) {
      auto& pitches = event.event.pitches;
      std::sort(pitches.begin(), pitches.end());
      pitches.erase(std::unique(pitches.begin(), pitches.end()), pitches.end());
      stream.push_back(std::move(event));
    }
  }
  return result;
}

std::map<long long, MeasureBounds> compute_measure_bounds(const std::vector<NoteLabel>& labels,
                                                          const BeatMap& map) {
  std::map<long long, MeasureBounds> bounds;
  for (const auto& label : labels) {
    Rational onset = label.onset();
    double end_beat = map.beat_at(label.end_time);
    auto [it, inserted] = bounds.try_emplace(label.measure, MeasureBounds{onset, end_beat});
    if (!inserted) {
      if (onset < it->second.first_onset) it->second.first_onset = onset;
      it->second.last_end = std::max(it->second.last_end, end_beat);
    }
  }
  return bounds;
}

void add_measure_pauses(std::vector<TimedEvent>& stream,
                        const std::map<long long, MeasureBounds>& bounds,
                        const Rational& pause_threshold) {
  double threshold = pause_threshold.to_double();
  // Sounding events of one measure; pauses do not count as playing.
  auto find_range = [&stream](long long measure) {
    std::pair<std::ptrdiff_t, std::ptrdiff_t> range{-1, -1};
    for (std::size_t i = 0; i < stream.size(); ++i) {
      if (is_pause_event(stream[i]) || stream[i].measure != measure) continue;
      if (range.first < 0) range.first = static_cast<std::ptrdiff_t>(i);
      range.second = static_cast<std::ptrdiff_t>(i);
    }
    return range;
  };
  for (const auto& [measure, bound] : bounds) {
    auto [first, last] = find_range(measure);
    if (first < 0) {
      // Instrument is silent for the whole measure while others play.
      insert_pause_at(stream, bound.first_onset);
      continue;
    }
    if (stream[first].event.onset - bound.first_onset > pause_threshold) {
      if (insert_pause_at(stream, bound.first_onset)) {
        std::tie(first, last) = find_range(measure);
      }
    }
    if (bound.last_end - stream[last].end_beat > threshold) {
      std::size_t next = static_cast<std::size_t>(last) + 1;
      if (next < stream.size()) {
        if (!is_pause_event(stream[next])) {
          insert_pause_at(stream, mediant(stream[last].event.onset, stream[next].event.onset));
        }
      } else {
        insert_pause_at(stream, stream[last].event.onset + Rational::from_int(1));
      }
    }
  }
}

void add_gap_pauses(std::vector<TimedEvent>& stream, const Rational& pause_threshold) {
  double threshold = pause_threshold.to_double();
  std::vector<Rational> pause_onsets;
  for (std::size_t i = 0; i + 1 < stream.size(); ++i) {
    const TimedEvent& current = stream[i];
    const TimedEvent& next = stream[i + 1];
    if (is_pause_event(current) || is_pause_event(next)) continue;
    if (next.event.onset.to_double() - current.end_beat > threshold) {
      pause_onsets.push_back(mediant(current.event.onset, next.event.onset));
    }
  }
  for (const auto& onset : pause_onsets) insert_pause_at(stream, onset);
}

std::map<int, std::vector<NoteEvent>> extract_streams(const std::vector<NoteLabel>& labels,
                                                      const Rational& pause_threshold) {
  if (labels.empty()) fail(Errc::empty_file, "cannot extract streams from zero labels");
  BeatMap map = BeatMap::from_labels(labels);
  auto grouped = group_instrument_events(labels, map);
  auto bounds = compute_measure_bounds(labels, map);
  std::map<int, std::vector<NoteEvent>> result;
  for (auto& [instrument, stream] : grouped) {
    add_measure_pauses(stream, bounds, pause_threshold);
    add_gap_pauses(stream, pause_threshold);
    std::vector<NoteEvent> events;
    events.reserve(stream.size());
    for (auto& timed : stream) {
      if (!events.empty() && !(events.back().onset < timed.event.onset)) {
        fail(Errc::internal_error, "stream events out of order after pause insertion");
      }
      if (!events.empty() && events.back().is_pause() && timed.event.is_pause()) {
        fail(Errc::internal_error, "consecutive pauses after insertion");
      }
      events.push_back(std::move(timed.event));
    }
    result[instrument] = std::move(events);
  }
  return result;
}

std::vector<int> flatten_monophonic(const std::vector<NoteEvent>& stream) {
  std::vector<int> codes;
  codes.reserve(stream.size());
  for (const auto& event : stream) {
    codes.push_back(*std::max_element(event.pitches.begin(), event.pitches.end()));
  }
  return codes;
}

std::vector<PieceRecord> load_corpus(const std::filesystem::path& data_dir,
                                     const IngestOptions& options) {
  auto metadata = parse_metadata(data_dir / "metadata.csv");
  std::set<int> wanted(options.instruments.begin(), options.instruments.end());
  std::vector<PieceRecord> corpus;
  for (const auto& [piece_id, meta] : metadata) {
    auto label_path = data_dir / (std::to_string(piece_id) + ".csv");
    if (!std::filesystem::exists(label_path)) {
      fail(Errc::missing_file, "piece " + std::to_string(piece_id) +
                                   ": label file not found: " + label_path.string());
    }
    std::vector<NoteLabel> labels;
    try {
      labels = parse_label_file(label_path);
    } catch (const Error& e) {
      throw Error(e.code(), "piece " + std::to_string(piece_id) + ": " + e.what());
    }
    std::vector<NoteLabel> selected;
    if (wanted.empty()) {
      selected = labels;
    } else {
      for (const auto& label : labels) {
        if (wanted.count(label.instrument)) selected.push_back(label);
      }
    }
    if (selected.empty()) continue;  // nothing for the requested instruments
    PieceRecord piece;
    piece.metadata = meta;
    piece.streams = extract_streams(selected, options.pause_threshold);
    piece.labels = IntervalTree(std::move(labels));
    corpus.push_back(std::move(piece));
  }
  return corpus;
}

}  // namespace ncl
