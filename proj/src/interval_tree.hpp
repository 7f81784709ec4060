#pragma once

#include <vector>

#include "labels.hpp"

namespace ncl {

/// Static balanced interval tree over note labels, keyed by the half-open
/// span [start_time, end_time). Built once; queries are read-only.
class IntervalTree {
 public:
  IntervalTree() = default;
  explicit IntervalTree(std::vector<NoteLabel> labels);

  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }

  /// All labels whose span overlaps [lo, hi): start_time < hi and
  /// end_time > lo. Results are sorted by (start_time, end_time).
  /// Throws Errc::invalid_range when lo > hi.
  std::vector<NoteLabel> overlapping(double lo, double hi) const;

  /// All labels sounding at point t: start_time <= t < end_time.
  std::vector<NoteLabel> at_point(double t) const;

  /// Labels in tree order (sorted by start_time, then end_time).
  const std::vector<NoteLabel>& labels() const { return ordered_; }

 private:
  struct Node {
    int left = -1;
    int right = -1;
    double max_end = 0.0;
    std::size_t label_index = 0;
  };

  int build(std::size_t lo, std::size_t hi);
  void collect(int node, double lo, double hi, bool point, std::vector<NoteLabel>& out) const;

  std::vector<NoteLabel> ordered_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace ncl
