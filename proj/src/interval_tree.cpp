#include "interval_tree.hpp"

#include <algorithm>

#include "error.hpp"

namespace ncl {

IntervalTree::IntervalTree(std::vector<NoteLabel> labels) : ordered_(std::move(labels)) {
  std::stable_sort(ordered_.begin(), ordered_.end(), [](const NoteLabel& a, const NoteLabel& b) {
    if (a.start_time != b.start_time) return a.start_time < b.start_time;
    return a.end_time < b.end_time;
  });
  nodes_.reserve(ordered_.size());
  if (!ordered_.empty()) root_ = build(0, ordered_.size());
}

int IntervalTree::build(std::size_t lo, std::size_t hi) {
  if (lo >= hi) return -1;
  std::size_t mid = lo + (hi - lo) / 2;
  int index = static_cast<int>(nodes_.size());
  nodes_.push_back(Node{-1, -1, ordered_[mid].end_time, mid});
  int left = build(lo, mid);
  int right = build(mid + 1, hi);
  Node& node = nodes_[index];
  node.left = left;
  node.right = right;
  if (left >= 0) node.max_end = std::max(node.max_end, nodes_[left].max_end);
  if (right >= 0) node.max_end = std::max(node.max_end, nodes_[right].max_end);
  return index;
}

std::vector<NoteLabel> IntervalTree::overlapping(double lo, double hi) const {
  if (lo > hi) fail(Errc::invalid_range, "interval query with lo > hi");
  std::vector<NoteLabel> out;
  collect(root_, lo, hi, /*point=*/false, out);
  return out;
}

std::vector<NoteLabel> IntervalTree::at_point(double t) const {
  std::vector<NoteLabel> out;
  collect(root_, t, t, /*point=*/true, out);
  return out;
}

// Interval query [lo,hi): match iff start < hi and end > lo.
// Point query at t (lo == hi == t): match iff start <= t and end > t.
void IntervalTree::collect(int node, double lo, double hi, bool point,
                           std::vector<NoteLabel>& out) const {
  if (node < 0) return;
  const Node& n = nodes_[node];
  if (n.max_end <= lo) return;  // no end in this subtree can exceed lo
  collect(n.left, lo, hi, point, out);
  const NoteLabel& label = ordered_[n.label_index];
  bool start_ok = point ? label.start_time <= hi : label.start_time < hi;
  if (start_ok && label.end_time > lo) out.push_back(label);
  // Right subtree holds starts >= this start, so a failed start bound prunes it.
  if (start_ok) collect(n.right, lo, hi, point, out);
}

}  // namespace ncl
