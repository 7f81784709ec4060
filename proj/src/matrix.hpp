#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

namespace ncl {

/// Dense row-major square matrix of doubles.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), cells_(n * n, fill) {}

  std::size_t size() const { return n_; }
  double& at(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }
  double at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }

  static SquareMatrix identity(std::size_t n);

  bool is_symmetric(double tol = 0.0) const;
  double frobenius_norm() const;
  /// Frobenius norm of the strictly off-diagonal part.
  double off_diagonal_norm() const;

  bool operator==(const SquareMatrix& o) const { return n_ == o.n_ && cells_ == o.cells_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> cells_;
};

/// Symmetric piece-by-piece similarity graph: entries in [0,1], diagonal 1.
/// Also used for raw similarity matrices (exact Jaccard is 1 on the
/// diagonal), which are affinity matrices in their own right.
struct AffinityMatrix {
  std::vector<int> piece_ids;
  SquareMatrix values;

  std::size_t size() const { return values.size(); }
  /// Throws Errc::invalid_params if symmetry / range / diagonal are violated.
  void validate() const;
};

/// Symmetric non-negative distances with a zero diagonal.
struct DistanceMatrix {
  std::vector<int> piece_ids;
  SquareMatrix values;

  std::size_t size() const { return values.size(); }
  void validate() const;
};

/// CSV with a piece-id header row and leading id column.
void write_labeled_matrix(const std::filesystem::path& path, const std::vector<int>& piece_ids,
                          const SquareMatrix& values);

struct LabeledMatrix {
  std::vector<int> piece_ids;
  SquareMatrix values;
};

LabeledMatrix read_labeled_matrix(const std::filesystem::path& path);

}  // namespace ncl
