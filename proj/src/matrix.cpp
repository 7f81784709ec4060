#include "matrix.hpp"

#include <cmath>
#include <string>

#include "csv.hpp"
#include "error.hpp"

namespace ncl {

SquareMatrix SquareMatrix::identity(std::size_t n) {
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

bool SquareMatrix::is_symmetric(double tol) const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (std::abs(at(i, j) - at(j, i)) > tol) return false;
    }
  }
  return true;
}

double SquareMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (double v : cells_) sum += v * v;
  return std::sqrt(sum);
}

double SquareMatrix::off_diagonal_norm() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (i != j) sum += at(i, j) * at(i, j);
    }
  }
  return std::sqrt(sum);
}

void AffinityMatrix::validate() const {
  std::size_t n = values.size();
  if (piece_ids.size() != n) {
    fail(Errc::invalid_params, "affinity matrix id/size mismatch");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (values.at(i, i) != 1.0) {
      fail(Errc::invalid_params, "affinity matrix diagonal must be 1");
    }
    for (std::size_t j = 0; j < n; ++j) {
      double v = values.at(i, j);
      if (v < 0.0 || v > 1.0) fail(Errc::invalid_params, "affinity entry outside [0,1]");
      if (values.at(j, i) != v) fail(Errc::invalid_params, "affinity matrix not symmetric");
    }
  }
}

void DistanceMatrix::validate() const {
  std::size_t n = values.size();
  if (piece_ids.size() != n) {
    fail(Errc::invalid_params, "distance matrix id/size mismatch");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (values.at(i, i) != 0.0) {
      fail(Errc::invalid_params, "distance matrix diagonal must be 0");
    }
    for (std::size_t j = 0; j < n; ++j) {
      double v = values.at(i, j);
      if (v < 0.0) fail(Errc::invalid_params, "negative distance entry");
      if (values.at(j, i) != v) fail(Errc::invalid_params, "distance matrix not symmetric");
    }
  }
}

void write_labeled_matrix(const std::filesystem::path& path, const std::vector<int>& piece_ids,
                          const SquareMatrix& values) {
  std::size_t n = values.size();
  if (piece_ids.size() != n) fail(Errc::internal_error, "matrix id/size mismatch");
  std::string out = "id";
  for (int id : piece_ids) {
    out += ',';
    out += std::to_string(id);
  }
  out += '\n';
  for (std::size_t i = 0; i < n; ++i) {
    out += std::to_string(piece_ids[i]);
    for (std::size_t j = 0; j < n; ++j) {
      out += ',';
      out += format_double(values.at(i, j));
    }
    out += '\n';
  }
  write_file(path, out);
}

LabeledMatrix read_labeled_matrix(const std::filesystem::path& path) {
  auto rows = read_csv(path);
  if (rows.empty()) fail(Errc::empty_file, "empty matrix file: " + path.string());
  const auto& header = rows[0];
  if (header.empty() || header[0] != "id") {
    fail(Errc::malformed_row, "matrix file missing id header: " + path.string());
  }
  std::size_t n = header.size() - 1;
  if (rows.size() != n + 1) {
    fail(Errc::malformed_row, "matrix file row count mismatch: " + path.string());
  }
  LabeledMatrix result;
  result.piece_ids.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) {
    result.piece_ids.push_back(static_cast<int>(parse_int(header[j])));
  }
  result.values = SquareMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i + 1];
    if (row.size() != n + 1) fail(Errc::malformed_row, "matrix row width mismatch: " + path.string());
    if (parse_int(row[0]) != result.piece_ids[i]) {
      fail(Errc::malformed_row, "matrix row id out of order: " + path.string());
    }
    for (std::size_t j = 0; j < n; ++j) {
      result.values.at(i, j) = parse_double(row[j + 1]);
    }
  }
  return result;
}

}  // namespace ncl
