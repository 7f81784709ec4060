#pragma once

#include <stdexcept>
#include <string>

namespace ncl {

/// Failure classes raised by the library. Each value maps onto one of the
/// three process exit classes via exit_class().
enum class Errc {
  // ingest
  missing_file,
  malformed_row,
  empty_file,
  duplicate_id,
  invalid_range,
  missing_metadata,
  // coding
  wrong_scheme,
  all_pauses,
  too_short,
  // shingles / minhash / lsh
  invalid_k,
  k_mismatch,
  invalid_params,
  signature_mismatch,
  unknown_piece,
  too_few_pieces,
  // ctm / distances
  degenerate_distances,
  // affinity graphs
  invalid_epsilon,
  // clustering
  invalid_cluster_count,
  eigen_failure,
  single_cluster,
  // sensemaking
  too_few_documents,
  // pipeline
  config_error,
  io_error,
  internal_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, std::string message) {
  throw Error(code, std::move(message));
}

/// Exit class for a failure: 1 = configuration, 2 = ingest, 3 = compute/io.
inline int exit_class(Errc code) {
  switch (code) {
    case Errc::config_error:
    case Errc::invalid_params:
    case Errc::invalid_epsilon:
    case Errc::invalid_k:
    case Errc::invalid_cluster_count:
      return 1;
    case Errc::missing_file:
    case Errc::malformed_row:
    case Errc::empty_file:
    case Errc::duplicate_id:
    case Errc::missing_metadata:
      return 2;
    default:
      return 3;
  }
}

const char* errc_name(Errc code);

}  // namespace ncl
