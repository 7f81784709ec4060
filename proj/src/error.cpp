#include "error.hpp"

namespace ncl {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::missing_file: return "MissingFile";
    case Errc::malformed_row: return "MalformedRow";
    case Errc::empty_file: return "EmptyFile";
    case Errc::duplicate_id: return "DuplicateId";
    case Errc::invalid_range: return "InvalidRange";
    case Errc::missing_metadata: return "MissingMetadata";
    case Errc::wrong_scheme: return "WrongScheme";
    case Errc::all_pauses: return "AllPauses";
    case Errc::too_short: return "TooShort";
    case Errc::invalid_k: return "InvalidK";
    case Errc::k_mismatch: return "KMismatch";
    case Errc::invalid_params: return "InvalidParams";
    case Errc::signature_mismatch: return "SignatureMismatch";
    case Errc::unknown_piece: return "UnknownPiece";
    case Errc::too_few_pieces: return "TooFewPieces";
    case Errc::degenerate_distances: return "DegenerateDistances";
    case Errc::invalid_epsilon: return "InvalidEpsilon";
    case Errc::invalid_cluster_count: return "InvalidClusterCount";
    case Errc::eigen_failure: return "EigenFailure";
    case Errc::single_cluster: return "SingleCluster";
    case Errc::too_few_documents: return "TooFewDocuments";
    case Errc::config_error: return "ConfigError";
    case Errc::io_error: return "IoError";
    case Errc::internal_error: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace ncl
