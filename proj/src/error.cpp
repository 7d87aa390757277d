#include "spectra/error.hpp"

namespace spectra {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonIncreasingRow: return "NonIncreasingRow";
    case ErrorKind::EmptyRow: return "EmptyRow";
    case ErrorKind::OverflowRisk: return "OverflowRisk";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::TruncatedRows: return "TruncatedRows";
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
    case ErrorKind::InvalidBounds: return "InvalidBounds";
    case ErrorKind::EstimateTooLarge: return "EstimateTooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownMatrix: return "UnknownMatrix";
  }
  return "Unknown";
}

}  // namespace spectra
