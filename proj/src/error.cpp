#include "trialmatch/error.hpp"

namespace trialmatch {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedXml: return "MalformedXml";
    case ErrorCode::kMissingId: return "MissingId";
    case ErrorCode::kDuplicateTopicId: return "DuplicateTopicId";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kFormatVersionMismatch: return "FormatVersionMismatch";
    case ErrorCode::kMalformedLexiconLine: return "MalformedLexiconLine";
    case ErrorCode::kMalformedDataLine: return "MalformedDataLine";
    case ErrorCode::kSpanOutOfRange: return "SpanOutOfRange";
    case ErrorCode::kAgeOutOfRange: return "AgeOutOfRange";
    case ErrorCode::kInvertedRange: return "InvertedRange";
    case ErrorCode::kMissingCriteria: return "MissingCriteria";
    case ErrorCode::kDuplicateDocId: return "DuplicateDocId";
    case ErrorCode::kUnknownOrdinal: return "UnknownOrdinal";
    case ErrorCode::kCorpusMismatch: return "CorpusMismatch";
    case ErrorCode::kTopicNotInQrels: return "TopicNotInQrels";
    case ErrorCode::kMalformedRunLine: return "MalformedRunLine";
    case ErrorCode::kNonMonotoneRanks: return "NonMonotoneRanks";
    case ErrorCode::kMalformedQrelsLine: return "MalformedQrelsLine";
    case ErrorCode::kTopicSetMismatch: return "TopicSetMismatch";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace trialmatch
