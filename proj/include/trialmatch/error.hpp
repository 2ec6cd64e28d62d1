#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace trialmatch {

enum class ErrorCode {
  kMalformedXml,
  kMissingId,
  kDuplicateTopicId,
  kIoError,
  kFormatVersionMismatch,
  kMalformedLexiconLine,
  kMalformedDataLine,
  kSpanOutOfRange,
  kAgeOutOfRange,
  kInvertedRange,
  kMissingCriteria,
  kDuplicateDocId,
  kUnknownOrdinal,
  kCorpusMismatch,
  kTopicNotInQrels,
  kMalformedRunLine,
  kNonMonotoneRanks,
  kMalformedQrelsLine,
  kTopicSetMismatch,
  kInvalidConfig,
};

const char* to_string(ErrorCode code);

// All recoverable failures in the library are reported with this type. The
// code lets callers (the CLI in particular) map failures to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Non-fatal conditions (skipped lexicon lines, empty queries, unit
// mismatches) are collected here instead of being thrown.
struct Diagnostics {
  std::vector<std::string> warnings;

  void warn(std::string message) { warnings.push_back(std::move(message)); }
  void merge(const Diagnostics& other) {
    warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
  }
};

}  // namespace trialmatch
