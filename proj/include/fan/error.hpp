#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fan {

enum class ErrorCode {
  NTooSmall,
  NotAnEdge,
  IllegalMove,
  MalformedToken,
  DuplicateEdge,
  WrongEdgeCount,
  NotATree,
  NotASpanningTree,
  RankOutOfRange,
  OracleRangeExceeded,
  GenInvariantBroken,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NTooSmall: return "NTooSmall";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::IllegalMove: return "IllegalMove";
    case ErrorCode::MalformedToken: return "MalformedToken";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::WrongEdgeCount: return "WrongEdgeCount";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotASpanningTree: return "NotASpanningTree";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::OracleRangeExceeded: return "OracleRangeExceeded";
    case ErrorCode::GenInvariantBroken: return "GenInvariantBroken";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void require_n(int n) {
  if (n < 2) throw Error(ErrorCode::NTooSmall, "n must be at least 2, got " + std::to_string(n));
}

}  // namespace fan
