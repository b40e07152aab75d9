#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dijklab {

enum class ErrorKind {
  MalformedInput,
  DiagonalNonZero,
  NegativeOrZeroWeight,
  VertexOutOfRange,
  DuplicateEdge,
  SelfLoop,
  FrontierNotPermanent,
  UnsettledVertex,
  GraphTooLarge,
  InvalidSpec,
  IoError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::DiagonalNonZero: return "DiagonalNonZero";
    case ErrorKind::NegativeOrZeroWeight: return "NegativeOrZeroWeight";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::FrontierNotPermanent: return "FrontierNotPermanent";
    case ErrorKind::UnsettledVertex: return "UnsettledVertex";
    case ErrorKind::GraphTooLarge: return "GraphTooLarge";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

/// Raised by parsers, engines and oracles. The kind is stable and testable;
/// the message is a one-line human diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dijklab
