#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bicaut {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed edge-list or graph6 input. `location` is a 1-based line number
// for edge lists and a 1-based byte offset for graph6.
class GraphFormatError : public Error {
 public:
  enum class Kind {
    kMalformedHeader,
    kMalformedLine,
    kOutOfRange,
    kDuplicateEdge,
    kSelfLoop,
    kEdgeCount,
    kBadByte,
  };
  GraphFormatError(Kind kind, std::size_t location, const std::string& what)
      : Error(what), kind_(kind), location_(location) {}
  Kind kind() const { return kind_; }
  std::size_t location() const { return location_; }

 private:
  Kind kind_;
  std::size_t location_;
};

class InvalidVertexError : public Error {
 public:
  using Error::Error;
};

class NotConnectedError : public Error {
 public:
  NotConnectedError() : Error("graph is not connected") {}
};

// Input is outside the family an operation is defined on (not a tree,
// wrong cyclomatic number, construction precondition violated).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ExprParseError : public Error {
 public:
  enum class Kind { kSyntax, kArity, kUnknownName };
  ExprParseError(Kind kind, std::size_t position,
                 std::vector<std::string> expected, const std::string& what)
      : Error(what),
        kind_(kind),
        position_(position),
        expected_(std::move(expected)) {}
  Kind kind() const { return kind_; }
  // 1-based byte offset; input length + 1 denotes end of input.
  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  Kind kind_;
  std::size_t position_;
  std::vector<std::string> expected_;
};

class OracleBoundError : public Error {
 public:
  using Error::Error;
};

class OutsideClassError : public Error {
 public:
  using Error::Error;
};

class SizeBudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace bicaut
