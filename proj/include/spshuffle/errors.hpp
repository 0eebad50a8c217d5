#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace spshuffle {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DuplicateLabel : public Error {
 public:
  explicit DuplicateLabel(const std::string& label)
      : Error("duplicate label '" + label + "'") {}
};

class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(const std::string& label)
      : Error("unknown label '" + label + "'") {}
};

class CycleDetected : public Error {
 public:
  CycleDetected(const std::string& a, const std::string& b)
      : Error("relation is not antisymmetric: '" + a + "' and '" + b + "'") {}
};

class ArityMismatch : public Error {
 public:
  ArityMismatch(std::size_t expected, std::size_t got)
      : Error("expected " + std::to_string(expected) + " posets, got " +
              std::to_string(got)) {}
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class EmptyInput : public Error {
 public:
  EmptyInput() : Error("empty input") {}
};

class StackUnderflow : public Error {
 public:
  explicit StackUnderflow(std::size_t token)
      : Error("operator at token " + std::to_string(token) +
              " needs two operands") {}
};

class LeftoverOperands : public Error {
 public:
  explicit LeftoverOperands(std::size_t count)
      : Error(std::to_string(count) + " operands left on the stack") {}
};

// (x, y, z, w) spans an induced N: x<y, z<y, z<w.
class NotSeriesParallel : public Error {
 public:
  explicit NotSeriesParallel(std::array<std::string, 4> witness)
      : Error("poset contains an N: " + witness[0] + "<" + witness[1] + ", " +
              witness[2] + "<" + witness[1] + ", " + witness[2] + "<" +
              witness[3]),
        witness_(std::move(witness)) {}
  const std::array<std::string, 4>& witness() const { return witness_; }

 private:
  std::array<std::string, 4> witness_;
};

class SupportOutOfRange : public Error {
 public:
  using Error::Error;
};

class NonIntegerSolution : public Error {
 public:
  using Error::Error;
};

class GroundSetMismatch : public Error {
 public:
  using Error::Error;
};

class NotReduced : public Error {
 public:
  NotReduced() : Error("tree is not reduced") {}
};

}  // namespace spshuffle
