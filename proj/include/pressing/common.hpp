#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pressing {

/// Vertex label. Labels are positive integers; 0 is never a valid label.
using Label = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Length/size mismatch or an index outside [1, n].
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A structural precondition on an argument does not hold (asymmetric
/// adjacency matrix, non-triangular root, unknown label, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Pressing a vertex that is not looped at its turn. `position` is the
/// 1-based index in the sequence being applied, 0 for a single press.
class InvalidPress : public Error {
 public:
  InvalidPress(Label vertex, std::size_t position)
      : Error(message(vertex, position)), vertex_(vertex), position_(position) {}
  Label vertex() const noexcept { return vertex_; }
  std::size_t position() const noexcept { return position_; }

 private:
  static std::string message(Label vertex, std::size_t position) {
    std::string s = "vertex " + std::to_string(vertex) + " is not looped";
    if (position != 0) s = "invalid press at position " + std::to_string(position) + ": " + s;
    return s;
  }
  Label vertex_;
  std::size_t position_;
};

/// Elimination in the given vertex order halted at a zero diagonal with a
/// nonzero residual.
class NotOrderPressable : public Error {
 public:
  explicit NotOrderPressable(std::size_t stuck_index)
      : Error("ordering is not order-pressable: stuck at index " + std::to_string(stuck_index)),
        stuck_index_(stuck_index) {}
  std::size_t stuck_index() const noexcept { return stuck_index_; }

 private:
  std::size_t stuck_index_;
};

/// Greedy pressing ran out of looped vertices while edges remain.
class NotPressable : public Error {
 public:
  explicit NotPressable(std::vector<Label> leftover)
      : Error("graph is not pressable: a non-trivial component has no looped vertex"),
        leftover_(std::move(leftover)) {}
  /// Vertices of a non-trivial component left without a looped vertex.
  const std::vector<Label>& leftover() const noexcept { return leftover_; }

 private:
  std::vector<Label> leftover_;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Input to a CUP-extension is not a connected uniquely pressable graph in
/// the required labeling.
class NotCup : public Error {
 public:
  using Error::Error;
};

}  // namespace pressing
