#pragma once

#include <stdexcept>
#include <string>

namespace hopfca {

struct ShapeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FieldMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSurjective : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotConvolutionInvertible : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotHopfMap : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AlgebraMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AssociatorNotInvertible : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FlavorMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotComodule : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CoactionNotClosed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BadParams : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownExample : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownSuite : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ")"),
        line(line),
        col(col) {}
  int line;
  int col;
};
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hopfca
