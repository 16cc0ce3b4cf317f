#pragma once

#include <stdexcept>
#include <string>

namespace heunlie {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (CRat literals, polynomial/operator/UEA grammars).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Parameters outside their domain, e.g. a in {0, 1} or 2j not integral.
class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// A fractional-linear map hit its pole; the image is the point at infinity.
class PoleError : public Error {
 public:
  using Error::Error;
};

class NotRegularSingular : public Error {
 public:
  using Error::Error;
};

/// The operator maps z^column outside the degree <= N space.
class OverflowColumn : public Error {
 public:
  OverflowColumn(int column, int produced_degree, int bound)
      : Error("column " + std::to_string(column) + " maps z^" + std::to_string(column) +
              " to degree " + std::to_string(produced_degree) + " > " + std::to_string(bound)),
        column_(column),
        produced_degree_(produced_degree) {}

  int column() const noexcept { return column_; }
  int produced_degree() const noexcept { return produced_degree_; }

 private:
  int column_;
  int produced_degree_;
};

class NonIntegerExponents : public Error {
 public:
  using Error::Error;
};

/// The coefficient of c_k in a three-term recurrence vanishes.
class DegenerateLeading : public Error {
 public:
  using Error::Error;
};

class DegenerateQuadratic : public Error {
 public:
  using Error::Error;
};

class ZeroEigenvalue : public Error {
 public:
  using Error::Error;
};

}  // namespace heunlie
