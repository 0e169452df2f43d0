#ifndef PGRAPH_ERRORS_HPP
#define PGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pgraph {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// groups
class InvalidSpec : public Error {
public:
  using Error::Error;
};

class InvalidCayleyTable : public Error {
public:
  using Error::Error;
};

// graph construction and serialization
class InvalidGraph : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

// classify
class NotAnNClass : public Error {
public:
  using Error::Error;
};

class StarClassGiven : public Error {
public:
  using Error::Error;
};

// reconstruct
class SizeMismatch : public Error {
public:
  using Error::Error;
};

class EqualSingletonBlocks : public Error {
public:
  using Error::Error;
};

class NoInvolutionTiebreak : public Error {
public:
  using Error::Error;
};

/// Raised by reconstruct() when the input cannot be the power graph of a
/// finite group. Wraps the downstream inconsistency in its message.
class NotAPowerGraph : public Error {
public:
  using Error::Error;
};

// verify
class NotTransitive : public Error {
public:
  using Error::Error;
};

class VertexCountMismatch : public Error {
public:
  using Error::Error;
};

class BudgetExceeded : public Error {
public:
  using Error::Error;
};

}  // namespace pgraph

#endif  // PGRAPH_ERRORS_HPP
