#pragma once

#include <stdexcept>
#include <string>

namespace bchyper {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NullConeError : public Error {
 public:
  using Error::Error;
};

class BranchCutError : public Error {
 public:
  using Error::Error;
};

/// Gamma or Pochhammer argument at a pole. `component()` is 1 or 2 for the
/// idempotent component that hit the pole, 0 for a plain complex argument.
class PoleError : public Error {
 public:
  PoleError(const std::string& what, int component = 0)
      : Error(what), component_(component) {}
  int component() const noexcept { return component_; }

 private:
  int component_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class PositivityError : public Error {
 public:
  using Error::Error;
};

class TruncationError : public Error {
 public:
  using Error::Error;
};

class ParamMismatch : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace bchyper
