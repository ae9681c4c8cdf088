#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hqft {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad shapes, parse failures, mismatched group ranks.
class InputError : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

/// A matrix whose determinant is not a unit of the coefficient ring.
class Degenerate : public Error {
 public:
  using Error::Error;
};

class GradeError : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class SignatureMismatch : public Error {
 public:
  SignatureMismatch(std::size_t layer, const std::string& detail)
      : Error("signature mismatch at layer " + std::to_string(layer) + ": " + detail),
        layer_(layer) {}

  std::size_t layer() const noexcept { return layer_; }

 private:
  std::size_t layer_;
};

class SearchSpaceTooLarge : public Error {
 public:
  explicit SearchSpaceTooLarge(const std::string& size)
      : Error("search space too large: " + size + " candidates"), size_(size) {}

  /// Exact decimal size of the refused search space.
  const std::string& size() const noexcept { return size_; }

 private:
  std::string size_;
};

}  // namespace hqft
