#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liaison {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Checked integer arithmetic left the representable range.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// Two divisor classes (or a class and a surface) live in different lattices.
class BasisMismatch : public Error {
public:
  using Error::Error;
};

class UnknownSurface : public Error {
public:
  using Error::Error;
};

/// A catalog file violated one of the documented invariants.
class CatalogError : public Error {
public:
  using Error::Error;
};

/// An operation that needs a divisor-class witness got a bare (d, g) record.
class MissingWitness : public Error {
public:
  using Error::Error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// h-vector linkage failed; `index()` is the first offending position.
class LinkError : public Error {
public:
  LinkError(const std::string& what, std::size_t index)
      : Error(what + " (index " + std::to_string(index) + ")"), index_(index) {}
  std::size_t index() const { return index_; }

private:
  std::size_t index_;
};

}  // namespace liaison
