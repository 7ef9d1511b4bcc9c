#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fpt {

// Parse failure; carries the byte offset into the input text.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

private:
  std::size_t pos_;
};

// Invalid value for a domain operation (bad modulus, zero denominator, ...).
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A configured resource bound was exceeded (delta sum width, search degree,
// residue field size, ...).
class BoundExceeded : public DomainError {
public:
  using DomainError::DomainError;
};

// descend_generators was called on an ideal that is not closed under the
// derivations D^(i), 1 <= i < p^m.
class NotDClosed : public DomainError {
public:
  using DomainError::DomainError;
};

// The element is not a v-adic unit at the requested place.
class NotAUnitAt : public DomainError {
public:
  explicit NotAUnitAt(const std::string& place_text)
      : DomainError("element is not a unit at place " + place_text) {}
};

}  // namespace fpt
