#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace longtail {

// Base for all toolkit errors. Subclasses map to CLI exit codes:
// parse/schema/integrity/domain -> 3, I/O -> 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed JSON. Carries the byte offset reported by the parser.
class ParseError : public Error {
 public:
  ParseError(std::size_t byte_offset, const std::string& what)
      : Error(what), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Well-formed JSON that does not follow the expected schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Dangling references or broken structural invariants in the data.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain (bad argument, empty input).
class DomainError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace longtail
