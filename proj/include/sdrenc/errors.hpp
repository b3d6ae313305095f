#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace sdrenc {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two SDRs (or encodings) of different total size were combined.
class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t left, std::size_t right)
      : Error("dimension mismatch: n=" + std::to_string(left) + " vs n=" + std::to_string(right)),
        left_(left),
        right_(right) {}
  std::size_t left() const noexcept { return left_; }
  std::size_t right() const noexcept { return right_; }

 private:
  std::size_t left_;
  std::size_t right_;
};

class InvalidSdr : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("parse error at position " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Bad input value (non-finite number, negative speed, malformed timestamp...).
class InputError : public Error {
 public:
  using Error::Error;
};

// Integer overflow of a bucket index or grid neighborhood.
class RangeError : public Error {
 public:
  using Error::Error;
};

class ProjectionError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  ConfigError(std::string key, const std::string& what)
      : Error(key.empty() ? what : "config key '" + key + "': " + what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class UnknownCategory : public Error {
 public:
  explicit UnknownCategory(std::string label)
      : Error("unknown category '" + label + "'"), label_(std::move(label)) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

class MissingField : public Error {
 public:
  explicit MissingField(std::string field)
      : Error("missing field '" + field + "'"), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// A child encoder failed while encoding one field of a record.
class FieldError : public Error {
 public:
  FieldError(std::string field, const std::string& what)
      : Error("field '" + field + "': " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class EvaluationError : public Error {
 public:
  EvaluationError(std::size_t first, std::size_t second, const std::string& what)
      : Error("distance failed on pair (" + std::to_string(first) + ", " + std::to_string(second) + "): " + what),
        first_(first),
        second_(second) {}
  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

}  // namespace sdrenc
