#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "sdrenc/errors.hpp"

namespace sdrenc {

/// Streaming RFC 4180-style reader: quoted fields, doubled quotes, CRLF, and
/// newlines inside quotes. Holds one record at a time.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in, char delimiter = ',') : in_(in), delimiter_(delimiter) {}

  // Reads the next record into `fields`; false at end of input.
  bool next(std::vector<std::string>& fields) {
    fields.clear();
    int c = in_.get();
    if (c == EOF) return false;
    ++line_;
    record_line_ = line_;
    std::string field;
    bool quoted = false;
    bool was_quoted = false;
    for (;; c = in_.get()) {
      if (c == EOF) {
        if (quoted) throw ParseError(record_line_, "unterminated quoted field (line " + std::to_string(record_line_) + ")");
        break;
      }
      const char ch = static_cast<char>(c);
      if (quoted) {
        if (ch == '"') {
          if (in_.peek() == '"') {
            field += '"';
            in_.get();
          } else {
            quoted = false;
          }
        } else {
          if (ch == '\n') ++line_;
          field += ch;
        }
        continue;
      }
      if (ch == '"' && field.empty() && !was_quoted) {
        quoted = was_quoted = true;
      } else if (ch == delimiter_) {
        fields.push_back(std::move(field));
        field.clear();
        was_quoted = false;
      } else if (ch == '\n') {
        break;
      } else if (ch == '\r') {
        if (in_.peek() == '\n') in_.get();
        break;
      } else {
        field += ch;
      }
    }
    fields.push_back(std::move(field));
    return true;
  }

  // First physical line of the record returned by the last next().
  std::size_t line() const noexcept { return record_line_; }

 private:
  std::istream& in_;
  char delimiter_;
  std::size_t line_ = 0;
  std::size_t record_line_ = 0;
};

}  // namespace sdrenc
