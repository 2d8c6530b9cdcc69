#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nearring {

/// Index of an element of a finite carrier. Index 0 is always the additive
/// identity.
using Elem = std::uint32_t;

/// Dense row-major table of element indices.
class Table {
 public:
  Table() = default;
  Table(std::size_t rows, std::size_t cols, Elem fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  const std::vector<Elem>& data() const { return data_; }

  friend bool operator==(const Table&, const Table&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document or table shape.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (non-unital ring for a
/// unit-dependent query, non-ring base for an extension, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Size limits. Construction is cubic in the order for validation, the
/// classification scans are cubic per element in the worst case.
struct Caps {
  std::size_t construct = 4096;
  std::size_t classify = 256;
  std::size_t ideal_enumeration = 64;
  std::size_t iso_bruteforce = 8;
  std::size_t ideal_count = 100000;
};

}  // namespace nearring
