#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace palmreg {

/// Failure scoped to a single sample. The short code is stable and ends up in
/// the batch report's status column as "skipped:<code>"; the what() string
/// carries the human-readable detail.
class SampleError : public std::runtime_error {
 public:
  SampleError(std::string code, const std::string& detail)
      : std::runtime_error(detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// File could not be read or written.
class IoError : public SampleError {
 public:
  explicit IoError(const std::string& detail) : SampleError("io", detail) {}
};

/// File was readable but not in a supported format.
class FormatError : public SampleError {
 public:
  explicit FormatError(const std::string& detail) : SampleError("format", detail) {}
};

}  // namespace palmreg
