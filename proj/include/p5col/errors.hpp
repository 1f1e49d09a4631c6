#pragma once

#include <stdexcept>
#include <string>

namespace p5col {

/// Malformed graph, weights or coloring input. `line` is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// An exact or enumerative routine refused an instance above its configured
/// size limit.
class CutoffExceeded : public std::runtime_error {
 public:
  CutoffExceeded(const std::string& what, long long size, long long limit)
      : std::runtime_error(what + " (size " + std::to_string(size) +
                           " exceeds desk-scale limit " + std::to_string(limit) +
                           ")"),
        size_(size),
        limit_(limit) {}
  long long size() const { return size_; }
  long long limit() const { return limit_; }

 private:
  long long size_;
  long long limit_;
};

}  // namespace p5col
