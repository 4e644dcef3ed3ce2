#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace opdyn {

// Base for every error raised by the library. The CLI maps these to exit
// code 2 (usage/parameter) except VerificationError, which maps to 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraphError : public Error {
 public:
  using Error::Error;
};

class CalibrationError : public Error {
 public:
  using Error::Error;
};

// Raised by run() when no cycle is found within max_rounds. Carries the
// black-count tail of the trajectory for diagnosis.
class TimeoutError : public Error {
 public:
  TimeoutError(const std::string& what, std::vector<std::size_t> tail)
      : Error(what), tail_(std::move(tail)) {}
  const std::vector<std::size_t>& trajectory_tail() const noexcept { return tail_; }

 private:
  std::vector<std::size_t> tail_;
};

// An internal invariant of a verifier failed (e.g. a tie in the periodic
// majority model on H).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace opdyn
