#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace ddrt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A position does not address a subterm of the term it was applied to.
class InvalidPosition : public Error {
 public:
  using Error::Error;
};

/// A rule or rule set violates a well-formedness condition.
class InvalidRule : public Error {
 public:
  enum class Kind { VariableLhs, ExtraVariableRhs, ArityClash, DuplicateIndex };

  InvalidRule(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// An exploration exceeded its configured node budget.  Callers treat this
/// as "unknown", never as evidence either way.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// The shared deadline of a proof attempt expired.
class Timeout : public Error {
 public:
  Timeout() : Error("timeout") {}
};

/// Wall-clock deadline shared by all criteria of one proof attempt.  A
/// default-constructed deadline never expires.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  explicit Deadline(std::chrono::milliseconds budget) : end_(Clock::now() + budget) {}

  bool expired() const { return end_ && Clock::now() >= *end_; }

  void check() const {
    if (expired()) throw Timeout();
  }

  std::optional<std::chrono::milliseconds> remaining() const {
    if (!end_) return std::nullopt;
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(*end_ - Clock::now());
    return left.count() > 0 ? left : std::chrono::milliseconds(0);
  }

 private:
  std::optional<Clock::time_point> end_;
};

}  // namespace ddrt
