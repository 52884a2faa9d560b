#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace bell {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument outside its documented domain (probability, efficiency, angle).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A setting the queried model does not answer for. wing is 1 or 2, or 0 when
// the wing is not known at the throw site.
class UnknownSettingError : public Error {
 public:
  UnknownSettingError(int wing, std::string setting)
      : Error(wing == 0 ? "unknown setting: " + setting
                        : "unknown setting on wing " + std::to_string(wing) + ": " + setting),
        wing_(wing),
        setting_(std::move(setting)) {}

  int wing() const { return wing_; }
  const std::string& setting() const { return setting_; }

 private:
  int wing_;
  std::string setting_;
};

// A quadrature or sampling plan that does not fit the model's lambda space.
class PlanError : public Error {
 public:
  using Error::Error;
};

// Model or model-file validation failure. row() identifies the offending
// lambda entry when one is known.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg, std::optional<std::size_t> row = {})
      : Error(msg), row_(row) {}

  std::optional<std::size_t> row() const { return row_; }

 private:
  std::optional<std::size_t> row_;
};

// Malformed document: syntax, missing or unknown fields, dimension mismatch.
class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Lambda weights negative or not summing to one.
class NormalizationError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A probability (or the efficiency) outside its legal range.
class ProbabilityRangeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A joint probability outside the Frechet bounds set by its marginals:
// max(0, p1 + p2 - 1) <= joint <= min(p1, p2).
class FrechetViolationError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace bell
