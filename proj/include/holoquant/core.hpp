#pragma once

#include <complex>
#include <limits>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>

namespace holoquant {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

enum class ErrorKind {
  InvalidArgument,
  UnsupportedOperation,
  DegenerateEquivalence,
  InsufficientTruncation,
  ConvergenceFailure,
  ParseError,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& w) : Error(ErrorKind::InvalidArgument, w) {}
};
struct UnsupportedOperation : Error {
  explicit UnsupportedOperation(const std::string& w) : Error(ErrorKind::UnsupportedOperation, w) {}
};
struct DegenerateEquivalence : Error {
  explicit DegenerateEquivalence(const std::string& w) : Error(ErrorKind::DegenerateEquivalence, w) {}
};
struct InsufficientTruncation : Error {
  explicit InsufficientTruncation(const std::string& w) : Error(ErrorKind::InsufficientTruncation, w) {}
};

struct ConvergenceFailure : Error {
  ConvergenceFailure(const std::string& w, int required)
      : Error(ErrorKind::ConvergenceFailure, w), required_cutoff(required) {}
  int required_cutoff;  // doubled, i.e. 2L
};

struct ParseError : Error {
  ParseError(const std::string& w, std::size_t pos)
      : Error(ErrorKind::ParseError, w + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

struct IoError : Error {
  explicit IoError(const std::string& w) : Error(ErrorKind::IoError, w) {}
};

// hbar, or t in the holomorphic-space setting
class PlanckScale {
 public:
  explicit PlanckScale(double v) : v_(v) {
    if (!(v > 0.0) || v == std::numeric_limits<double>::infinity())
      throw InvalidArgument("PlanckScale must be positive and finite");
  }
  double value() const noexcept { return v_; }
  friend bool operator==(PlanckScale a, PlanckScale b) { return a.v_ == b.v_; }

 private:
  double v_;
};

}  // namespace holoquant
