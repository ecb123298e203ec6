#ifndef VDEM_ERRORS_HPP
#define VDEM_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace vdem {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A loss (or energy) evaluated to NaN/Inf.
class NonFiniteLoss : public Error {
 public:
  explicit NonFiniteLoss(double value, const std::string& context = {})
      : Error("non-finite loss " + std::to_string(value) + (context.empty() ? "" : " (" + context + ")")),
        value_(value) {}
  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// det F <= 0 at a material point.
class InvertedElement : public Error {
 public:
  InvertedElement(double det, double x, double y)
      : Error("inverted deformation (det F = " + std::to_string(det) + ") at (" + std::to_string(x) + ", " +
              std::to_string(y) + ")"),
        det_(det), x_(x), y_(y) {}
  double det() const noexcept { return det_; }
  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }

 private:
  double det_, x_, y_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class IncompressibleLimit : public Error {
 public:
  explicit IncompressibleLimit(double nu)
      : Error("Poisson ratio " + std::to_string(nu) + " is at or beyond the incompressible limit 0.5") {}
};

/// Aggregated configuration validation failure; every message names its key.
class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<std::string> messages)
      : Error(join(messages)), messages_(std::move(messages)) {}
  const std::vector<std::string>& messages() const noexcept { return messages_; }

 private:
  static std::string join(const std::vector<std::string>& m) {
    std::string out = "invalid configuration:";
    for (const auto& s : m) out += "\n  " + s;
    return out;
  }
  std::vector<std::string> messages_;
};

}  // namespace vdem

#endif  // VDEM_ERRORS_HPP
