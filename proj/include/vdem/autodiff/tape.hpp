#ifndef VDEM_AUTODIFF_TAPE_HPP
#define VDEM_AUTODIFF_TAPE_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace vdem::ad {

enum class OpKind : std::uint8_t { Leaf, Add, Sub, Mul, Div, Neg, Exp, Log, Tanh, Pow, Sqrt };

/**
 * Append-only record of scalar operations for reverse-mode differentiation.
 *
 * Every node has at most two inputs; partials are stored at record time so
 * the backward sweep is a single linear pass. Variables are recorded on the
 * tape that is active on the calling thread (see TapeScope).
 */
class Tape {
 public:
  struct Node {
    std::int32_t a;
    std::int32_t b;
    double pa;
    double pb;
    OpKind op;
  };

  std::int32_t push(OpKind op, std::int32_t a, double pa, std::int32_t b, double pb) {
    nodes_.push_back({a, b, pa, pb, op});
    return static_cast<std::int32_t>(nodes_.size() - 1);
  }

  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }

  void clear() {
    nodes_.clear();
    adjoints_.clear();
  }

  void reserve(std::size_t n) { nodes_.reserve(n); }

  /// Reverse sweep seeded at `root`. Adjoints are available afterwards.
  void backward(std::int32_t root);

  double adjoint(std::int32_t index) const { return index < 0 ? 0.0 : adjoints_[static_cast<std::size_t>(index)]; }

  static Tape* active() noexcept;

 private:
  friend class TapeScope;
  std::vector<Node> nodes_;
  std::vector<double> adjoints_;
};

/// Makes a tape the active recording target for the current thread.
class TapeScope {
 public:
  explicit TapeScope(Tape& tape);
  ~TapeScope();
  TapeScope(const TapeScope&) = delete;
  TapeScope& operator=(const TapeScope&) = delete;

 private:
  Tape* previous_;
};

/**
 * Reverse-mode scalar. A negative index marks a constant that is not
 * recorded; operations between constants stay constants.
 */
struct Var {
  double v = 0.0;
  std::int32_t idx = -1;

  Var() = default;
  Var(double value) : v(value) {}  // NOLINT: implicit promotion of constants
  Var(double value, std::int32_t index) : v(value), idx(index) {}

  /// Record a new independent variable on the active tape.
  static Var leaf(double value);

  bool is_constant() const noexcept { return idx < 0; }
  double value() const noexcept { return v; }

  Var& operator+=(const Var& o);
  Var& operator-=(const Var& o);
  Var& operator*=(const Var& o);
  Var& operator/=(const Var& o);
};

namespace detail {
inline Var unary(OpKind op, const Var& a, double value, double partial) {
  if (a.is_constant()) return Var(value);
  return Var(value, Tape::active()->push(op, a.idx, partial, -1, 0.0));
}
inline Var binary(OpKind op, const Var& a, double pa, const Var& b, double pb, double value) {
  if (a.is_constant() && b.is_constant()) return Var(value);
  return Var(value, Tape::active()->push(op, a.idx, pa, b.idx, pb));
}
}  // namespace detail

inline Var operator+(const Var& a, const Var& b) { return detail::binary(OpKind::Add, a, 1.0, b, 1.0, a.v + b.v); }
inline Var operator-(const Var& a, const Var& b) { return detail::binary(OpKind::Sub, a, 1.0, b, -1.0, a.v - b.v); }
inline Var operator*(const Var& a, const Var& b) { return detail::binary(OpKind::Mul, a, b.v, b, a.v, a.v * b.v); }
inline Var operator/(const Var& a, const Var& b) {
  const double inv = 1.0 / b.v;
  const double q = a.v * inv;
  return detail::binary(OpKind::Div, a, inv, b, -q * inv, q);
}
inline Var operator-(const Var& a) { return detail::unary(OpKind::Neg, a, -a.v, -1.0); }

inline Var operator+(const Var& a, double b) { return detail::unary(OpKind::Add, a, a.v + b, 1.0); }
inline Var operator+(double a, const Var& b) { return b + a; }
inline Var operator-(const Var& a, double b) { return detail::unary(OpKind::Sub, a, a.v - b, 1.0); }
inline Var operator-(double a, const Var& b) { return detail::unary(OpKind::Sub, b, a - b.v, -1.0); }
inline Var operator*(const Var& a, double b) { return detail::unary(OpKind::Mul, a, a.v * b, b); }
inline Var operator*(double a, const Var& b) { return b * a; }
inline Var operator/(const Var& a, double b) { return a * (1.0 / b); }
inline Var operator/(double a, const Var& b) {
  const double inv = 1.0 / b.v;
  return detail::unary(OpKind::Div, b, a * inv, -a * inv * inv);
}

inline Var& Var::operator+=(const Var& o) { return *this = *this + o; }
inline Var& Var::operator-=(const Var& o) { return *this = *this - o; }
inline Var& Var::operator*=(const Var& o) { return *this = *this * o; }
inline Var& Var::operator/=(const Var& o) { return *this = *this / o; }

Var exp(const Var& a);
Var log(const Var& a);
Var tanh(const Var& a);
Var sqrt(const Var& a);
Var pow(const Var& a, double p);

/**
 * Gradient of a scalar recorded on the active tape with respect to `wrt`.
 * Throws NonFiniteLoss when the loss value is not finite.
 */
std::vector<double> param_gradient(const Var& loss, std::span<const Var> wrt);

}  // namespace vdem::ad

#endif  // VDEM_AUTODIFF_TAPE_HPP
