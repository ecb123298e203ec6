#include "vdem/autodiff/tape.hpp"

#include <cmath>

#include "vdem/errors.hpp"

namespace vdem::ad {

namespace {
thread_local Tape* g_active = nullptr;
}

Tape* Tape::active() noexcept { return g_active; }

TapeScope::TapeScope(Tape& tape) : previous_(g_active) { g_active = &tape; }
TapeScope::~TapeScope() { g_active = previous_; }

void Tape::backward(std::int32_t root) {
  adjoints_.assign(nodes_.size(), 0.0);
  if (root < 0) return;
  adjoints_[static_cast<std::size_t>(root)] = 1.0;
  for (std::int32_t i = root; i >= 0; --i) {
    const double adj = adjoints_[static_cast<std::size_t>(i)];
    if (adj == 0.0) continue;
    const Node& n = nodes_[static_cast<std::size_t>(i)];
    if (n.a >= 0) adjoints_[static_cast<std::size_t>(n.a)] += adj * n.pa;
    if (n.b >= 0) adjoints_[static_cast<std::size_t>(n.b)] += adj * n.pb;
  }
}

Var Var::leaf(double value) { return Var(value, Tape::active()->push(OpKind::Leaf, -1, 0.0, -1, 0.0)); }

Var exp(const Var& a) {
  const double e = std::exp(a.v);
  return detail::unary(OpKind::Exp, a, e, e);
}

Var log(const Var& a) { return detail::unary(OpKind::Log, a, std::log(a.v), 1.0 / a.v); }

Var tanh(const Var& a) {
  const double t = std::tanh(a.v);
  return detail::unary(OpKind::Tanh, a, t, 1.0 - t * t);
}

Var sqrt(const Var& a) {
  const double s = std::sqrt(a.v);
  return detail::unary(OpKind::Sqrt, a, s, 0.5 / s);
}

Var pow(const Var& a, double p) {
  return detail::unary(OpKind::Pow, a, std::pow(a.v, p), p * std::pow(a.v, p - 1.0));
}

std::vector<double> param_gradient(const Var& loss, std::span<const Var> wrt) {
  if (!std::isfinite(loss.v)) throw NonFiniteLoss(loss.v);
  std::vector<double> grad(wrt.size(), 0.0);
  if (loss.is_constant()) return grad;
  Tape* tape = Tape::active();
  tape->backward(loss.idx);
  for (std::size_t i = 0; i < wrt.size(); ++i) grad[i] = tape->adjoint(wrt[i].idx);
  return grad;
}

}  // namespace vdem::ad
