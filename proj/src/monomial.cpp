#include "frobnorm/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace frobnorm {

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  assert(size() == other.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  assert(b.divides(a));
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return r;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::GRevLex: return "grevlex";
    case Kind::Block: return "block(" + std::to_string(block_) + ")";
  }
  return "?";
}

}  // namespace frobnorm
