#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace frobnorm {

using Exponent = std::uint32_t;

/// Exponent vector of a power product. Degrees add under multiplication.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  explicit Monomial(std::span<const Exponent> exps) : exps_(exps.begin(), exps.end()) {}

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  std::uint64_t degree() const noexcept;
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// A multiplicative well-order on exponent vectors.
///
/// Block(k) compares the first k exponents by grevlex and breaks ties with
/// grevlex on the remaining ones, so it eliminates the first k variables.
class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { Lex, GRevLex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GRevLex, 0); }
  static MonomialOrder block(std::size_t k) { return MonomialOrder(Kind::Block, k); }

  Kind kind() const noexcept { return kind_; }
  std::size_t block_size() const noexcept { return block_; }

  /// Three-way comparison of two exponent rows of length n: -1, 0 or +1.
  int compare(const Exponent* a, const Exponent* b, std::size_t n) const noexcept {
    switch (kind_) {
      case Kind::Lex:
        for (std::size_t i = 0; i < n; ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case Kind::GRevLex:
        return grevlex_range(a, b, 0, n);
      case Kind::Block: {
        std::size_t k = block_ < n ? block_ : n;
        if (int c = grevlex_range(a, b, 0, k)) return c;
        return grevlex_range(a, b, k, n);
      }
    }
    return 0;
  }
  int compare(const Monomial& a, const Monomial& b) const noexcept {
    return compare(a.exponents().data(), b.exponents().data(), a.size());
  }

  std::string name() const;

  friend auto operator<=>(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  static int grevlex_range(const Exponent* a, const Exponent* b, std::size_t lo,
                           std::size_t hi) noexcept {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  Kind kind_;
  std::size_t block_;
};

}  // namespace frobnorm
