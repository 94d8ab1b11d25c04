#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frobnorm/field.hpp"
#include "frobnorm/monomial.hpp"

namespace frobnorm {

class PolyRing;
class Polynomial;
using RingPtr = std::shared_ptr<const PolyRing>;

/// F_p[x_1..x_n] with a fixed variable list and a term order used for storage.
class PolyRing : public std::enable_shared_from_this<PolyRing> {
 public:
  static RingPtr make(std::uint32_t p, std::vector<std::string> names,
                      MonomialOrder order = MonomialOrder::grevlex());

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t characteristic() const noexcept { return field_.characteristic(); }
  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const MonomialOrder& order() const noexcept { return order_; }

  /// Same variables and field, different storage order.
  RingPtr with_order(const MonomialOrder& order) const;

  /// Equal characteristic and variable names; the storage order may differ.
  bool same_ambient(const PolyRing& other) const noexcept;

  std::optional<std::size_t> index_of(std::string_view name) const;

  Polynomial zero() const;
  Polynomial one() const;
  Polynomial constant(std::int64_t c) const;
  Polynomial variable(std::size_t i) const;
  Polynomial variable(std::string_view name) const;
  Polynomial monomial(const Monomial& m, Coeff c = 1) const;

 private:
  struct Token {};

 public:
  PolyRing(Token, std::uint32_t p, std::vector<std::string> names, MonomialOrder order);

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

void require_same_ambient(const PolyRing& a, const PolyRing& b);

/// Sparse distributed polynomial over F_p.
///
/// Terms are stored flat, sorted strictly descending under the ring's order,
/// with no zero coefficients. Values are immutable in practice: every
/// operation returns a new polynomial.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  /// Build from arbitrary (monomial, coefficient) pairs; duplicates are
  /// combined and zeros dropped.
  static Polynomial from_terms(RingPtr ring,
                               const std::vector<std::pair<Monomial, std::int64_t>>& terms);

  /// Adopt already canonical storage: rows sorted strictly descending in the
  /// ring's order, all coefficients nonzero. Not checked.
  static Polynomial from_sorted(RingPtr ring, std::vector<Coeff> coeffs,
                                std::vector<Exponent> exps);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Zero or a single term of degree 0.
  bool is_constant() const noexcept;

  Coeff coeff(std::size_t i) const { return coeffs_[i]; }
  const Exponent* row(std::size_t i) const { return exps_.data() + i * nvars_; }
  std::span<const Exponent> exponents(std::size_t i) const { return {row(i), nvars_}; }
  Monomial monomial(std::size_t i) const { return Monomial(exponents(i)); }

  /// Leading term under the ring's order. Undefined on zero.
  Coeff leading_coeff() const { return coeffs_.front(); }
  Monomial leading_monomial() const { return monomial(0); }
  /// Leading monomial under an arbitrary order.
  Monomial leading_monomial(const MonomialOrder& order) const;

  std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
  std::span<const Exponent> flat_exponents() const noexcept { return exps_; }

  /// Total degree; -1 for the zero polynomial.
  std::int64_t degree() const noexcept;
  /// Whether any term involves variable i.
  bool involves(std::size_t i) const noexcept;
  /// Coefficient of the monomial m, 0 if absent.
  Coeff coefficient_of(const Monomial& m) const;

  /// The same polynomial stored in another ring with the same ambient.
  Polynomial in_ring(const RingPtr& ring) const;

  Polynomial monic() const;
  Polynomial scaled(Coeff c) const;
  /// c * x^m * this, where m is an exponent row of length nvars().
  Polynomial mul_term(Coeff c, const Exponent* m) const;
  Polynomial mul_term(Coeff c, const Monomial& m) const {
    return mul_term(c, m.exponents().data());
  }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  Polynomial(RingPtr ring, std::vector<Coeff> coeffs, std::vector<Exponent> exps);

  RingPtr ring_;
  std::size_t nvars_;
  std::vector<Coeff> coeffs_;
  std::vector<Exponent> exps_;
};

Polynomial operator*(const Polynomial& f, std::int64_t c);
inline Polynomial operator*(std::int64_t c, const Polynomial& f) { return f * c; }

Polynomial pow(const Polynomial& f, std::uint64_t e);

/// f^p. Over F_p this multiplies every exponent by p and fixes coefficients.
Polynomial frobenius_power(const Polynomial& f);

/// Formal partial derivative with respect to variable i.
Polynomial derivative(const Polynomial& f, std::size_t var);

/// Ring map that sends variable i of f's ring to variable var_map[i] of
/// target (nullopt: the variable must not occur in f).
Polynomial remap_variables(const Polynomial& f, const RingPtr& target,
                           std::span<const std::optional<std::size_t>> var_map);

/// Substitute images[i] for variable i; images live in a common ring.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

/// Exact quotient f / g. Throws Error(InvalidArgument) if g does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

/// Canonical text, descending under the ring's order, e.g. "x^2*v - y^2*u".
/// Coefficients are printed in the symmetric range (-p/2, p/2].
std::string to_string(const Polynomial& f);

}  // namespace frobnorm
