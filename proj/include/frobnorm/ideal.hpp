#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "frobnorm/groebner.hpp"
#include "frobnorm/monomial.hpp"
#include "frobnorm/polynomial.hpp"

namespace frobnorm {

/// An ideal of a polynomial ring, given by generators, with a per-order
/// cache of reduced Groebner bases. Copies share the cache.
///
/// Ideals of a quotient ring S/P are always represented by their lifts to
/// S (ideals containing P).
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }
  static Ideal unit(const RingPtr& ring) { return Ideal(ring, {ring->one()}); }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }

  /// Reduced Groebner basis, computed once per order. Thread-safe.
  const std::vector<Polynomial>& groebner_basis(
      const MonomialOrder& order = MonomialOrder::grevlex()) const;

  /// Normal form with respect to the grevlex basis.
  Polynomial reduce(const Polynomial& f) const;

  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }
  bool contains(const Ideal& other) const;
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;

 private:
  struct Cache;

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

Ideal operator+(const Ideal& a, const Ideal& b);
Ideal operator*(const Ideal& a, const Ideal& b);
Ideal operator*(const Polynomial& f, const Ideal& a);

inline bool ideal_membership(const Polynomial& f, const Ideal& ideal) {
  return ideal.contains(f);
}

/// Equal reduced grevlex bases, term by term.
bool ideal_equals(const Ideal& a, const Ideal& b);

/// I intersected with the subring in the last n - k variables, via block(k).
/// The result lives in I's ring.
Ideal eliminate(const Ideal& ideal, std::size_t k);

/// I ∩ J via a tag variable t: eliminate t from t*I + (1 - t)*J.
Ideal intersect(const Ideal& a, const Ideal& b);

/// I : (g), computed as (I ∩ (g)) / g. Throws if g is zero.
Ideal quotient(const Ideal& ideal, const Polynomial& g);
/// I : J as the intersection of I : (g) over the generators g of J.
/// Throws Error(InvalidArgument) when J is the zero ideal.
Ideal quotient(const Ideal& ideal, const Ideal& divisor);

/// n - dim(S/I), the Krull dimension read off the grevlex leading-term ideal
/// as the largest set of variables independent modulo it.
/// Throws Error(InvalidArgument) for the unit ideal.
std::size_t codim(const Ideal& ideal);

std::string to_string(const Ideal& ideal);

}  // namespace frobnorm
