#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "frobnorm/monomial.hpp"
#include "frobnorm/polynomial.hpp"

namespace frobnorm {

/// Remainder of multivariate division of f by divisors under order: f - r
/// lies in the ideal of the divisors and no term of r is divisible by a
/// leading monomial of a divisor. For a Groebner basis r is the unique normal
/// form. The result is stored in f's ring.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const MonomialOrder& order);

/// Reduced Groebner basis of the ideal generated by gens.
///
/// Elements are monic, stored in ring->with_order(order) and sorted by
/// increasing leading monomial, so equal ideals give term-identical output.
/// The zero ideal gives an empty list, the unit ideal {1}.
std::vector<Polynomial> groebner_basis(std::span<const Polynomial> gens,
                                       const MonomialOrder& order);

/// Whether gens is a Groebner basis (every S-polynomial reduces to zero).
bool is_groebner_basis(std::span<const Polynomial> gens, const MonomialOrder& order);

/// S-polynomial of f and g under order (monic leading terms cancel).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Number of groebner_basis computations run by this process.
std::uint64_t groebner_calls() noexcept;

/// Upper bound on simultaneously queued critical pairs; 0 disables the cap.
/// Exceeding it raises Error(ResourceLimit).
void set_pair_queue_cap(std::size_t cap) noexcept;
std::size_t pair_queue_cap() noexcept;

}  // namespace frobnorm
