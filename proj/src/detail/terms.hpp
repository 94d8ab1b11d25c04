#pragma once

#include <cstddef>
#include <vector>

#include "frobnorm/field.hpp"
#include "frobnorm/monomial.hpp"

namespace frobnorm::detail {

/// Flat descending term storage shared by the polynomial and Groebner kernels.
struct TermList {
  std::vector<Coeff> coeffs;
  std::vector<Exponent> exps;

  std::size_t size() const noexcept { return coeffs.size(); }
  void clear() {
    coeffs.clear();
    exps.clear();
  }
  void push(Coeff c, const Exponent* row, std::size_t n) {
    coeffs.push_back(c);
    exps.insert(exps.end(), row, row + n);
  }
};

/// out = a + b, where both inputs are sorted descending under order.
/// Terms that cancel are dropped. out must not alias a or b.
void merge_add(const PrimeField& field, const MonomialOrder& order, std::size_t n,
               const Coeff* ac, const Exponent* ae, std::size_t alen,
               const Coeff* bc, const Exponent* be, std::size_t blen, TermList& out);

/// Sort rows descending and combine duplicates in place.
void canonicalize(const PrimeField& field, const MonomialOrder& order, std::size_t n,
                  TermList& terms);

}  // namespace frobnorm::detail
