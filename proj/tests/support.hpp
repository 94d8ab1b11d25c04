#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "frobnorm/ideal.hpp"
#include "frobnorm/polynomial.hpp"
#include "frobnorm/problem.hpp"

namespace testing {

using namespace frobnorm;

inline Polynomial poly(const RingPtr& ring, const std::string& text) {
  return parse_polynomial(ring, text);
}

inline std::vector<Polynomial> polys(const RingPtr& ring, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(poly(ring, t));
  return out;
}

inline Ideal ideal(const RingPtr& ring, std::initializer_list<const char*> texts) {
  return Ideal(ring, polys(ring, texts));
}

inline Polynomial random_poly(const RingPtr& ring, std::mt19937& rng, std::size_t terms,
                              Exponent max_exp) {
  std::uniform_int_distribution<Exponent> ed(0, max_exp);
  std::uniform_int_distribution<std::int64_t> cd(1, ring->characteristic() - 1);
  std::vector<std::pair<Monomial, std::int64_t>> out;
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<Exponent> e(ring->nvars());
    for (auto& v : e) v = ed(rng);
    out.emplace_back(Monomial(std::move(e)), cd(rng));
  }
  return Polynomial::from_terms(ring, out);
}

inline Polynomial random_monomial(const RingPtr& ring, std::mt19937& rng, Exponent max_exp) {
  std::uniform_int_distribution<Exponent> ed(0, max_exp);
  std::vector<Exponent> e(ring->nvars());
  for (auto& v : e) v = ed(rng);
  return ring->monomial(Monomial(std::move(e)));
}

/// Lifts U and W of two fraction modules (1/a)U and (1/b)W agree iff b*U = a*W.
inline bool same_fraction_module(const Ideal& P, const Polynomial& a, const Ideal& U,
                                 const Polynomial& b, const Ideal& W) {
  return ideal_equals(b * U + P, a * W + P);
}

// Semigroup model of F_p[x,y,u,v]/(x^2 v - y^2 u): x, y, u, v map to
// (1,0,0), (0,1,0), (2,0,1), (0,2,1). A monomial lies in the ring's semigroup S
// iff floor(a/2) + floor(b/2) >= c, in the saturation iff a + b >= 2c.
namespace segre {

using Point = std::array<std::int64_t, 3>;

inline Point image(std::span<const Exponent> m) {
  return {static_cast<std::int64_t>(m[0] + 2 * m[2]), static_cast<std::int64_t>(m[1] + 2 * m[3]),
          static_cast<std::int64_t>(m[2] + m[3])};
}

inline bool in_semigroup(const Point& m) {
  return m[0] >= 0 && m[1] >= 0 && m[2] >= 0 && m[0] / 2 + m[1] / 2 >= m[2];
}

inline bool in_saturation(const Point& m) {
  return m[0] >= 0 && m[1] >= 0 && m[2] >= 0 && m[0] + m[1] >= 2 * m[2];
}

inline Point minus(const Point& a, const Point& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

/// Exponent set of U_e for conductor monomial with image d.
inline bool in_chain(std::uint32_t p, const Point& d, std::size_t e, const Point& m) {
  if (!in_semigroup(m)) return false;
  if (e == 0) return true;
  Point frob{p * m[0] - (p - 1) * d[0], p * m[1] - (p - 1) * d[1], p * m[2] - (p - 1) * d[2]};
  return in_chain(p, d, e - 1, m) && in_chain(p, d, e - 1, frob);
}

/// Exponent set of D times the normalization.
inline bool in_closure(const Point& d, const Point& m) {
  return in_semigroup(m) && in_saturation(minus(m, d));
}

/// Every monomial of degree <= bound: membership in U agrees with pred.
template <class Pred>
bool agrees_on_monomials(const RingPtr& ring, const Ideal& U, int bound, Pred pred) {
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; a + b <= bound; ++b)
      for (int c = 0; a + b + c <= bound; ++c)
        for (int d = 0; a + b + c + d <= bound; ++d) {
          std::vector<Exponent> e{Exponent(a), Exponent(b), Exponent(c), Exponent(d)};
          Point img = image(e);
          if (U.contains(ring->monomial(Monomial(e))) != pred(img)) return false;
        }
  return true;
}

}  // namespace segre

}  // namespace testing
