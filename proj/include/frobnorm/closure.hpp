#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "frobnorm/conductor.hpp"
#include "frobnorm/ideal.hpp"
#include "frobnorm/polynomial.hpp"

namespace frobnorm {

/// One stage of the descending chain. U is the lift of U_e = D * V_e and
/// L = D^(p-1) * U + P is the modulus for the next Frobenius step.
struct ClosureState {
  std::size_t e = 0;
  Ideal U;
  Ideal L;
};

struct ClosureOptions {
  /// Conductor element to use instead of a Jacobian minor. Trusted to lie in
  /// the conductor; checked for being a nonzerodivisor.
  std::optional<Polynomial> conductor;
  std::size_t max_iterations = 64;
};

/// The integral closure as the R-module (1/D) * U. For a ring that had to be
/// split, components holds one result per factor and only presentation and
/// denominator (the zerodivisor that triggered the split) are meaningful.
struct ClosureResult {
  Presentation presentation;
  Polynomial denominator;
  Ideal closure_ideal;
  std::vector<Polynomial> numerators;
  std::size_t iterations = 0;
  std::vector<std::vector<Polynomial>> chain;
  std::vector<ClosureResult> components;

  bool is_split() const noexcept { return !components.empty(); }
  /// Leaf results in depth-first order (this result itself if not split).
  std::vector<const ClosureResult*> leaves() const;
  /// R is already normal: the closure is generated by 1.
  bool is_normal() const;
};

/// The state at e = 0: U = (1), L = D^(p-1) + P.
ClosureState initial_state(const Presentation& pres, const Polynomial& d);

/// {r : r^p in L}, returned as an ideal of S containing P. L must contain P.
Ideal frobenius_preimage(const Presentation& pres, const Ideal& modulus);

/// U_{e+1} = U_e ∩ {r : r^p in D^(p-1) U_e + P}.
ClosureState closure_step(const Presentation& pres, const Polynomial& d,
                          const ClosureState& state);

/// Iterate closure_step from U_0 = (1) until the chain stabilizes.
ClosureResult integral_closure(const Presentation& pres, const ClosureOptions& options = {});

/// Deterministic small generating set of U modulo P, pruned greedily from
/// the largest (degree, term order) candidate down.
std::vector<Polynomial> trim_generators(const Presentation& pres, const Ideal& U);

/// r lies in the integral closure of aR iff D r^(p^i) is in a^(p^i) R for all
/// i <= e + 1, where e is the stabilization index of a run with this D.
bool principal_closure_member(const Presentation& pres, const Polynomial& d, std::size_t e,
                              const Polynomial& a, const Polynomial& r);

struct VerificationCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  bool passed() const noexcept;
};

/// Independent consistency checks of a finished result: fixed point,
/// integrality witnesses n^(p^i) in D^(p^i - 1) R, closure under products,
/// D present, numerators generating U. Split results are checked per leaf.
VerificationReport verify_result(const ClosureResult& result);

}  // namespace frobnorm
