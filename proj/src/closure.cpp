#include "frobnorm/closure.hpp"

#include <algorithm>
#include <functional>

#include "frobnorm/error.hpp"

namespace frobnorm {

namespace {

std::string fresh_name(const std::vector<std::string>& names, const std::string& stem) {
  for (int i = 0;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (std::find(names.begin(), names.end(), candidate) == names.end()) return candidate;
  }
}

/// D^(p-1) * U + P with products reduced modulo P.
Ideal frobenius_modulus(const Presentation& pres, const Polynomial& d_power, const Ideal& U) {
  std::vector<Polynomial> gens;
  for (const auto& g : U.generators()) {
    Polynomial prod = pres.reduce(d_power * g);
    if (!prod.is_zero()) gens.push_back(std::move(prod));
  }
  gens.insert(gens.end(), pres.relations().begin(), pres.relations().end());
  return Ideal(pres.ring(), std::move(gens));
}

Polynomial d_power_for(const Presentation& pres, const Polynomial& d) {
  return pres.reduce(pow(d, pres.characteristic() - 1));
}

/// Generators of U for the next round: the reduced grevlex basis with members
/// of P dropped and the rest reduced modulo P, plus P itself.
Ideal tidy(const Presentation& pres, const Ideal& U) {
  std::vector<Polynomial> gens;
  for (const auto& g : U.groebner_basis()) {
    Polynomial r = pres.reduce(g);
    if (!r.is_zero()) gens.push_back(r.monic());
  }
  gens.insert(gens.end(), pres.relations().begin(), pres.relations().end());
  return Ideal(pres.ring(), std::move(gens));
}

}  // namespace

std::vector<const ClosureResult*> ClosureResult::leaves() const {
  if (!is_split()) return {this};
  std::vector<const ClosureResult*> out;
  for (const auto& c : components) {
    auto sub = c.leaves();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

bool ClosureResult::is_normal() const {
  if (is_split()) return false;
  return numerators.size() == 1 && presentation.reduce(numerators.front() - denominator).is_zero();
}

ClosureState initial_state(const Presentation& pres, const Polynomial& d) {
  Ideal unit = Ideal::unit(pres.ring());
  return ClosureState{0, unit, frobenius_modulus(pres, d_power_for(pres, d), unit)};
}

Ideal frobenius_preimage(const Presentation& pres, const Ideal& modulus) {
  require_same_ambient(*pres.ring(), *modulus.ring());
  if (!modulus.contains(pres.ideal()))
    throw Error(ErrorCode::InvalidArgument, "Frobenius modulus must contain the defining ideal");
  if (modulus.is_unit()) return Ideal::unit(pres.ring());

  // Graph of the Frobenius map: S[y] with y_i - x_i^p, x's ranked first.
  const RingPtr& base = pres.ring();
  const std::size_t n = base->nvars();
  const auto p = base->characteristic();
  std::vector<std::string> names = base->names();
  for (std::size_t i = 0; i < n; ++i) names.push_back(fresh_name(names, "_y"));
  RingPtr graph = PolyRing::make(p, names, MonomialOrder::block(n));

  std::vector<std::optional<std::size_t>> embed(n), back(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    embed[i] = i;
    back[n + i] = i;
  }
  std::vector<Polynomial> gens;
  for (const auto& g : modulus.generators()) gens.push_back(remap_variables(g, graph, embed));
  for (std::size_t i = 0; i < n; ++i) {
    Monomial xp(2 * n);
    xp[i] = p;
    gens.push_back(graph->variable(n + i) - graph->monomial(xp));
  }

  Ideal eliminated = eliminate(Ideal(graph, std::move(gens)), n);
  std::vector<Polynomial> out;
  for (const auto& g : eliminated.generators()) out.push_back(remap_variables(g, base, back));
  out.insert(out.end(), pres.relations().begin(), pres.relations().end());
  return Ideal(base, std::move(out));
}

ClosureState closure_step(const Presentation& pres, const Polynomial& d,
                          const ClosureState& state) {
  Ideal preimage = frobenius_preimage(pres, state.L);
  Ideal next = tidy(pres, intersect(state.U, preimage));
  Ideal modulus = frobenius_modulus(pres, d_power_for(pres, d), next);
  return ClosureState{state.e + 1, std::move(next), std::move(modulus)};
}

std::vector<Polynomial> trim_generators(const Presentation& pres, const Ideal& U) {
  if (U.is_unit()) return {pres.ring()->one()};
  std::vector<Polynomial> cands;
  for (const auto& g : U.groebner_basis()) {
    Polynomial r = pres.reduce(g);
    if (!r.is_zero()) cands.push_back(r.monic());
  }
  const MonomialOrder grevlex = MonomialOrder::grevlex();
  std::sort(cands.begin(), cands.end(), [&](const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return grevlex.compare(a.leading_monomial(grevlex), b.leading_monomial(grevlex)) < 0;
  });
  std::vector<bool> keep(cands.size(), true);
  for (std::size_t k = cands.size(); k-- > 0;) {
    std::vector<Polynomial> others = pres.relations();
    for (std::size_t j = 0; j < cands.size(); ++j)
      if (j != k && keep[j]) others.push_back(cands[j]);
    if (Ideal(pres.ring(), std::move(others)).contains(cands[k])) keep[k] = false;
  }
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < cands.size(); ++k)
    if (keep[k]) out.push_back(cands[k]);
  return out;
}

namespace {

/// Swap D into the numerator list in place of a generator it can replace,
/// so that the fraction 1 shows up literally.
void prefer_denominator(const Presentation& pres, const Polynomial& d,
                        std::vector<Polynomial>& numerators) {
  for (const auto& n : numerators)
    if (pres.reduce(n - d).is_zero()) return;
  for (std::size_t k = 0; k < numerators.size(); ++k) {
    std::vector<Polynomial> gens = pres.relations();
    for (std::size_t j = 0; j < numerators.size(); ++j)
      gens.push_back(j == k ? d : numerators[j]);
    if (Ideal(pres.ring(), std::move(gens)).contains(numerators[k])) {
      numerators[k] = d;
      return;
    }
  }
}

ClosureResult close_domain(const Presentation& pres, const Polynomial& d,
                           const ClosureOptions& options) {
  ClosureState state = initial_state(pres, d);
  std::vector<std::vector<Polynomial>> chain{state.U.groebner_basis()};
  while (true) {
    ClosureState next = closure_step(pres, d, state);
    if (ideal_equals(next.U, state.U)) break;
    if (next.e > options.max_iterations)
      throw Error(ErrorCode::IterationLimitExceeded,
                  "chain did not stabilize within " + std::to_string(options.max_iterations) +
                      " steps");
    state = std::move(next);
    chain.push_back(state.U.groebner_basis());
  }
  std::vector<Polynomial> numerators = trim_generators(pres, state.U);
  prefer_denominator(pres, d, numerators);
  return ClosureResult{pres, d, state.U, std::move(numerators), state.e, std::move(chain), {}};
}

ClosureResult close_recursive(const Presentation& pres, std::optional<Polynomial> user_d,
                              const ClosureOptions& options, std::size_t depth,
                              std::size_t depth_cap) {
  Polynomial d = user_d ? pres.reduce(*user_d) : conductor_candidate(pres).element;
  if (d.is_zero()) throw Error(ErrorCode::ZeroConductor, "conductor element is zero in R");
  d = d.monic();
  if (is_nonzerodivisor(pres, d)) return close_domain(pres, d, options);

  if (depth >= depth_cap)
    throw Error(ErrorCode::IterationLimitExceeded, "component splitting exceeded depth cap");
  auto [first, second] = split(pres, d);
  ClosureResult out{pres, d, Ideal::unit(pres.ring()), {}, 0, {}, {}};
  // Each factor is handled afresh, with its own Jacobian conductor element.
  out.components.push_back(close_recursive(first, std::nullopt, options, depth + 1, depth_cap));
  out.components.push_back(close_recursive(second, std::nullopt, options, depth + 1, depth_cap));
  return out;
}

}  // namespace

ClosureResult integral_closure(const Presentation& pres, const ClosureOptions& options) {
  if (options.conductor) require_same_ambient(*pres.ring(), *options.conductor->ring());
  return close_recursive(pres, options.conductor, options, 0, pres.relations().size() + 8);
}

bool principal_closure_member(const Presentation& pres, const Polynomial& d, std::size_t e,
                              const Polynomial& a, const Polynomial& r) {
  Polynomial rp = pres.reduce(r);
  Polynomial ap = pres.reduce(a);
  for (std::size_t i = 0; i <= e + 1; ++i) {
    if (i > 0) {
      rp = pres.reduce(frobenius_power(rp));
      ap = pres.reduce(frobenius_power(ap));
    }
    std::vector<Polynomial> gens = pres.relations();
    gens.push_back(ap);
    if (!Ideal(pres.ring(), std::move(gens)).contains(d * rp)) return false;
  }
  return true;
}

bool VerificationReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

namespace {

void verify_leaf(const ClosureResult& res, const std::string& prefix, VerificationReport& report) {
  const Presentation& pres = res.presentation;
  const Polynomial& d = res.denominator;
  const std::uint32_t p = pres.characteristic();
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    report.checks.push_back({prefix + name, ok, detail});
  };

  // (a) one more step leaves U unchanged.
  {
    ClosureState state{res.iterations, res.closure_ideal,
                       frobenius_modulus(pres, d_power_for(pres, d), res.closure_ideal)};
    ClosureState next = closure_step(pres, d, state);
    add("fixed-point", ideal_equals(next.U, res.closure_ideal),
        "closure_step(U_final) = U_final");
  }

  // (b) n^(p^i) in (D^(p^i - 1)) + P for i <= e.
  {
    bool ok = true;
    std::string detail = "all numerators integral";
    for (const auto& n : res.numerators) {
      Polynomial np = pres.reduce(n);
      Polynomial dp = pres.ring()->one();  // D^(p^i - 1)
      Polynomial dpi = pres.reduce(d);     // D^(p^i)
      for (std::size_t i = 0; i <= res.iterations && ok; ++i) {
        if (i > 0) {
          np = pres.reduce(frobenius_power(np));
          dp = pres.reduce(dp * pres.reduce(pow(dpi, p - 1)));
          dpi = pres.reduce(frobenius_power(dpi));
        }
        std::vector<Polynomial> gens = pres.relations();
        gens.push_back(dp);
        if (!Ideal(pres.ring(), std::move(gens)).contains(np)) {
          ok = false;
          detail = "witness fails for " + to_string(n) + " at i = " + std::to_string(i);
        }
      }
    }
    add("integrality-witnesses", ok, detail);
  }

  // (c) V * V ⊆ V, i.e. n_i n_j in D U + P.
  {
    std::vector<Polynomial> gens = pres.relations();
    for (const auto& g : res.closure_ideal.generators()) gens.push_back(pres.reduce(d * g));
    Ideal scaled(pres.ring(), std::move(gens));
    bool ok = true;
    std::string detail = "products stay in the module";
    for (std::size_t i = 0; i < res.numerators.size() && ok; ++i)
      for (std::size_t j = i; j < res.numerators.size() && ok; ++j)
        if (!scaled.contains(pres.reduce(res.numerators[i] * res.numerators[j]))) {
          ok = false;
          detail = "product of " + to_string(res.numerators[i]) + " and " +
                   to_string(res.numerators[j]) + " escapes";
        }
    add("ring-closed", ok, detail);
  }

  // (d) 1 in V.
  add("unit-present", res.closure_ideal.contains(d), "D in U_final");

  // (e) numerators with P generate U.
  {
    std::vector<Polynomial> gens = pres.relations();
    gens.insert(gens.end(), res.numerators.begin(), res.numerators.end());
    add("numerators-generate", ideal_equals(Ideal(pres.ring(), std::move(gens)), res.closure_ideal),
        "(numerators) + P = U_final");
  }
}

}  // namespace

VerificationReport verify_result(const ClosureResult& result) {
  VerificationReport report;
  auto leaves = result.leaves();
  for (std::size_t k = 0; k < leaves.size(); ++k) {
    std::string prefix = leaves.size() > 1 ? "component " + std::to_string(k) + ": " : "";
    verify_leaf(*leaves[k], prefix, report);
  }
  return report;
}

}  // namespace frobnorm
