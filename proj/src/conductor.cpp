#include "frobnorm/conductor.hpp"

#include "frobnorm/error.hpp"

namespace frobnorm {

Presentation::Presentation(RingPtr ring, std::vector<Polynomial> relations)
    : ring_(std::move(ring)), relations_(std::move(relations)), ideal_(ring_, relations_) {
  for (auto& f : relations_) f = f.in_ring(ring_);
  if (ideal_.is_unit())
    throw Error(ErrorCode::InvalidArgument, "relations generate the unit ideal");
}

PolyMatrix jacobian(const Presentation& pres) {
  const auto& rels = pres.relations();
  PolyMatrix j(rels.size(), pres.nvars(), pres.ring()->zero());
  for (std::size_t i = 0; i < rels.size(); ++i)
    for (std::size_t v = 0; v < pres.nvars(); ++v) j(i, v) = derivative(rels[i], v);
  return j;
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() == 0) throw Error(ErrorCode::InvalidArgument, "determinant of an empty matrix");
  const RingPtr& ring = m(0, 0).ring();
  if (m.rows() <= 4) return determinant_expansion(m, ring->zero(), ring->one());
  return determinant_bareiss(
      m, ring->zero(), ring->one(), [](const Polynomial& f) { return f.is_zero(); },
      [](const Polynomial& a, const Polynomial& b) { return exact_divide(a, b); });
}

namespace {

/// Advance idx to the next k-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

}  // namespace

ConductorData conductor_candidate(const Presentation& pres) {
  ConductorData out{codim(pres.ideal()), jacobian(pres), pres.ring()->zero(), ConductorData::Source::User, {}, {}};
  const std::size_t h = out.height;
  const std::size_t m = out.jacobian.rows(), n = out.jacobian.cols();
  if (h == 0) {
    // P = 0: the polynomial ring itself is normal.
    out.element = pres.ring()->one();
    out.source = ConductorData::Source::UnitMinor;
    return out;
  }
  if (h > m || h > n)
    throw Error(ErrorCode::ConductorNotFound, "Jacobian has no minors of size codim(P)");

  bool found = false;
  auto rows = first_combination(h);
  do {
    auto cols = first_combination(h);
    do {
      Polynomial d = pres.reduce(determinant(out.jacobian.submatrix(rows, cols)));
      if (d.is_zero()) continue;
      if (d.is_constant()) {
        out.element = pres.ring()->one();
        out.source = ConductorData::Source::UnitMinor;
        out.rows = rows;
        out.cols = cols;
        return out;
      }
      if (!found) {
        found = true;
        out.element = d;
        out.source = ConductorData::Source::JacobianMinor;
        out.rows = rows;
        out.cols = cols;
      }
    } while (next_combination(cols, n));
  } while (next_combination(rows, m));

  if (!found)
    throw Error(ErrorCode::ConductorNotFound,
                "every " + std::to_string(h) + "x" + std::to_string(h) +
                    " Jacobian minor vanishes modulo P; supply a conductor element");
  return out;
}

bool is_nonzerodivisor(const Presentation& pres, const Polynomial& d) {
  if (pres.is_zero(d)) throw Error(ErrorCode::ZeroConductor, "element is zero in R");
  if (d.is_constant()) return true;
  return ideal_equals(quotient(pres.ideal(), d), pres.ideal());
}

std::pair<Presentation, Presentation> split(const Presentation& pres, const Polynomial& d) {
  if (pres.is_zero(d)) throw Error(ErrorCode::ZeroConductor, "element is zero in R");
  Ideal first = quotient(pres.ideal(), d);
  if (ideal_equals(first, pres.ideal()))
    throw Error(ErrorCode::NothingToSplit, "element is a nonzerodivisor; nothing to split");
  Ideal second = quotient(pres.ideal(), first);
  return {Presentation(pres.ring(), first.groebner_basis()),
          Presentation(pres.ring(), second.groebner_basis())};
}

}  // namespace frobnorm
