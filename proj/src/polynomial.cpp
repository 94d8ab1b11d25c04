#include "frobnorm/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "detail/terms.hpp"
#include "frobnorm/error.hpp"

namespace frobnorm {

namespace {

constexpr std::uint64_t kMaxExponent = std::numeric_limits<std::int32_t>::max();

[[noreturn]] void exponent_overflow() {
  throw Error(ErrorCode::ExponentOverflow, "exponent exceeds 2^31 - 1");
}

}  // namespace

namespace detail {

void merge_add(const PrimeField& field, const MonomialOrder& order, std::size_t n,
               const Coeff* ac, const Exponent* ae, std::size_t alen,
               const Coeff* bc, const Exponent* be, std::size_t blen, TermList& out) {
  out.clear();
  out.coeffs.reserve(alen + blen);
  out.exps.reserve((alen + blen) * n);
  std::size_t i = 0, j = 0;
  while (i < alen && j < blen) {
    const Exponent* ra = ae + i * n;
    const Exponent* rb = be + j * n;
    int c = order.compare(ra, rb, n);
    if (c > 0) {
      out.push(ac[i++], ra, n);
    } else if (c < 0) {
      out.push(bc[j++], rb, n);
    } else {
      Coeff s = field.add(ac[i++], bc[j++]);
      if (s != 0) out.push(s, ra, n);
    }
  }
  if (i < alen) {
    out.coeffs.insert(out.coeffs.end(), ac + i, ac + alen);
    out.exps.insert(out.exps.end(), ae + i * n, ae + alen * n);
  }
  if (j < blen) {
    out.coeffs.insert(out.coeffs.end(), bc + j, bc + blen);
    out.exps.insert(out.exps.end(), be + j * n, be + blen * n);
  }
}

void canonicalize(const PrimeField& field, const MonomialOrder& order, std::size_t n,
                  TermList& terms) {
  const std::size_t len = terms.size();
  std::vector<std::size_t> idx(len);
  std::iota(idx.begin(), idx.end(), 0);
  const Exponent* e = terms.exps.data();
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return order.compare(e + a * n, e + b * n, n) > 0;
  });
  TermList out;
  out.coeffs.reserve(len);
  out.exps.reserve(len * n);
  for (std::size_t k = 0; k < len;) {
    std::size_t first = idx[k];
    Coeff c = terms.coeffs[first];
    std::size_t m = k + 1;
    while (m < len && order.compare(e + idx[m] * n, e + first * n, n) == 0)
      c = field.add(c, terms.coeffs[idx[m++]]);
    if (c != 0) out.push(c, e + first * n, n);
    k = m;
  }
  terms = std::move(out);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// PolyRing

PolyRing::PolyRing(Token, std::uint32_t p, std::vector<std::string> names, MonomialOrder order)
    : field_(p), names_(std::move(names)), order_(order) {}

RingPtr PolyRing::make(std::uint32_t p, std::vector<std::string> names, MonomialOrder order) {
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw Error(ErrorCode::InvalidArgument, "duplicate variable name '" + names[i] + "'");
  return std::make_shared<const PolyRing>(Token{}, p, std::move(names), order);
}

RingPtr PolyRing::with_order(const MonomialOrder& order) const {
  if (order == order_) return shared_from_this();
  return std::make_shared<const PolyRing>(Token{}, characteristic(), names_, order);
}

bool PolyRing::same_ambient(const PolyRing& other) const noexcept {
  return this == &other || (field_ == other.field_ && names_ == other.names_);
}

void require_same_ambient(const PolyRing& a, const PolyRing& b) {
  if (!a.same_ambient(b))
    throw Error(ErrorCode::RingMismatch, "operands live in different polynomial rings");
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Polynomial PolyRing::zero() const { return Polynomial(shared_from_this()); }

Polynomial PolyRing::one() const { return constant(1); }

Polynomial PolyRing::constant(std::int64_t c) const {
  return monomial(Monomial(nvars()), field_.reduce(c));
}

Polynomial PolyRing::variable(std::size_t i) const {
  if (i >= nvars()) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  Monomial m(nvars());
  m[i] = 1;
  return monomial(m);
}

Polynomial PolyRing::variable(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw Error(ErrorCode::InvalidArgument, "unknown variable '" + std::string(name) + "'");
  return variable(*i);
}

Polynomial PolyRing::monomial(const Monomial& m, Coeff c) const {
  if (m.size() != nvars()) throw Error(ErrorCode::InvalidArgument, "monomial length mismatch");
  c %= characteristic();
  if (c == 0) return zero();
  std::vector<Exponent> e(m.exponents().begin(), m.exponents().end());
  return Polynomial::from_sorted(shared_from_this(), {c}, std::move(e));
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)), nvars_(ring_->nvars()) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Coeff> coeffs, std::vector<Exponent> exps)
    : ring_(std::move(ring)),
      nvars_(ring_->nvars()),
      coeffs_(std::move(coeffs)),
      exps_(std::move(exps)) {}

Polynomial Polynomial::from_sorted(RingPtr ring, std::vector<Coeff> coeffs,
                                   std::vector<Exponent> exps) {
  return Polynomial(std::move(ring), std::move(coeffs), std::move(exps));
}

Polynomial Polynomial::from_terms(RingPtr ring,
                                  const std::vector<std::pair<Monomial, std::int64_t>>& terms) {
  const std::size_t n = ring->nvars();
  detail::TermList t;
  for (const auto& [m, c] : terms) {
    if (m.size() != n) throw Error(ErrorCode::InvalidArgument, "monomial length mismatch");
    for (auto e : m.exponents())
      if (e > kMaxExponent) exponent_overflow();
    Coeff r = ring->field().reduce(c);
    if (r != 0) t.push(r, m.exponents().data(), n);
  }
  detail::canonicalize(ring->field(), ring->order(), n, t);
  return Polynomial(std::move(ring), std::move(t.coeffs), std::move(t.exps));
}

bool Polynomial::is_constant() const noexcept {
  if (coeffs_.empty()) return true;
  if (coeffs_.size() != 1) return false;
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

Monomial Polynomial::leading_monomial(const MonomialOrder& order) const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < size(); ++i)
    if (order.compare(row(i), row(best), nvars_) > 0) best = i;
  return monomial(best);
}

std::int64_t Polynomial::degree() const noexcept {
  std::int64_t best = -1;
  for (std::size_t i = 0; i < size(); ++i) {
    std::int64_t d = 0;
    for (std::size_t k = 0; k < nvars_; ++k) d += row(i)[k];
    best = std::max(best, d);
  }
  return best;
}

bool Polynomial::involves(std::size_t v) const noexcept {
  for (std::size_t i = 0; i < size(); ++i)
    if (row(i)[v] != 0) return true;
  return false;
}

Coeff Polynomial::coefficient_of(const Monomial& m) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (std::equal(m.exponents().begin(), m.exponents().end(), row(i))) return coeffs_[i];
  return 0;
}

Polynomial Polynomial::in_ring(const RingPtr& ring) const {
  require_same_ambient(*ring_, *ring);
  if (ring->order() == ring_->order()) return Polynomial(ring, coeffs_, exps_);
  detail::TermList t{coeffs_, exps_};
  detail::canonicalize(ring->field(), ring->order(), nvars_, t);
  return Polynomial(ring, std::move(t.coeffs), std::move(t.exps));
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::scaled(Coeff c) const {
  const auto& f = ring_->field();
  c %= f.characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Coeff> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.mul(coeffs_[i], c);
  return Polynomial(ring_, std::move(out), exps_);
}

Polynomial Polynomial::mul_term(Coeff c, const Exponent* m) const {
  const auto& f = ring_->field();
  if (c == 0 || is_zero()) return Polynomial(ring_);
  std::vector<Coeff> oc(coeffs_.size());
  std::vector<Exponent> oe(exps_.size());
  bool overflow = false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    oc[i] = c == 1 ? coeffs_[i] : f.mul(coeffs_[i], c);
    const Exponent* r = row(i);
    Exponent* o = oe.data() + i * nvars_;
    for (std::size_t k = 0; k < nvars_; ++k) {
      std::uint64_t s = std::uint64_t(r[k]) + m[k];
      overflow |= s > kMaxExponent;
      o[k] = static_cast<Exponent>(s);
    }
  }
  if (overflow) exponent_overflow();
  return Polynomial(ring_, std::move(oc), std::move(oe));
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().neg(1)); }

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  require_same_ambient(*f.ring_, *g.ring_);
  if (g.ring_->order() != f.ring_->order()) return f + g.in_ring(f.ring_);
  detail::TermList out;
  detail::merge_add(f.ring_->field(), f.ring_->order(), f.nvars_, f.coeffs_.data(),
                    f.exps_.data(), f.size(), g.coeffs_.data(), g.exps_.data(), g.size(), out);
  return Polynomial(f.ring_, std::move(out.coeffs), std::move(out.exps));
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_ambient(*f.ring_, *g.ring_);
  if (g.ring_->order() != f.ring_->order()) return f * g.in_ring(f.ring_);
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring_);
  const Polynomial& big = f.size() >= g.size() ? f : g;
  const Polynomial& small = f.size() >= g.size() ? g : f;
  // Each big * term is sorted; merge the partial products pairwise.
  std::vector<Polynomial> parts;
  parts.reserve(small.size());
  for (std::size_t i = 0; i < small.size(); ++i)
    parts.push_back(big.mul_term(small.coeff(i), small.row(i)).in_ring(f.ring_));
  while (parts.size() > 1) {
    std::vector<Polynomial> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
    if (parts.size() % 2) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return std::move(parts.front());
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (!f.ring_->same_ambient(*g.ring_)) return false;
  if (f.ring_->order() != g.ring_->order()) return f == g.in_ring(f.ring_);
  return f.coeffs_ == g.coeffs_ && f.exps_ == g.exps_;
}

Polynomial operator*(const Polynomial& f, std::int64_t c) {
  return f.scaled(f.ring()->field().reduce(c));
}

Polynomial frobenius_power(const Polynomial& f) {
  const std::uint64_t p = f.ring()->characteristic();
  std::vector<Coeff> c(f.coeffs().begin(), f.coeffs().end());
  std::vector<Exponent> e(f.flat_exponents().begin(), f.flat_exponents().end());
  for (auto& x : e) {
    std::uint64_t s = std::uint64_t(x) * p;
    if (s > kMaxExponent) exponent_overflow();
    x = static_cast<Exponent>(s);
  }
  // Scaling every exponent by p preserves lex, grevlex and block orders.
  return Polynomial::from_sorted(f.ring(), std::move(c), std::move(e));
}

Polynomial pow(const Polynomial& f, std::uint64_t e) {
  const std::uint64_t p = f.ring()->characteristic();
  unsigned frob = 0;
  while (e > 0 && e % p == 0) {
    e /= p;
    ++frob;
  }
  Polynomial acc = f.ring()->one();
  Polynomial base = f;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  for (unsigned i = 0; i < frob; ++i) acc = frobenius_power(acc);
  return acc;
}

Polynomial derivative(const Polynomial& f, std::size_t var) {
  if (var >= f.nvars()) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  const auto& field = f.ring()->field();
  const std::size_t n = f.nvars();
  detail::TermList t;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Exponent e = f.row(i)[var];
    Coeff c = field.mul(f.coeff(i), field.reduce(e));
    if (c == 0) continue;
    t.push(c, f.row(i), n);
    t.exps[t.exps.size() - n + var] = e - 1;
  }
  // Dividing every surviving term by x_var keeps them sorted.
  return Polynomial::from_sorted(f.ring(), std::move(t.coeffs), std::move(t.exps));
}

Polynomial remap_variables(const Polynomial& f, const RingPtr& target,
                           std::span<const std::optional<std::size_t>> var_map) {
  if (var_map.size() != f.nvars())
    throw Error(ErrorCode::InvalidArgument, "variable map has wrong length");
  if (target->characteristic() != f.ring()->characteristic())
    throw Error(ErrorCode::RingMismatch, "variable map between different characteristics");
  const std::size_t n = f.nvars(), m = target->nvars();
  detail::TermList t;
  std::vector<Exponent> row(m);
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::fill(row.begin(), row.end(), 0);
    for (std::size_t k = 0; k < n; ++k) {
      Exponent e = f.row(i)[k];
      if (e == 0) continue;
      if (!var_map[k])
        throw Error(ErrorCode::InvalidArgument,
                    "variable '" + f.ring()->names()[k] + "' has no image");
      std::uint64_t s = std::uint64_t(row[*var_map[k]]) + e;
      if (s > kMaxExponent) exponent_overflow();
      row[*var_map[k]] = static_cast<Exponent>(s);
    }
    t.push(f.coeff(i), row.data(), m);
  }
  detail::canonicalize(target->field(), target->order(), m, t);
  return Polynomial::from_sorted(target, std::move(t.coeffs), std::move(t.exps));
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  if (images.size() != f.nvars())
    throw Error(ErrorCode::InvalidArgument, "substitution needs one image per variable");
  if (images.empty()) return f;
  const RingPtr& target = images.front().ring();
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t v, Exponent e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(target->one());
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  Polynomial acc = target->zero();
  for (std::size_t i = 0; i < f.size(); ++i) {
    Polynomial term = target->constant(f.coeff(i));
    for (std::size_t k = 0; k < f.nvars(); ++k)
      if (f.row(i)[k]) term = term * power(k, f.row(i)[k]);
    acc = acc + term;
  }
  return acc;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  require_same_ambient(*f.ring(), *g.ring());
  if (g.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  const Polynomial gg = g.in_ring(f.ring());
  const auto& field = f.ring()->field();
  const std::size_t n = f.nvars();
  const Coeff inv = field.inv(gg.leading_coeff());
  Polynomial rem = f;
  detail::TermList q;
  std::vector<Exponent> shift(n);
  while (!rem.is_zero()) {
    for (std::size_t k = 0; k < n; ++k) {
      if (rem.row(0)[k] < gg.row(0)[k])
        throw Error(ErrorCode::InvalidArgument, "exact division failed: remainder is nonzero");
      shift[k] = rem.row(0)[k] - gg.row(0)[k];
    }
    Coeff c = field.mul(rem.leading_coeff(), inv);
    q.push(c, shift.data(), n);
    rem = rem - gg.mul_term(c, shift.data());
  }
  // Quotient terms are produced in descending order.
  return Polynomial::from_sorted(f.ring(), std::move(q.coeffs), std::move(q.exps));
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const std::uint32_t p = f.ring()->characteristic();
  const auto& names = f.ring()->names();
  std::ostringstream out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Coeff c = f.coeff(i);
    bool negative = p > 2 && c > p / 2;
    Coeff mag = negative ? p - c : c;
    if (i == 0)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    bool first = true;
    if (mag != 1) {
      out << mag;
      first = false;
    }
    for (std::size_t k = 0; k < f.nvars(); ++k) {
      Exponent e = f.row(i)[k];
      if (e == 0) continue;
      if (!first) out << '*';
      out << names[k];
      if (e > 1) out << '^' << e;
      first = false;
    }
    if (first) out << mag;
  }
  return out.str();
}

}  // namespace frobnorm
