#include "frobnorm/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>

#include "detail/terms.hpp"
#include "frobnorm/error.hpp"

namespace frobnorm {

namespace {

std::atomic<std::uint64_t> g_calls{0};
std::atomic<std::size_t> g_pair_cap{0};

constexpr std::uint64_t kMaxExponent = std::numeric_limits<std::int32_t>::max();

using detail::TermList;

std::uint64_t mask_of(const Exponent* r, std::size_t n) {
  std::uint64_t m = 0;
  for (std::size_t k = 0; k < n; ++k)
    if (r[k]) m |= std::uint64_t{1} << (k & 63);
  return m;
}

std::uint64_t row_degree(const Exponent* r, std::size_t n) {
  std::uint64_t d = 0;
  for (std::size_t k = 0; k < n; ++k) d += r[k];
  return d;
}

bool row_divides(const Exponent* a, const Exponent* b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k)
    if (a[k] > b[k]) return false;
  return true;
}

/// out = c * x^shift * (terms first.. of g).
void shifted_terms(const PrimeField& field, const Polynomial& g, std::size_t first, Coeff c,
                   const Exponent* shift, TermList& out) {
  const std::size_t n = g.nvars();
  const std::size_t len = g.size() - first;
  out.coeffs.resize(len);
  out.exps.resize(len * n);
  bool overflow = false;
  for (std::size_t i = 0; i < len; ++i) {
    out.coeffs[i] = field.mul(g.coeff(first + i), c);
    const Exponent* r = g.row(first + i);
    Exponent* o = out.exps.data() + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      std::uint64_t s = std::uint64_t(r[k]) + shift[k];
      overflow |= s > kMaxExponent;
      o[k] = static_cast<Exponent>(s);
    }
  }
  if (overflow) throw Error(ErrorCode::ExponentOverflow, "exponent exceeds 2^31 - 1");
}

/// Geometric bucket accumulator for long reductions: bucket k holds at most
/// 4^(k+1) terms, so each term takes part in O(log length) merges.
class GeoBucket {
 public:
  GeoBucket(const PrimeField& field, const MonomialOrder& order, std::size_t n)
      : field_(field), order_(order), n_(n) {}

  void add(TermList&& t) {
    if (t.size() == 0) return;
    std::size_t k = level(t.size());
    while (true) {
      if (buckets_.size() <= k) buckets_.resize(k + 1);
      Bucket& b = buckets_[k];
      if (b.live() == 0) {
        b.t = std::move(t);
        b.pos = 0;
        return;
      }
      detail::merge_add(field_, order_, n_, b.t.coeffs.data() + b.pos,
                        b.t.exps.data() + b.pos * n_, b.live(), t.coeffs.data(),
                        t.exps.data(), t.size(), scratch_);
      std::swap(t, scratch_);
      b.t.clear();
      b.pos = 0;
      if (t.size() <= capacity(k)) {
        std::swap(b.t, t);
        return;
      }
      ++k;
    }
  }

  /// Removes the leading term into (c, row). False when empty.
  bool pop_lead(Coeff& c, Exponent* row) {
    while (true) {
      int best = -1;
      for (std::size_t k = 0; k < buckets_.size(); ++k) {
        const Bucket& b = buckets_[k];
        if (b.live() == 0) continue;
        if (best < 0 || order_.compare(b.lead(n_), buckets_[best].lead(n_), n_) > 0)
          best = static_cast<int>(k);
      }
      if (best < 0) return false;
      Bucket& top = buckets_[best];
      std::copy(top.lead(n_), top.lead(n_) + n_, row);
      c = top.t.coeffs[top.pos++];
      for (std::size_t k = 0; k < buckets_.size(); ++k) {
        Bucket& b = buckets_[k];
        if (static_cast<int>(k) == best || b.live() == 0) continue;
        if (order_.compare(b.lead(n_), row, n_) == 0) c = field_.add(c, b.t.coeffs[b.pos++]);
      }
      if (c != 0) return true;
    }
  }

 private:
  struct Bucket {
    TermList t;
    std::size_t pos = 0;
    std::size_t live() const { return t.size() - pos; }
    const Exponent* lead(std::size_t n) const { return t.exps.data() + pos * n; }
  };

  static std::size_t capacity(std::size_t k) { return std::size_t{4} << (2 * k); }
  static std::size_t level(std::size_t len) {
    std::size_t k = 0;
    while (capacity(k) < len) ++k;
    return k;
  }

  const PrimeField& field_;
  const MonomialOrder& order_;
  std::size_t n_;
  std::vector<Bucket> buckets_;
  TermList scratch_;
};

struct Reducer {
  Polynomial poly;  // monic, in the engine ring
  std::uint64_t mask;
  std::uint64_t sugar;
};

Reducer make_reducer(Polynomial monic_poly, std::uint64_t sugar) {
  std::uint64_t mask = mask_of(monic_poly.row(0), monic_poly.nvars());
  return Reducer{std::move(monic_poly), mask, sugar};
}

/// Reduction of a bucket against a reducer set. In top mode the loop stops
/// at the first irreducible leading term; in full mode every term is reduced.
class ReductionEngine {
 public:
  ReductionEngine(const RingPtr& ring) : ring_(ring), n_(ring->nvars()), row_(n_), shift_(n_) {}

  TermList reduce(GeoBucket& bucket, const std::vector<const Reducer*>& reducers, bool full,
                  std::uint64_t& sugar) {
    const PrimeField& field = ring_->field();
    TermList out;
    Coeff c;
    while (bucket.pop_lead(c, row_.data())) {
      const Reducer* g = find_divisor(reducers, row_.data());
      if (!g) {
        out.push(c, row_.data(), n_);
        if (!full) {
          while (bucket.pop_lead(c, row_.data())) out.push(c, row_.data(), n_);
          return out;
        }
        continue;
      }
      const Exponent* lead = g->poly.row(0);
      for (std::size_t k = 0; k < n_; ++k) shift_[k] = row_[k] - lead[k];
      sugar = std::max(sugar, g->sugar + row_degree(shift_.data(), n_));
      if (g->poly.size() > 1) {
        TermList t;
        shifted_terms(field, g->poly, 1, field.neg(c), shift_.data(), t);
        bucket.add(std::move(t));
      }
    }
    return out;
  }

 private:
  const Reducer* find_divisor(const std::vector<const Reducer*>& reducers, const Exponent* m) const {
    const std::uint64_t mask = mask_of(m, n_);
    const Reducer* best = nullptr;
    for (const Reducer* r : reducers) {
      if (r->mask & ~mask) continue;
      if (!row_divides(r->poly.row(0), m, n_)) continue;
      if (!best || r->poly.size() < best->poly.size()) best = r;
    }
    return best;
  }

  RingPtr ring_;
  std::size_t n_;
  std::vector<Exponent> row_;
  std::vector<Exponent> shift_;
};

struct CriticalPair {
  std::uint32_t i, j;
  std::vector<Exponent> lcm;
  std::uint64_t lcm_mask;
  std::uint64_t lcm_degree;
  std::uint64_t sugar;
};

class Buchberger {
 public:
  explicit Buchberger(RingPtr ring)
      : ring_(std::move(ring)),
        field_(ring_->field()),
        order_(ring_->order()),
        n_(ring_->nvars()),
        reducer_(ring_) {}

  std::vector<Polynomial> run(std::vector<Polynomial> inputs) {
    for (auto& f : inputs) {
      if (f.is_zero()) continue;
      auto d = static_cast<std::uint64_t>(f.degree());
      pending_.push_back({f.monic(), d});
    }
    // Process inputs in order of increasing degree (stable for determinism).
    std::stable_sort(pending_.begin(), pending_.end(),
                     [](const auto& a, const auto& b) { return a.second < b.second; });
    std::size_t next_input = 0;

    while (next_input < pending_.size() || !pairs_.empty()) {
      const std::size_t cap = g_pair_cap.load(std::memory_order_relaxed);
      if (cap && pairs_.size() > cap)
        throw Error(ErrorCode::ResourceLimit,
                    "critical pair queue exceeded cap of " + std::to_string(cap));

      GeoBucket bucket(field_, order_, n_);
      std::uint64_t sugar;
      std::size_t best = select_pair();
      bool take_input = next_input < pending_.size() &&
                        (best == npos || pending_[next_input].second <= pairs_[best].sugar);
      if (take_input) {
        const Polynomial& f = pending_[next_input].first;
        sugar = pending_[next_input].second;
        bucket.add(TermList{std::vector<Coeff>(f.coeffs().begin(), f.coeffs().end()),
                            std::vector<Exponent>(f.flat_exponents().begin(),
                                                  f.flat_exponents().end())});
        ++next_input;
      } else {
        CriticalPair pair = std::move(pairs_[best]);
        pairs_[best] = std::move(pairs_.back());
        pairs_.pop_back();
        sugar = pair.sugar;
        load_s_polynomial(pair, bucket);
      }

      TermList r = reducer_.reduce(bucket, active_reducers(), true, sugar);
      if (r.size() == 0) continue;
      Polynomial h = Polynomial::from_sorted(ring_, std::move(r.coeffs), std::move(r.exps)).monic();
      if (h.is_constant()) return {ring_->one()};
      insert(std::move(h), sugar);
    }
    return finish();
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  const std::vector<const Reducer*>& active_reducers() {
    if (active_dirty_) {
      active_ptrs_.clear();
      for (std::size_t i = 0; i < basis_.size(); ++i)
        if (!redundant_[i]) active_ptrs_.push_back(&basis_[i]);
      active_dirty_ = false;
    }
    return active_ptrs_;
  }

  // Pairs are taken by smallest sugar, then smallest lcm.
  std::size_t select_pair() const {
    std::size_t best = npos;
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      if (best == npos || less(pairs_[k], pairs_[best])) best = k;
    }
    return best;
  }

  bool less(const CriticalPair& a, const CriticalPair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
    int c = order_.compare(a.lcm.data(), b.lcm.data(), n_);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  void load_s_polynomial(const CriticalPair& pair, GeoBucket& bucket) {
    std::vector<Exponent> shift(n_);
    for (std::uint32_t idx : {pair.i, pair.j}) {
      const Polynomial& g = basis_[idx].poly;
      if (g.size() < 2) continue;
      for (std::size_t k = 0; k < n_; ++k) shift[k] = pair.lcm[k] - g.row(0)[k];
      TermList t;
      shifted_terms(field_, g, 1, idx == pair.i ? 1 : field_.neg(1), shift.data(), t);
      bucket.add(std::move(t));
    }
  }

  CriticalPair make_pair(std::uint32_t i, std::uint32_t j) const {
    const Exponent* a = basis_[i].poly.row(0);
    const Exponent* b = basis_[j].poly.row(0);
    CriticalPair pr{i, j, std::vector<Exponent>(n_), 0, 0, 0};
    for (std::size_t k = 0; k < n_; ++k) pr.lcm[k] = std::max(a[k], b[k]);
    pr.lcm_mask = mask_of(pr.lcm.data(), n_);
    pr.lcm_degree = row_degree(pr.lcm.data(), n_);
    pr.sugar = std::max(basis_[i].sugar + pr.lcm_degree - row_degree(a, n_),
                        basis_[j].sugar + pr.lcm_degree - row_degree(b, n_));
    return pr;
  }

  bool rows_equal(const Exponent* a, const Exponent* b) const {
    return std::equal(a, a + n_, b);
  }

  // Gebauer-Moeller update for a new basis element.
  void insert(Polynomial h, std::uint64_t sugar) {
    const auto k = static_cast<std::uint32_t>(basis_.size());
    basis_.push_back(make_reducer(std::move(h), sugar));
    redundant_.push_back(false);
    active_dirty_ = true;
    const Exponent* lead_h = basis_[k].poly.row(0);

    // Chain criterion on the new pairs: (i, k) survives only if no other
    // new pair has an lcm dividing lcm(i, k); one pair per lcm class is kept,
    // and a class containing a coprime pair is dropped whole.
    struct Candidate {
      std::uint32_t i;
      std::uint64_t degree;
      std::uint64_t mask;
      bool coprime;
    };
    std::vector<Candidate> candidates;
    std::vector<Exponent> lcms;
    for (std::uint32_t i = 0; i < k; ++i) {
      if (redundant_[i]) continue;
      const Exponent* a = basis_[i].poly.row(0);
      std::size_t off = lcms.size();
      lcms.resize(off + n_);
      bool cop = true;
      for (std::size_t t = 0; t < n_; ++t) {
        lcms[off + t] = std::max(a[t], lead_h[t]);
        cop = cop && !(a[t] && lead_h[t]);
      }
      candidates.push_back({i, row_degree(lcms.data() + off, n_), mask_of(lcms.data() + off, n_), cop});
    }
    std::vector<std::size_t> order(candidates.size());
    for (std::size_t c = 0; c < order.size(); ++c) order[c] = c;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return candidates[a].degree < candidates[b].degree;
    });
    std::vector<std::size_t> kept;       // candidate indices
    std::vector<bool> class_coprime;     // parallel to kept
    for (std::size_t c : order) {
      const Candidate& cand = candidates[c];
      const Exponent* lc = lcms.data() + c * n_;
      bool drop = false;
      for (std::size_t q = 0; q < kept.size() && !drop; ++q) {
        const Candidate& other = candidates[kept[q]];
        if ((other.mask & ~cand.mask) != 0 || other.degree > cand.degree) continue;
        if (!row_divides(lcms.data() + kept[q] * n_, lc, n_)) continue;
        drop = true;
        if (other.degree == cand.degree && cand.coprime) class_coprime[q] = true;
      }
      if (!drop) {
        kept.push_back(c);
        class_coprime.push_back(cand.coprime);
      }
    }

    // Criterion B on the old pairs.
    std::vector<Exponent> l1(n_), l2(n_);
    const std::uint64_t lead_mask = basis_[k].mask;
    for (std::size_t q = 0; q < pairs_.size();) {
      const CriticalPair& pr = pairs_[q];
      bool drop = false;
      if ((lead_mask & ~pr.lcm_mask) == 0 && row_divides(lead_h, pr.lcm.data(), n_)) {
        const Exponent* a = basis_[pr.i].poly.row(0);
        const Exponent* b = basis_[pr.j].poly.row(0);
        for (std::size_t t = 0; t < n_; ++t) {
          l1[t] = std::max(a[t], lead_h[t]);
          l2[t] = std::max(b[t], lead_h[t]);
        }
        drop = !rows_equal(l1.data(), pr.lcm.data()) && !rows_equal(l2.data(), pr.lcm.data());
      }
      if (drop) {
        pairs_[q] = std::move(pairs_.back());
        pairs_.pop_back();
      } else {
        ++q;
      }
    }

    for (std::size_t q = 0; q < kept.size(); ++q)
      if (!class_coprime[q]) pairs_.push_back(make_pair(candidates[kept[q]].i, k));

    for (std::uint32_t i = 0; i < k; ++i)
      if (!redundant_[i] && row_divides(lead_h, basis_[i].poly.row(0), n_)) redundant_[i] = true;
  }

  std::vector<Polynomial> finish() {
    const auto& reducers = active_reducers();
    std::vector<Polynomial> out;
    out.reserve(reducers.size());
    for (const Reducer* r : reducers) {
      const Polynomial& g = r->poly;
      TermList head{{g.coeff(0)}, std::vector<Exponent>(g.row(0), g.row(0) + n_)};
      if (g.size() > 1) {
        GeoBucket bucket(field_, order_, n_);
        TermList tail;
        std::vector<Exponent> zero(n_, 0);
        shifted_terms(field_, g, 1, 1, zero.data(), tail);
        bucket.add(std::move(tail));
        std::uint64_t sugar = 0;
        TermList reduced = reducer_.reduce(bucket, reducers, true, sugar);
        head.coeffs.insert(head.coeffs.end(), reduced.coeffs.begin(), reduced.coeffs.end());
        head.exps.insert(head.exps.end(), reduced.exps.begin(), reduced.exps.end());
      }
      out.push_back(Polynomial::from_sorted(ring_, std::move(head.coeffs), std::move(head.exps)));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order_.compare(a.row(0), b.row(0), n_) < 0;
    });
    return out;
  }

  RingPtr ring_;
  const PrimeField& field_;
  const MonomialOrder& order_;
  std::size_t n_;
  ReductionEngine reducer_;
  std::vector<std::pair<Polynomial, std::uint64_t>> pending_;
  std::vector<Reducer> basis_;
  std::vector<bool> redundant_;
  std::vector<CriticalPair> pairs_;
  std::vector<const Reducer*> active_ptrs_;
  bool active_dirty_ = true;
};

RingPtr common_ring(std::span<const Polynomial> polys, const MonomialOrder& order) {
  if (polys.empty()) return nullptr;
  const RingPtr& first = polys.front().ring();
  for (const auto& f : polys) require_same_ambient(*first, *f.ring());
  return first->with_order(order);
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const MonomialOrder& order) {
  for (const auto& g : divisors) require_same_ambient(*f.ring(), *g.ring());
  if (f.is_zero() || divisors.empty()) return f;
  RingPtr ring = f.ring()->with_order(order);
  std::vector<Reducer> store;
  store.reserve(divisors.size());
  for (const auto& g : divisors)
    if (!g.is_zero()) store.push_back(make_reducer(g.in_ring(ring).monic(), 0));
  std::vector<const Reducer*> reducers;
  for (const auto& r : store) reducers.push_back(&r);

  Polynomial fr = f.in_ring(ring);
  GeoBucket bucket(ring->field(), ring->order(), ring->nvars());
  bucket.add(TermList{std::vector<Coeff>(fr.coeffs().begin(), fr.coeffs().end()),
                      std::vector<Exponent>(fr.flat_exponents().begin(),
                                            fr.flat_exponents().end())});
  ReductionEngine engine(ring);
  std::uint64_t sugar = 0;
  TermList r = engine.reduce(bucket, reducers, true, sugar);
  return Polynomial::from_sorted(ring, std::move(r.coeffs), std::move(r.exps)).in_ring(f.ring());
}

std::vector<Polynomial> groebner_basis(std::span<const Polynomial> gens,
                                       const MonomialOrder& order) {
  g_calls.fetch_add(1, std::memory_order_relaxed);
  RingPtr ring = common_ring(gens, order);
  if (!ring) return {};
  std::vector<Polynomial> inputs;
  inputs.reserve(gens.size());
  for (const auto& g : gens) inputs.push_back(g.in_ring(ring));
  return Buchberger(ring).run(std::move(inputs));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  require_same_ambient(*f.ring(), *g.ring());
  if (f.is_zero() || g.is_zero()) return f.ring()->zero();
  RingPtr ring = f.ring()->with_order(order);
  Polynomial a = f.in_ring(ring).monic(), b = g.in_ring(ring).monic();
  Monomial l = lcm(a.leading_monomial(), b.leading_monomial());
  Monomial sa = l / a.leading_monomial(), sb = l / b.leading_monomial();
  return (a.mul_term(1, sa) - b.mul_term(1, sb)).in_ring(f.ring());
}

bool is_groebner_basis(std::span<const Polynomial> gens, const MonomialOrder& order) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!normal_form(s_polynomial(gens[i], gens[j], order), gens, order).is_zero())
        return false;
  return true;
}

std::uint64_t groebner_calls() noexcept { return g_calls.load(std::memory_order_relaxed); }

void set_pair_queue_cap(std::size_t cap) noexcept { g_pair_cap.store(cap); }

std::size_t pair_queue_cap() noexcept { return g_pair_cap.load(); }

}  // namespace frobnorm
