#include "frobnorm/ideal.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "frobnorm/error.hpp"

namespace frobnorm {

struct Ideal::Cache {
  struct Entry {
    std::once_flag once;
    std::vector<Polynomial> basis;
  };
  std::mutex mutex;
  std::map<MonomialOrder, std::shared_ptr<Entry>> entries;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  gens_.reserve(generators.size());
  for (auto& g : generators) {
    require_same_ambient(*ring_, *g.ring());
    if (!g.is_zero()) gens_.push_back(g.in_ring(ring_));
  }
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& order) const {
  std::shared_ptr<Cache::Entry> entry;
  {
    std::lock_guard lock(cache_->mutex);
    auto& slot = cache_->entries[order];
    if (!slot) slot = std::make_shared<Cache::Entry>();
    entry = slot;
  }
  std::call_once(entry->once, [&] { entry->basis = frobnorm::groebner_basis(gens_, order); });
  return entry->basis;
}

Polynomial Ideal::reduce(const Polynomial& f) const {
  require_same_ambient(*ring_, *f.ring());
  return normal_form(f, groebner_basis(), MonomialOrder::grevlex());
}

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  require_same_ambient(*a.ring(), *b.ring());
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal operator*(const Ideal& a, const Ideal& b) {
  require_same_ambient(*a.ring(), *b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal operator*(const Polynomial& f, const Ideal& a) {
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

bool ideal_equals(const Ideal& a, const Ideal& b) {
  require_same_ambient(*a.ring(), *b.ring());
  const auto& ga = a.groebner_basis();
  const auto& gb = b.groebner_basis();
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (!(ga[i] == gb[i])) return false;
  return true;
}

Ideal eliminate(const Ideal& ideal, std::size_t k) {
  const std::size_t n = ideal.ring()->nvars();
  if (k > n) throw Error(ErrorCode::InvalidArgument, "cannot eliminate more variables than exist");
  if (k == 0) return ideal;
  std::vector<Polynomial> kept;
  for (const auto& g : ideal.groebner_basis(MonomialOrder::block(k))) {
    bool free = true;
    for (std::size_t v = 0; v < k && free; ++v) free = g.row(0)[v] == 0;
    if (free) kept.push_back(g);
  }
  return Ideal(ideal.ring(), std::move(kept));
}

namespace {

std::string fresh_name(const std::vector<std::string>& names, const std::string& stem) {
  for (int i = 0;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (std::find(names.begin(), names.end(), candidate) == names.end()) return candidate;
  }
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ambient(*a.ring(), *b.ring());
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  if (a.is_unit()) return Ideal(a.ring(), b.generators());
  if (b.is_unit()) return a;

  const RingPtr& base = a.ring();
  const std::size_t n = base->nvars();
  std::vector<std::string> names{fresh_name(base->names(), "_t")};
  names.insert(names.end(), base->names().begin(), base->names().end());
  RingPtr tagged = PolyRing::make(base->characteristic(), names, MonomialOrder::block(1));

  std::vector<std::optional<std::size_t>> up(n), down(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    up[i] = i + 1;
    down[i + 1] = i;
  }
  Polynomial t = tagged->variable(0);
  Polynomial one_minus_t = tagged->one() - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(t * remap_variables(g, tagged, up));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * remap_variables(g, tagged, up));

  Ideal big(tagged, std::move(gens));
  std::vector<Polynomial> out;
  Ideal eliminated = eliminate(big, 1);
  for (const auto& g : eliminated.generators())
    out.push_back(remap_variables(g, base, down));
  return Ideal(base, std::move(out));
}

Ideal quotient(const Ideal& ideal, const Polynomial& g) {
  require_same_ambient(*ideal.ring(), *g.ring());
  if (g.is_zero()) throw Error(ErrorCode::InvalidArgument, "quotient by the zero ideal");
  if (g.is_constant()) return ideal;
  Ideal meet = intersect(ideal, Ideal(ideal.ring(), {g}));
  std::vector<Polynomial> out;
  for (const auto& h : meet.generators()) out.push_back(exact_divide(h, g));
  return Ideal(ideal.ring(), std::move(out));
}

Ideal quotient(const Ideal& ideal, const Ideal& divisor) {
  require_same_ambient(*ideal.ring(), *divisor.ring());
  if (divisor.is_zero()) throw Error(ErrorCode::InvalidArgument, "quotient by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& g : divisor.generators()) {
    Ideal q = quotient(ideal, g);
    acc = acc ? intersect(*acc, q) : q;
  }
  return *acc;
}

std::size_t codim(const Ideal& ideal) {
  if (ideal.is_unit()) throw Error(ErrorCode::InvalidArgument, "codim of the unit ideal");
  const std::size_t n = ideal.ring()->nvars();
  std::vector<std::vector<bool>> supports;
  for (const auto& g : ideal.groebner_basis()) {
    std::vector<bool> s(n);
    for (std::size_t v = 0; v < n; ++v) s[v] = g.row(0)[v] != 0;
    supports.push_back(std::move(s));
  }
  // A variable set is independent when it contains the support of no
  // leading monomial. Search for the largest one.
  std::vector<bool> chosen(n, false);
  std::size_t best = 0;
  auto independent = [&] {
    for (const auto& s : supports) {
      bool inside = true;
      for (std::size_t v = 0; v < n && inside; ++v)
        if (s[v] && !chosen[v]) inside = false;
      if (inside) return false;
    }
    return true;
  };
  std::function<void(std::size_t, std::size_t)> search = [&](std::size_t v, std::size_t size) {
    if (size + (n - v) <= best) return;
    if (v == n) {
      best = size;
      return;
    }
    chosen[v] = true;
    if (independent()) search(v + 1, size + 1);
    chosen[v] = false;
    search(v + 1, size);
  };
  search(0, 0);
  return n - best;
}

std::string to_string(const Ideal& ideal) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < ideal.generators().size(); ++i)
    out << (i ? ", " : "") << to_string(ideal.generators()[i]);
  out << ')';
  return out.str();
}

}  // namespace frobnorm
