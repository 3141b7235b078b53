#include "sally/ideal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace sally {

struct IdealHandle::Cache {
  std::once_flag once;
  GroebnerBasis basis;
};

IdealHandle::IdealHandle(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  if (!ring_) throw InputError("ideal handle needs a ring");
  for (auto& g : gens) {
    g = poly_resort(ring_->default_order(), g);
    if (g.is_zero()) continue;
    if (g.width() != ring_->nvars()) throw InputError("generator width does not match the ring");
    if (!(g.leading().coeff.field() == ring_->field())) {
      throw InputError("generator field does not match the ring");
    }
    gens_.push_back(std::move(g));
  }
}

IdealHandle IdealHandle::reduced(RingPtr ring, std::vector<Polynomial> gens) {
  const auto& relgb = ring->relation_basis(ring->default_order());
  const Limits& lim = ring->limits();
  std::vector<Polynomial> cleaned;
  for (auto& g : gens) {
    Polynomial r = normal_form(g, relgb, lim);
    if (!r.is_zero()) cleaned.push_back(poly_monic(r));
  }
  const MonomialOrder& ord = ring->default_order();
  std::stable_sort(cleaned.begin(), cleaned.end(), [&ord](const Polynomial& a, const Polynomial& b) {
    if (a.leading().mono != b.leading().mono) return ord.less(a.leading().mono, b.leading().mono);
    return a.term_count() < b.term_count();
  });
  std::vector<Polynomial> kept;
  for (auto& g : cleaned) {
    bool redundant = false;
    for (const auto& h : kept) {
      if (h == g) {
        redundant = true;
        break;
      }
      // A monomial multiple of a kept monomial generator adds nothing.
      if (g.is_monomial() && h.is_monomial() && h.leading().mono.divides(g.leading().mono)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(std::move(g));
  }
  return IdealHandle(std::move(ring), std::move(kept));
}

const GroebnerBasis& IdealHandle::lifted_basis() const {
  std::call_once(cache_->once, [this] {
    std::vector<Polynomial> input = gens_;
    for (const auto& r : ring_->relations()) input.push_back(r);
    cache_->basis = buchberger(input, ring_->default_order(), ring_->nvars(), ring_->limits());
  });
  return cache_->basis;
}

bool IdealHandle::is_zero() const { return lifted_basis().is_zero_ideal(); }

bool IdealHandle::is_unit() const { return lifted_basis().contains_unit(); }

IdealHandle zero_ideal(RingPtr ring) { return IdealHandle(std::move(ring), {}); }

IdealHandle unit_ideal(RingPtr ring) {
  Polynomial one = Polynomial::constant(Scalar::one(ring->field()), ring->nvars());
  return IdealHandle(std::move(ring), {one});
}

IdealHandle maximal_ideal(RingPtr ring) {
  auto gens = ring->maximal_ideal_gens();
  return IdealHandle(std::move(ring), std::move(gens));
}

namespace {

void require_same_ring(const IdealHandle& a, const IdealHandle& b) {
  if (!a.ring()->same_ring(*b.ring())) throw InputError("operands live in different rings");
}

// Shift every exponent vector one slot right, freeing index 0 for the tag
// variable of the intersection trick.
Polynomial inject_after_tag(const Polynomial& f, const MonomialOrder& ext_ord) {
  std::vector<Term> terms;
  terms.reserve(static_cast<std::size_t>(f.term_count()));
  for (const auto& t : f.terms()) {
    Monomial m(t.mono.width() + 1);
    for (int i = 0; i < t.mono.width(); ++i) m = m.with_exponent(i + 1, t.mono.exponent(i));
    terms.push_back(Term{m, t.coeff});
  }
  return Polynomial::from_terms(ext_ord, std::move(terms));
}

Polynomial project_drop_tag(const Polynomial& f, const MonomialOrder& ord) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m(t.mono.width() - 1);
    for (int i = 1; i < t.mono.width(); ++i) m = m.with_exponent(i - 1, t.mono.exponent(i));
    terms.push_back(Term{m, t.coeff});
  }
  return Polynomial::from_terms(ord, std::move(terms));
}

bool free_of_first(const Polynomial& f, int k) {
  for (const auto& t : f.terms()) {
    for (int i = 0; i < k; ++i) {
      if (t.mono.exponent(i) != 0) return false;
    }
  }
  return true;
}

// Intersection of (gens_a + relations) and (gens_b + extra_b) as ideals of D.
std::vector<Polynomial> intersect_lifted(const RingPtr& ring, const std::vector<Polynomial>& side_a,
                                         const std::vector<Polynomial>& side_b) {
  const int w = ring->nvars();
  if (w + 1 > Monomial::kMaxVars) throw ResourceError("no room for the elimination variable");
  MonomialOrder elim = MonomialOrder::elimination_block(1);
  const Field& field = ring->field();
  Polynomial tag = Polynomial::term(Monomial::variable(w + 1, 0), Scalar::one(field));
  Polynomial one_minus_tag =
      poly_sub(elim, Polynomial::constant(Scalar::one(field), w + 1), tag);

  std::vector<Polynomial> input;
  for (const auto& g : side_a) input.push_back(poly_mul(elim, tag, inject_after_tag(g, elim)));
  for (const auto& g : side_b) {
    input.push_back(poly_mul(elim, one_minus_tag, inject_after_tag(g, elim)));
  }
  GroebnerBasis gb = buchberger(input, elim, w + 1, ring->limits());

  std::vector<Polynomial> out;
  for (const auto& g : gb.polys) {
    if (free_of_first(g, 1)) out.push_back(project_drop_tag(g, ring->default_order()));
  }
  return out;
}

std::vector<Polynomial> with_relations(const IdealHandle& j) {
  std::vector<Polynomial> out = j.generators();
  for (const auto& r : j.ring()->relations()) out.push_back(r);
  return out;
}

// Exact division q = f / g for f in the principal ideal (g).
Polynomial divide_exact(const RingPtr& ring, const Polynomial& f, const Polynomial& g) {
  const MonomialOrder& ord = ring->default_order();
  Polynomial rest = f;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading();
    if (!g.leading().mono.divides(lt.mono)) {
      throw std::logic_error("non-exact division inside ideal colon");
    }
    Monomial u = lt.mono.divide_by(g.leading().mono);
    Scalar c = lt.coeff.div(g.leading().coeff);
    quotient.push_back(Term{u, c});
    rest = poly_sub(ord, rest, poly_mul_term(g, u, c));
  }
  return Polynomial::from_terms(ord, std::move(quotient));
}

// (J + relations) : f, by intersect-and-divide.
std::vector<Polynomial> colon_by_element(const IdealHandle& j, const Polynomial& f) {
  auto meet = intersect_lifted(j.ring(), with_relations(j), {f});
  std::vector<Polynomial> out;
  out.reserve(meet.size());
  for (const auto& w : meet) out.push_back(divide_exact(j.ring(), w, f));
  return out;
}

}  // namespace

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b) {
  require_same_ring(a, b);
  std::vector<Polynomial> gens = a.generators();
  for (const auto& g : b.generators()) gens.push_back(g);
  return IdealHandle::reduced(a.ring(), std::move(gens));
}

IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b) {
  require_same_ring(a, b);
  const MonomialOrder& ord = a.ring()->default_order();
  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(poly_mul(ord, f, g));
  }
  return IdealHandle::reduced(a.ring(), std::move(gens));
}

IdealHandle ideal_power(const IdealHandle& a, int k) {
  if (k < 0) throw InputError("negative ideal exponent");
  if (k == 0) return unit_ideal(a.ring());
  IdealHandle acc = IdealHandle::reduced(a.ring(), a.generators());
  for (int i = 1; i < k; ++i) acc = ideal_product(acc, a);
  return acc;
}

IdealHandle ideal_intersect(const IdealHandle& a, const IdealHandle& b) {
  require_same_ring(a, b);
  auto gens = intersect_lifted(a.ring(), with_relations(a), with_relations(b));
  return IdealHandle::reduced(a.ring(), std::move(gens));
}

IdealHandle ideal_colon(const IdealHandle& j, const IdealHandle& k) {
  require_same_ring(j, k);
  IdealHandle divisor = IdealHandle::reduced(k.ring(), k.generators());
  if (divisor.generators().empty()) throw InputError("colon by the zero ideal");
  bool first = true;
  IdealHandle acc = unit_ideal(j.ring());
  for (const auto& f : divisor.generators()) {
    IdealHandle part = IdealHandle::reduced(j.ring(), colon_by_element(j, f));
    acc = first ? part : ideal_intersect(acc, part);
    first = false;
  }
  return acc;
}

IdealHandle eliminate(const IdealHandle& j, const std::vector<std::string>& drop) {
  const RingPtr& ring = j.ring();
  const auto& vars = ring->variables();
  std::vector<bool> dropped(vars.size(), false);
  for (const auto& name : drop) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw InputError("unknown variable '" + name + "' in eliminate");
    dropped[static_cast<std::size_t>(it - vars.begin())] = true;
  }
  const int w = ring->nvars();
  std::vector<int> new_pos(static_cast<std::size_t>(w));
  int front = 0;
  for (int i = 0; i < w; ++i) {
    if (dropped[static_cast<std::size_t>(i)]) new_pos[static_cast<std::size_t>(i)] = front++;
  }
  int back = front;
  for (int i = 0; i < w; ++i) {
    if (!dropped[static_cast<std::size_t>(i)]) new_pos[static_cast<std::size_t>(i)] = back++;
  }
  const int k = front;
  MonomialOrder elim = MonomialOrder::elimination_block(k);

  auto permute = [&](const Polynomial& f, const std::vector<int>& pos, const MonomialOrder& ord) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
      Monomial m(w);
      for (int i = 0; i < w; ++i) m = m.with_exponent(pos[static_cast<std::size_t>(i)], t.mono.exponent(i));
      terms.push_back(Term{m, t.coeff});
    }
    return Polynomial::from_terms(ord, std::move(terms));
  };

  std::vector<Polynomial> input;
  for (const auto& g : with_relations(j)) input.push_back(permute(g, new_pos, elim));
  GroebnerBasis gb = buchberger(input, elim, w, ring->limits());

  std::vector<int> inverse(static_cast<std::size_t>(w));
  for (int i = 0; i < w; ++i) inverse[static_cast<std::size_t>(new_pos[static_cast<std::size_t>(i)])] = i;
  std::vector<Polynomial> out;
  for (const auto& g : gb.polys) {
    if (free_of_first(g, k)) out.push_back(permute(g, inverse, ring->default_order()));
  }
  return IdealHandle::reduced(ring, std::move(out));
}

bool ideal_member(const IdealHandle& j, const Polynomial& f) {
  return normal_form(f, j.lifted_basis(), j.ring()->limits()).is_zero();
}

bool ideal_contains(const IdealHandle& outer, const IdealHandle& inner) {
  require_same_ring(outer, inner);
  for (const auto& g : inner.generators()) {
    if (!ideal_member(outer, g)) return false;
  }
  return true;
}

bool ideal_equal(const IdealHandle& a, const IdealHandle& b) {
  require_same_ring(a, b);
  return a.lifted_basis() == b.lifted_basis();
}

PowerCache::PowerCache(IdealHandle base) : base_(std::move(base)) {
  powers_.push_back(unit_ideal(base_.ring()));
  powers_.push_back(IdealHandle::reduced(base_.ring(), base_.generators()));
}

const IdealHandle& PowerCache::power(int k) {
  if (k < 0) throw InputError("negative ideal exponent");
  while (static_cast<int>(powers_.size()) <= k) {
    powers_.push_back(ideal_product(powers_.back(), base_));
  }
  return powers_[static_cast<std::size_t>(k)];
}

}  // namespace sally
