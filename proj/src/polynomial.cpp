#include "sally/polynomial.hpp"

#include <algorithm>
#include <map>

namespace sally {

Polynomial Polynomial::constant(const Scalar& c, int width) {
  if (c.is_zero()) return Polynomial();
  Polynomial f;
  f.terms_.push_back(Term{Monomial(width), c});
  return f;
}

Polynomial Polynomial::term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return Polynomial();
  Polynomial f;
  f.terms_.push_back(Term{m, c});
  return f;
}

Polynomial Polynomial::from_terms(const MonomialOrder& ord, std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(), [&ord](const Term& a, const Term& b) {
    return ord.greater(a.mono, b.mono);
  });
  Polynomial f;
  for (auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
      f.terms_.back().coeff = f.terms_.back().coeff.add(t.coeff);
      if (f.terms_.back().coeff.is_zero()) f.terms_.pop_back();
    } else {
      f.terms_.push_back(std::move(t));
    }
  }
  return f;
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw InputError("zero polynomial has no leading term");
  return terms_.front();
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != other.terms_[i].mono) return false;
    if (terms_[i].coeff != other.terms_[i].coeff) return false;
  }
  return true;
}

namespace {

void require_compatible(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return;
  if (f.width() != g.width()) throw InputError("mixed-ring operands (variable counts differ)");
  if (!(f.terms().front().coeff.field() == g.terms().front().coeff.field())) {
    throw InputError("mixed-field operands");
  }
}

}  // namespace

Polynomial poly_add(const MonomialOrder& ord, const Polynomial& f, const Polynomial& g) {
  require_compatible(f, g);
  Polynomial out;
  auto& r = out.terms_;
  std::size_t i = 0, j = 0;
  const auto& a = f.terms();
  const auto& b = g.terms();
  while (i < a.size() && j < b.size()) {
    int c = ord.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      r.push_back(a[i++]);
    } else if (c < 0) {
      r.push_back(b[j++]);
    } else {
      Scalar s = a[i].coeff.add(b[j].coeff);
      if (!s.is_zero()) r.push_back(Term{a[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) r.push_back(b[j]);
  return out;
}

Polynomial poly_sub(const MonomialOrder& ord, const Polynomial& f, const Polynomial& g) {
  return poly_add(ord, f, poly_neg(g));
}

Polynomial poly_neg(const Polynomial& f) {
  Polynomial out = f;
  for (auto& t : out.terms_) t.coeff = t.coeff.neg();
  return out;
}

Polynomial poly_scale(const Polynomial& f, const Scalar& c) {
  if (c.is_zero()) return Polynomial();
  Polynomial out = f;
  for (auto& t : out.terms_) t.coeff = t.coeff.mul(c);
  return out;
}

Polynomial poly_monic(const Polynomial& f) {
  if (f.is_zero()) return f;
  return poly_scale(f, f.leading().coeff.inv());
}

Polynomial poly_mul_term(const Polynomial& f, const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return Polynomial();
  Polynomial out = f;
  for (auto& t : out.terms_) {
    t.mono = t.mono.times(m);
    t.coeff = t.coeff.mul(c);
  }
  return out;
}

Polynomial poly_mul(const MonomialOrder& ord, const Polynomial& f, const Polynomial& g) {
  require_compatible(f, g);
  if (f.is_zero() || g.is_zero()) return Polynomial();
  auto desc = [&ord](const Monomial& a, const Monomial& b) { return ord.greater(a, b); };
  std::map<Monomial, Scalar, decltype(desc)> acc(desc);
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      Monomial m = a.mono.times(b.mono);
      Scalar c = a.coeff.mul(b.coeff);
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(std::move(m), std::move(c));
      } else {
        it->second = it->second.add(c);
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }
  Polynomial out;
  for (auto& [m, c] : acc) out.terms_.push_back(Term{m, c});
  return out;
}

Polynomial poly_resort(const MonomialOrder& ord, const Polynomial& f) {
  return Polynomial::from_terms(ord, f.terms());
}

std::pair<Monomial, Scalar> leading_term(const Polynomial& f, const MonomialOrder& ord) {
  if (f.is_zero()) throw InputError("zero polynomial has no leading term");
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms()) {
    if (ord.greater(t.mono, best->mono)) best = &t;
  }
  return {best->mono, best->coeff};
}

}  // namespace sally
