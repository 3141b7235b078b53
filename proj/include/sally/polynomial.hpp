#pragma once

#include <utility>
#include <vector>

#include "sally/monomial.hpp"
#include "sally/scalar.hpp"

namespace sally {

struct Term {
  Monomial mono;
  Scalar coeff;
};

// Terms sorted strictly descending under the order the polynomial was built
// with; no zero coefficients, no duplicate monomials. The zero polynomial is
// the empty term list.
class Polynomial {
public:
  Polynomial() = default;

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(const Scalar& c, int width);
  static Polynomial term(const Monomial& m, const Scalar& c);
  // Sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(const MonomialOrder& ord, std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const Term& term(int i) const { return terms_[static_cast<std::size_t>(i)]; }
  const std::vector<Term>& terms() const { return terms_; }

  // Leading term in the stored ordering (front of the list); f != 0 required.
  const Term& leading() const;

  // Max total degree over terms; -1 for the zero polynomial.
  int degree() const;
  int width() const { return terms_.empty() ? -1 : terms_.front().mono.width(); }

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

private:
  friend Polynomial poly_add(const MonomialOrder&, const Polynomial&, const Polynomial&);
  friend Polynomial poly_mul(const MonomialOrder&, const Polynomial&, const Polynomial&);
  friend Polynomial poly_neg(const Polynomial&);
  friend Polynomial poly_scale(const Polynomial&, const Scalar&);
  friend Polynomial poly_mul_term(const Polynomial&, const Monomial&, const Scalar&);
  std::vector<Term> terms_;
};

Polynomial poly_add(const MonomialOrder& ord, const Polynomial& f, const Polynomial& g);
Polynomial poly_sub(const MonomialOrder& ord, const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const MonomialOrder& ord, const Polynomial& f, const Polynomial& g);
Polynomial poly_scale(const Polynomial& f, const Scalar& c);
Polynomial poly_neg(const Polynomial& f);
Polynomial poly_monic(const Polynomial& f);
// f times a single term.
Polynomial poly_mul_term(const Polynomial& f, const Monomial& m, const Scalar& c);
// Re-sort a polynomial under another order.
Polynomial poly_resort(const MonomialOrder& ord, const Polynomial& f);

// Order-maximal term of f under ord (independent of the stored sort).
// Rejects the zero polynomial.
std::pair<Monomial, Scalar> leading_term(const Polynomial& f, const MonomialOrder& ord);

}  // namespace sally
