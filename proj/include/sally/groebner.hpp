#pragma once

#include <vector>

#include "sally/polynomial.hpp"

namespace sally {

// Guard rails for Groebner computations. Computations abort with a
// ResourceError once a needed monomial exceeds the degree cap, so runaway
// inputs fail loudly instead of hanging.
struct Limits {
  int degree_cap = 64;
};

// Reduced monic Groebner basis: no term of any element is divisible by the
// leading monomial of another element, leading coefficients are 1, elements
// sorted ascending by leading monomial. The zero ideal is the empty list.
struct GroebnerBasis {
  MonomialOrder order{MonomialOrder::grevlex()};
  int nvars = 0;
  std::vector<Polynomial> polys;

  bool is_zero_ideal() const { return polys.empty(); }
  bool contains_unit() const {
    return polys.size() == 1 && !polys.front().is_zero() && polys.front().leading().mono.is_unit();
  }
  std::vector<Monomial> leading_monomials() const;

  bool operator==(const GroebnerBasis& other) const {
    return order == other.order && nvars == other.nvars && polys == other.polys;
  }
};

// Unique remainder of f modulo G: no term of the result is divisible by any
// leading monomial of G, and f - result lies in the ideal of G.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G, const Limits& lim = {});

// Full reduction against an arbitrary basis list (remainder depends on the
// list when it is not a Groebner basis).
Polynomial reduce_against(const MonomialOrder& ord, Polynomial f,
                          const std::vector<Polynomial>& basis, const Limits& lim = {});

// Buchberger's algorithm with the coprime-lcm and chain criteria, normal
// selection strategy (lowest lcm degree, ties by lex on pair indices).
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord, int nvars,
                         const Limits& lim = {});

Polynomial s_polynomial(const MonomialOrder& ord, const Polynomial& f, const Polynomial& g);

}  // namespace sally
