#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sally/family.hpp"
#include "sally/parser.hpp"

namespace testutil {

using namespace sally;

// Polynomial ring over Q with no relations, plus parsing sugar.
struct TestRing {
  RingPtr ring;

  Polynomial operator()(const std::string& expr) const {
    return parse_polynomial(expr, ring->variables(), ring->field(), ring->default_order());
  }

  IdealHandle ideal(const std::vector<std::string>& exprs) const {
    std::vector<Polynomial> gens;
    for (const auto& e : exprs) gens.push_back((*this)(e));
    return IdealHandle(ring, std::move(gens));
  }
};

inline TestRing poly_ring(std::vector<std::string> vars) {
  return TestRing{RingPresentation::make(Field::rationals(), std::move(vars), {})};
}

struct FamilyFixture {
  CompiledRing compiled;

  const RingPtr& ring() const { return compiled.ring; }
  const IdealHandle& I() const { return compiled.ideals.at("I"); }
  const IdealHandle& Q() const { return compiled.ideals.at("Q"); }
  Polynomial operator()(const std::string& expr) const {
    return parse_polynomial(expr, compiled.ring->variables(), compiled.ring->field(),
                            compiled.ring->default_order());
  }
};

inline FamilyFixture family_fixture(int m, int d, int c = 0) {
  return FamilyFixture{compile_ring_document(build_family(FamilySpec{m, d, c}))};
}

// Deterministic xorshift generator for property tests.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }

  int range(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

inline Polynomial random_poly(Rng& rng, const RingPtr& ring, int max_terms, int max_exp) {
  const int w = ring->nvars();
  std::vector<Term> terms;
  const int count = rng.range(0, max_terms);
  for (int t = 0; t < count; ++t) {
    Monomial m(w);
    for (int i = 0; i < w; ++i) m = m.with_exponent(i, rng.range(0, max_exp));
    long coeff = rng.range(-9, 9);
    terms.push_back(Term{m, Scalar::of(ring->field(), coeff)});
  }
  return Polynomial::from_terms(ring->default_order(), std::move(terms));
}

inline Monomial random_monomial(Rng& rng, int width, int max_exp) {
  Monomial m(width);
  for (int i = 0; i < width; ++i) m = m.with_exponent(i, rng.range(0, max_exp));
  return m;
}

}  // namespace testutil
