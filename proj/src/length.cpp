#include "sally/length.hpp"

#include <algorithm>

#include "sally/parser.hpp"

namespace sally {

namespace {

struct Staircase {
  std::vector<Monomial> leading;
  std::vector<int> bounds;  // exponent bound per variable, from pure-power leading monomials
};

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& lts) {
  for (const auto& l : lts) {
    if (l.divides(m)) return true;
  }
  return false;
}

// Least exponent bound per variable from pure-power leading monomials; a
// finite staircase has one for every variable.
std::optional<std::vector<int>> pure_power_bounds(int nvars, const std::vector<Monomial>& lts) {
  std::vector<int> bounds(static_cast<std::size_t>(nvars), -1);
  for (const auto& l : lts) {
    int support = -1;
    bool pure = true;
    for (int i = 0; i < nvars; ++i) {
      if (l.exponent(i) == 0) continue;
      if (support >= 0) {
        pure = false;
        break;
      }
      support = i;
    }
    if (!pure) continue;
    if (support < 0) return std::vector<int>(static_cast<std::size_t>(nvars), 0);  // unit ideal
    int& b = bounds[static_cast<std::size_t>(support)];
    if (b < 0 || l.exponent(support) < b) b = l.exponent(support);
  }
  for (int b : bounds) {
    if (b < 0) return std::nullopt;
  }
  return bounds;
}

struct CountResult {
  long long count = 0;
  int max_degree = -1;
};

void count_standard(const std::vector<Monomial>& lts, const std::vector<int>& bounds,
                    Monomial& current, int var, CountResult& out) {
  if (divisible_by_any(current, lts)) return;
  if (var == current.width()) {
    ++out.count;
    if (out.count > 100000000) throw ResourceError("standard monomial count exploded");
    out.max_degree = std::max(out.max_degree, current.degree());
    return;
  }
  for (int e = 0; e < std::max(1, bounds[static_cast<std::size_t>(var)]); ++e) {
    current = current.with_exponent(var, e);
    count_standard(lts, bounds, current, var + 1, out);
  }
  current = current.with_exponent(var, 0);
}

}  // namespace

LengthValue artinian_length(const IdealHandle& j) {
  const GroebnerBasis& gb = j.lifted_basis();
  const RingPtr& ring = j.ring();
  if (gb.contains_unit()) return LengthValue{0, 0, 1};

  // m-primary check: some power of every variable must reduce into J + a.
  const int cap = ring->limits().degree_cap;
  int s = 1;
  for (int i = 0; i < ring->nvars(); ++i) {
    Polynomial x = ring->variable_poly(i);
    Polynomial r = normal_form(x, gb, ring->limits());
    int p = 1;
    while (!r.is_zero() && p < cap) {
      r = normal_form(poly_mul(ring->default_order(), r, x), gb, ring->limits());
      ++p;
    }
    if (!r.is_zero()) throw NotZeroDimensionalError(ring->variables()[static_cast<std::size_t>(i)]);
    s += p - 1;
  }

  auto lts = gb.leading_monomials();
  auto bounds = pure_power_bounds(ring->nvars(), lts);
  if (!bounds) throw NotZeroDimensionalError("(no pure-power leading monomial)");
  Monomial current(ring->nvars());
  CountResult res;
  count_standard(lts, *bounds, current, 0, res);
  return LengthValue{res.count, s, s + 1};
}

LengthValue quotient_length(const IdealHandle& outer, const IdealHandle& inner) {
  if (!outer.ring()->same_ring(*inner.ring())) throw InputError("operands live in different rings");
  for (const auto& g : inner.generators()) {
    if (!ideal_member(outer, g)) {
      throw ContainmentError(to_string(g, outer.ring()->variables()));
    }
  }
  try {
    LengthValue li = artinian_length(inner);
    LengthValue lo = artinian_length(outer);
    return LengthValue{li.value - lo.value, std::max(li.truncation_level, lo.truncation_level),
                       std::max(li.witness_level, lo.witness_level)};
  } catch (const NotZeroDimensionalError&) {
    // J/K can have finite length while neither A/J nor A/K does; truncate.
    IdealHandle m = maximal_ideal(outer.ring());
    PowerCache powers(m);
    const int cap = 32;
    std::optional<long long> prev;
    for (int n = 2; n <= cap; ++n) {
      const IdealHandle& mn = powers.power(n);
      long long diff = artinian_length(ideal_sum(inner, mn)).value -
                       artinian_length(ideal_sum(outer, mn)).value;
      if (prev && *prev == diff) return LengthValue{diff, n - 1, n};
      prev = diff;
    }
    throw StabilizationError("quotient length did not stabilize by truncation level " +
                             std::to_string(cap));
  }
}

LengthValue monomial_length_oracle(int nvars, const std::vector<Monomial>& gens,
                                   std::optional<int> truncation) {
  std::vector<int> bounds(static_cast<std::size_t>(nvars), -1);
  for (const auto& g : gens) {
    if (g.width() != nvars) throw InputError("generator width does not match the variable count");
    int support = -1;
    bool pure = true;
    for (int i = 0; i < nvars; ++i) {
      if (g.exponent(i) == 0) continue;
      if (support >= 0) {
        pure = false;
        break;
      }
      support = i;
    }
    if (!pure) continue;
    if (support < 0) return LengthValue{0, 0, 1};  // unit generator
    int& b = bounds[static_cast<std::size_t>(support)];
    if (b < 0 || g.exponent(support) < b) b = g.exponent(support);
  }
  for (int i = 0; i < nvars; ++i) {
    if (bounds[static_cast<std::size_t>(i)] < 0) {
      throw NotZeroDimensionalError("#" + std::to_string(i));
    }
  }

  // Plain lattice scan; deliberately no Groebner machinery and no pruning.
  long long count = 0;
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  while (true) {
    int degree = 0;
    for (int v : e) degree += v;
    bool in_range = !truncation || degree < *truncation;
    if (in_range) {
      bool divisible = false;
      for (const auto& g : gens) {
        bool all = true;
        for (int i = 0; i < nvars; ++i) {
          if (g.exponent(i) > e[static_cast<std::size_t>(i)]) {
            all = false;
            break;
          }
        }
        if (all) {
          divisible = true;
          break;
        }
      }
      if (!divisible) ++count;
    }
    int i = 0;
    while (i < nvars) {
      if (++e[static_cast<std::size_t>(i)] < bounds[static_cast<std::size_t>(i)]) break;
      e[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == nvars) break;
  }

  int s = 1;
  for (int i = 0; i < nvars; ++i) s += bounds[static_cast<std::size_t>(i)] - 1;
  if (truncation) return LengthValue{count, *truncation, *truncation};
  return LengthValue{count, s, s + 1};
}

LengthValue monomial_length_oracle(int nvars, const std::vector<Polynomial>& gens,
                                   std::optional<int> truncation) {
  std::vector<Monomial> monos;
  monos.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_monomial()) throw InputError("non-monomial input to the length oracle");
    monos.push_back(g.leading().mono);
  }
  return monomial_length_oracle(nvars, monos, truncation);
}

namespace {

// Least k whose k-th difference row is constant over the trailing window.
std::optional<int> growth_degree(const std::vector<long long>& values, int window) {
  std::vector<long long> row = values;
  for (int k = 0; k < static_cast<int>(values.size()); ++k) {
    if (static_cast<int>(row.size()) < window) return std::nullopt;
    bool constant = true;
    for (std::size_t i = row.size() - static_cast<std::size_t>(window); i + 1 < row.size(); ++i) {
      if (row[i] != row[i + 1]) {
        constant = false;
        break;
      }
    }
    if (constant && row.back() > 0) return k;
    std::vector<long long> next;
    for (std::size_t i = 0; i + 1 < row.size(); ++i) next.push_back(row[i + 1] - row[i]);
    row = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

int krull_dimension(const RingPtr& ring) {
  return ring->dimension_cached([&] {
    PowerCache powers(maximal_ideal(ring));
    std::vector<long long> values;
    const int cap = 16;
    std::optional<int> candidate;
    for (int n = 1; n <= cap; ++n) {
      values.push_back(artinian_length(powers.power(n)).value);
      if (n < 4) continue;
      auto d = growth_degree(values, 3);
      // Accept only when the fit survives one more maximal-adic step.
      if (d && candidate == d) return *d;
      candidate = d;
    }
    throw StabilizationError("dimension fit did not stabilize within " + std::to_string(cap) +
                             " maximal-adic steps");
  });
}

}  // namespace sally
