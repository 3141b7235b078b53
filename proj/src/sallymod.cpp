#include "sally/sallymod.hpp"

#include <algorithm>

namespace sally {

namespace {

// Shared scratch space for the Sally-side computations on one (I, Q) pair.
struct Ctx {
  IdealHandle ideal;
  IdealHandle reduction;
  PowerCache ipow;
  PowerCache qpow;
  std::map<int, IdealHandle> qn_i;   // Q^n I
  std::map<int, IdealHandle> qn_i2;  // Q^n I²

  Ctx(const IdealHandle& i, const IdealHandle& q) : ideal(i), reduction(q), ipow(i), qpow(q) {
    if (!i.ring()->same_ring(*q.ring())) throw InputError("operands live in different rings");
  }

  const IdealHandle& product_qn_i(int n) {
    auto it = qn_i.find(n);
    if (it == qn_i.end()) it = qn_i.emplace(n, ideal_product(qpow.power(n), ipow.power(1))).first;
    return it->second;
  }

  const IdealHandle& product_qn_i2(int n) {
    auto it = qn_i2.find(n);
    if (it == qn_i2.end()) it = qn_i2.emplace(n, ideal_product(qpow.power(n), ipow.power(2))).first;
    return it->second;
  }

  int find_reduction_number(int cap) {
    for (int r = 0; r <= cap; ++r) {
      if (ideal_equal(ipow.power(r + 1), ideal_product(reduction, ipow.power(r)))) return r;
    }
    throw NotAReductionError(cap);
  }
};

struct SallyCore {
  long long sigma = 0;
  long long c = 0;
  bool q_cap_i2_eq_qi = false;
  bool i2_eq_qi = false;
  bool i3_eq_qi2 = false;
  bool i4_eq_qi3 = false;
  int reduction_number = -1;
};

SallyCore sally_core(Ctx& ctx, int cap) {
  SallyCore core;
  core.reduction_number = ctx.find_reduction_number(cap);
  core.sigma = quotient_length(ctx.ipow.power(2), ctx.product_qn_i(1)).value;
  core.c = quotient_length(ctx.ipow.power(3), ctx.product_qn_i2(1)).value;
  core.i2_eq_qi = core.sigma == 0;
  core.i3_eq_qi2 = core.c == 0;
  core.i4_eq_qi3 =
      ideal_equal(ctx.ipow.power(4), ideal_product(ctx.reduction, ctx.ipow.power(3)));
  core.q_cap_i2_eq_qi = ideal_equal(ideal_intersect(ctx.reduction, ctx.ipow.power(2)),
                                    ctx.product_qn_i(1));
  return core;
}

void require_parameter_reduction(Ctx& ctx) {
  if (!ideal_contains(ctx.ideal, ctx.reduction)) {
    throw InputError("the reduction is not contained in the ideal");
  }
  const RingPtr& ring = ctx.ideal.ring();
  const int dim = krull_dimension(ring);
  IdealHandle mq = ideal_product(maximal_ideal(ring), ctx.reduction);
  long long mu = quotient_length(ctx.qpow.power(1), mq).value;
  if (mu != dim) {
    throw InputError("reduction is not a parameter ideal: " + std::to_string(mu) +
                     " minimal generators, dimension " + std::to_string(dim));
  }
}

}  // namespace

SallyTable sally_table(const IdealHandle& ideal, const IdealHandle& reduction, int n_max) {
  Ctx ctx(ideal, reduction);
  require_parameter_reduction(ctx);
  SallyCore core = sally_core(ctx, n_max);

  SallyTable table;
  table.n_max = n_max;
  table.sigma = core.sigma;
  table.c = core.c;
  table.q_cap_i2_eq_qi = core.q_cap_i2_eq_qi;
  table.i2_eq_qi = core.i2_eq_qi;
  table.i3_eq_qi2 = core.i3_eq_qi2;
  table.i4_eq_qi3 = core.i4_eq_qi3;
  table.reduction_number = core.reduction_number;

  for (int n = 1; n <= n_max; ++n) {
    long long s = quotient_length(ctx.ipow.power(n + 1), ctx.product_qn_i(n)).value;
    long long l = quotient_length(ctx.product_qn_i2(n - 1), ctx.product_qn_i(n)).value;
    long long cc = n == 1 ? 0
                          : quotient_length(ctx.ipow.power(n + 1), ctx.product_qn_i2(n - 1)).value;
    table.s_lengths.push_back(s);
    table.l_lengths.push_back(l);
    table.c_lengths.push_back(cc);
  }
  return table;
}

std::vector<long long> vaz_pinto_lengths(const IdealHandle& ideal, const IdealHandle& reduction,
                                         int level, int n_max) {
  if (level < 1) throw InputError("filtration level must be at least 1");
  Ctx ctx(ideal, reduction);
  std::vector<long long> out;
  for (int n = level; n <= n_max; ++n) {
    IdealHandle denom = ideal_product(ctx.qpow.power(n - level + 1), ctx.ipow.power(level));
    out.push_back(quotient_length(ctx.ipow.power(n + 1), denom).value);
  }
  return out;
}

bool check_q_cap_i2(const IdealHandle& ideal, const IdealHandle& reduction) {
  if (!ideal_contains(ideal, reduction)) {
    throw InputError("the reduction is not contained in the ideal");
  }
  IdealHandle i2 = ideal_power(ideal, 2);
  return ideal_equal(ideal_intersect(reduction, i2), ideal_product(reduction, ideal));
}

IdealHandle ratliff_rush(const IdealHandle& ideal, int cap) {
  artinian_length(ideal);  // m-primary precondition
  PowerCache powers(ideal);
  IdealHandle prev = ideal_colon(powers.power(2), powers.power(1));
  for (int n = 2; n <= cap; ++n) {
    IdealHandle cur = ideal_colon(powers.power(n + 1), powers.power(n));
    if (!ideal_contains(cur, prev)) {
      throw std::logic_error("Ratliff-Rush chain is not ascending; colon computation is broken");
    }
    if (ideal_equal(cur, prev)) return cur;
    prev = cur;
  }
  throw StabilizationError("no-stabilization: Ratliff-Rush chain still moving at n = " +
                           std::to_string(cap));
}

DepthProbe depth_probe(const IdealHandle& ideal, const IdealHandle& reduction, int n_max) {
  Ctx ctx(ideal, reduction);
  DepthProbe probe;
  probe.certified_up_to = n_max;
  probe.positive_depth = true;
  for (int n = 1; n <= n_max; ++n) {
    IdealHandle rr = ratliff_rush(ctx.ipow.power(n));
    if (!ideal_equal(rr, ctx.ipow.power(n))) {
      probe.positive_depth = false;
      probe.rr_gap_at = n;
      break;
    }
  }

  // Valabrega-Valla style bound: the largest s with
  // (a_1..a_s) ∩ I^n = (a_1..a_s) I^{n-1} for all 2 <= n <= n_max.
  const auto& gens = ctx.reduction.generators();
  int bound = 0;
  for (std::size_t s = 1; s <= gens.size(); ++s) {
    std::vector<Polynomial> prefix(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(s));
    IdealHandle part(ideal.ring(), prefix);
    bool ok = true;
    for (int n = 2; n <= n_max; ++n) {
      if (!ideal_equal(ideal_intersect(part, ctx.ipow.power(n)),
                       ideal_product(part, ctx.ipow.power(n - 1)))) {
        ok = false;
        break;
      }
    }
    if (!ok) break;
    bound = static_cast<int>(s);
  }
  probe.vv_depth_lower_bound = bound;
  return probe;
}

DecompositionCheck decomposition_check(const IdealHandle& ideal, const IdealHandle& reduction,
                                       int n_max) {
  Ctx ctx(ideal, reduction);
  SallyCore core = sally_core(ctx, std::max(n_max, 8));
  if (!core.q_cap_i2_eq_qi) {
    throw InputError("decomposition check requires Q ∩ I² = QI");
  }
  const int dim = krull_dimension(ideal.ring());
  FittedValues fitted = hilbert_fit_extending(ctx.ipow, dim, n_max);
  const std::vector<long long>& values = fitted.values;
  const long long e0 = fitted.fit.e.front();
  const long long colength = values.front();

  DecompositionCheck check;
  check.checked_up_to = n_max;
  check.passed = true;
  for (int n = 0; n <= n_max; ++n) {
    long long c_n = n <= 1 ? 0
                           : quotient_length(ctx.ipow.power(n + 1), ctx.product_qn_i2(n - 1)).value;
    // The sigma terms are ℓ(L_n) = σ·C(n+d-2, d-1), written in the Pascal
    // split -σC(n+d-1,d-1) + σC(n+d-2,d-2) wherever that split is defined
    // (everywhere except d = 1, n = 0, where the split form overshoots).
    long long rhs = e0 * binom(n + dim, dim) -
                    (e0 - colength) * binom(n + dim - 1, dim - 1) -
                    core.sigma * binom(n + dim - 2, dim - 1) - c_n;
    if (rhs != values[static_cast<std::size_t>(n)]) {
      check.passed = false;
      check.first_failure = n;
      check.expected = rhs;
      check.actual = values[static_cast<std::size_t>(n)];
      break;
    }
  }
  return check;
}

E1FormulaCheck e1_formula_check(const IdealHandle& ideal, const IdealHandle& reduction) {
  Ctx ctx(ideal, reduction);
  require_parameter_reduction(ctx);
  SallyCore core = sally_core(ctx, 8);
  const int dim = krull_dimension(ideal.ring());
  FittedValues fitted = hilbert_fit_extending(ctx.ipow, dim, dim + 4);
  const std::vector<long long>& values = fitted.values;

  E1FormulaCheck out;
  out.e0 = fitted.fit.e[0];
  out.e1 = fitted.fit.e[1];
  out.colength = values[0];
  out.sigma = core.sigma;
  out.gap = out.e1 - (out.e0 - out.colength + out.sigma);
  out.gap_nonnegative = out.gap >= 0;
  out.i3_eq_qi2 = core.i3_eq_qi2;
  out.gap_zero_iff_i3 = (out.gap == 0) == core.i3_eq_qi2;
  const long long i_mod_i2 = values[1] - values[0];  // ℓ(I/I²)
  out.sigma_identity_rhs = out.e0 + (dim - 1) * out.colength - i_mod_i2;
  out.sigma_identity_holds = out.sigma == out.sigma_identity_rhs;
  return out;
}

namespace {

std::vector<long long> strip_trailing_zeros(std::vector<long long> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

// ℓ(A/I) + (e₀−ℓ−σ−1)z + (σ+1)z² + z(1−z)^{c+1}, expanded.
std::vector<long long> ev_plus_1_numerator(long long colength, long long e0, long long sigma,
                                           long long c) {
  std::vector<long long> h(static_cast<std::size_t>(c) + 3, 0);
  h[0] = colength;
  h[1] = e0 - colength - sigma - 1;
  h[2] = sigma + 1;
  for (long long i = 0; i <= c + 1; ++i) {
    long long term = binom(c + 1, i);
    h[static_cast<std::size_t>(i) + 1] += (i % 2 == 0) ? term : -term;
  }
  return strip_trailing_zeros(std::move(h));
}

}  // namespace

ClassificationReport classify(const IdealHandle& ideal, const IdealHandle& reduction, int n_max,
                              bool check_rr_filtration) {
  Ctx ctx(ideal, reduction);
  require_parameter_reduction(ctx);
  const RingPtr& ring = ideal.ring();
  const int dim = krull_dimension(ring);

  ClassificationReport rep;
  rep.dim = dim;
  if (!ring->field().is_rational()) {
    rep.warnings.push_back("prime-field coefficients: genericity-dependent claims not re-verified");
  }
  if (ideal_equal(ideal, maximal_ideal(ring))) {
    rep.assumed.push_back("integrally closed: automatic (maximal ideal)");
  } else {
    rep.assumed.push_back("integrally closed: hypothesis assumed, not certified");
  }

  SallyCore core = sally_core(ctx, std::max(n_max, 4));
  rep.sigma = core.sigma;
  rep.c = core.c;
  rep.q_cap_i2_eq_qi = core.q_cap_i2_eq_qi;
  rep.i2_eq_qi = core.i2_eq_qi;
  rep.i3_eq_qi2 = core.i3_eq_qi2;
  rep.i4_eq_qi3 = core.i4_eq_qi3;
  rep.reduction_number = core.reduction_number;

  FittedValues fitted = hilbert_fit_extending(ctx.ipow, dim, std::max(n_max, dim + 4));
  rep.e = fitted.fit.e;
  rep.numerator = hilbert_series_numerator(ctx.ipow, dim);
  rep.colength = fitted.values.front();
  rep.postulation = fitted.fit.postulation;
  if (coefficients_from_numerator(rep.numerator, dim) != rep.e) {
    throw std::logic_error("series-derivative and binomial-fit coefficients disagree");
  }

  const long long e0 = rep.e[0];
  const long long e1 = rep.e[1];
  const long long colength = rep.colength;
  rep.northcott_gap = e1 - (e0 - colength);
  rep.ev_gap = e1 - (e0 - colength + rep.sigma);

  const bool degenerate = ideal_equal(ideal, reduction);
  if (degenerate || rep.northcott_gap == 0) {
    rep.branch = "northcott-equality";
    rep.predicted_numerator = strip_trailing_zeros({colength, e0 - colength});
  } else if (rep.northcott_gap == 1) {
    rep.branch = "northcott-plus-1";
    rep.predicted_numerator = strip_trailing_zeros({colength, e0 - colength - 1, 1});
  } else if (rep.ev_gap == 1) {
    rep.branch = "ev-plus-1";
    if (!rep.i4_eq_qi3) {
      rep.subcase = "indeterminate";
    } else if (rep.c == dim) {
      rep.subcase = "c=d";
    } else if (rep.c == 1) {
      rep.subcase = "c=1<d";
    } else {
      rep.subcase = "1<c<d";
    }
    rep.predicted_numerator = ev_plus_1_numerator(colength, e0, rep.sigma, rep.c);
  } else if (rep.ev_gap == 0 && rep.q_cap_i2_eq_qi) {
    rep.branch = "ev-equality";
    rep.predicted_numerator =
        strip_trailing_zeros({colength, e0 - colength - rep.sigma, rep.sigma});
  } else if (rep.northcott_gap == 2 && !rep.i3_eq_qi2) {
    rep.branch = "northcott-plus-2";
    rep.predicted_numerator = strip_trailing_zeros({colength, e0 - colength - 1, 0, 1});
  } else if (rep.northcott_gap == 3 && rep.sigma == 2) {
    rep.branch = "northcott-plus-3";
    rep.subcase = rep.c == 1 ? "c=1" : "c=2";
    if (rep.c == 1) {
      rep.predicted_numerator = strip_trailing_zeros({colength, e0 - colength - 2, 1, 1});
    } else {
      rep.predicted_numerator = strip_trailing_zeros({colength, e0 - colength - 2, 0, 3, -1});
    }
  } else {
    rep.branch = "unclassified";
  }

  if (!rep.predicted_numerator.empty()) {
    rep.predicted_e = coefficients_from_numerator(rep.predicted_numerator, dim);
    rep.match = rep.predicted_numerator == rep.numerator && rep.predicted_e == rep.e;
  }

  if (check_rr_filtration && rep.branch == "ev-plus-1" && rep.subcase == "c=d") {
    const int cap = 3;
    IdealHandle rr2 = ratliff_rush(ctx.ipow.power(2));
    rep.rr_condition_checked = true;
    rep.rr_square_gap = quotient_length(rr2, ctx.ipow.power(2)).value;
    bool stable = true;
    IdealHandle prev = rr2;
    for (int n = 2; n < cap; ++n) {
      IdealHandle next = ratliff_rush(ctx.ipow.power(n + 1));
      if (!ideal_equal(next, ideal_product(ctx.reduction, prev))) {
        stable = false;
        break;
      }
      prev = next;
    }
    rep.rr_filtration_stable = stable;
    rep.rr_checked_up_to = cap;
    rep.warnings.push_back("Ratliff-Rush filtration condition certified only up to n = " +
                           std::to_string(cap));
  }
  return rep;
}

Filtration::Filtration(RingPtr ring, std::function<IdealHandle(int)> rule)
    : ring_(std::move(ring)), rule_(std::move(rule)) {}

const IdealHandle& Filtration::at(int n) {
  if (n < 0) throw InputError("filtration index must be nonnegative");
  auto it = memo_.find(n);
  if (it == memo_.end()) {
    IdealHandle h = rule_(n);
    if (!h.ring()->same_ring(*ring_)) throw InputError("filtration rule changed rings");
    it = memo_.emplace(n, std::move(h)).first;
  }
  return it->second;
}

void Filtration::spot_check(int n_max) {
  if (!at(0).is_unit()) throw InputError("filtration does not start at the unit ideal");
  for (int n = 1; n < n_max; ++n) {
    if (!ideal_contains(at(n), at(n + 1))) {
      throw InputError("filtration is not descending at n = " + std::to_string(n));
    }
  }
  for (int m = 1; m <= n_max; ++m) {
    for (int n = m; m + n <= n_max; ++n) {
      if (!ideal_contains(at(m + n), ideal_product(at(m), at(n)))) {
        throw InputError("filtration is not multiplicative at (" + std::to_string(m) + ", " +
                         std::to_string(n) + ")");
      }
    }
  }
}

}  // namespace sally
