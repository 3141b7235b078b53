#include "sally/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace sally {

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(polys.size());
  for (const auto& g : polys) out.push_back(g.leading().mono);
  return out;
}

Polynomial reduce_against(const MonomialOrder& ord, Polynomial f,
                          const std::vector<Polynomial>& basis, const Limits& lim) {
  std::vector<Term> remainder;
  while (!f.is_zero()) {
    const Term lt = f.leading();
    if (lt.mono.degree() > lim.degree_cap) {
      throw ResourceError("degree cap " + std::to_string(lim.degree_cap) +
                          " exceeded during reduction");
    }
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && g.leading().mono.divides(lt.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      Monomial u = lt.mono.divide_by(divisor->leading().mono);
      Scalar c = lt.coeff.div(divisor->leading().coeff);
      f = poly_sub(ord, f, poly_mul_term(*divisor, u, c));
    } else {
      remainder.push_back(lt);
      std::vector<Term> tail(f.terms().begin() + 1, f.terms().end());
      Polynomial g;
      g = Polynomial::from_terms(ord, std::move(tail));
      f = std::move(g);
    }
  }
  return Polynomial::from_terms(ord, std::move(remainder));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G, const Limits& lim) {
  return reduce_against(G.order, poly_resort(G.order, f), G.polys, lim);
}

Polynomial s_polynomial(const MonomialOrder& ord, const Polynomial& f, const Polynomial& g) {
  const Term& lf = f.leading();
  const Term& lg = g.leading();
  Monomial l = Monomial::lcm(lf.mono, lg.mono);
  Polynomial a = poly_mul_term(f, l.divide_by(lf.mono), lf.coeff.inv());
  Polynomial b = poly_mul_term(g, l.divide_by(lg.mono), lg.coeff.inv());
  return poly_sub(ord, a, b);
}

namespace {

// Deterministic pair queue keyed by (lcm degree, i, j).
using PairKey = std::tuple<int, int, int>;

struct BuchbergerState {
  MonomialOrder ord;
  Limits lim;
  std::vector<Polynomial> basis;
  std::set<PairKey> queue;
  std::set<std::pair<int, int>> treated;

  bool pair_treated(int a, int b) const {
    return treated.count({std::min(a, b), std::max(a, b)}) > 0;
  }
  void mark_treated(int a, int b) { treated.insert({std::min(a, b), std::max(a, b)}); }

  void enqueue_pairs_for(int j) {
    const Polynomial& gj = basis[static_cast<std::size_t>(j)];
    for (int i = 0; i < j; ++i) {
      const Polynomial& gi = basis[static_cast<std::size_t>(i)];
      // The S-polynomial of two monomials is identically zero.
      if (gi.is_monomial() && gj.is_monomial()) {
        mark_treated(i, j);
        continue;
      }
      int deg = Monomial::lcm(gi.leading().mono, gj.leading().mono).degree();
      queue.insert({deg, i, j});
    }
  }

  bool chain_criterion(int i, int j, const Monomial& l) const {
    for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
      if (k == i || k == j) continue;
      if (!basis[static_cast<std::size_t>(k)].leading().mono.divides(l)) continue;
      if (pair_treated(i, k) && pair_treated(j, k)) return true;
    }
    return false;
  }
};

std::vector<Polynomial> minimalize_and_reduce(const MonomialOrder& ord,
                                              std::vector<Polynomial> basis, const Limits& lim) {
  std::sort(basis.begin(), basis.end(), [&ord](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading().mono, b.leading().mono);
  });
  std::vector<Polynomial> minimal;
  for (const auto& g : basis) {
    bool redundant = false;
    for (const auto& h : minimal) {
      if (h.leading().mono.divides(g.leading().mono)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g);
  }
  // Tail-reduce each element against the others; leading monomials are
  // pairwise non-dividing, so they survive the reduction.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    minimal[i] = poly_monic(reduce_against(ord, minimal[i], others, lim));
  }
  return minimal;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord, int nvars,
                         const Limits& lim) {
  BuchbergerState st{ord, lim, {}, {}, {}};
  for (const auto& g : gens) {
    Polynomial h = poly_resort(ord, g);
    if (h.is_zero()) continue;
    if (h.width() != nvars) throw InputError("generator width does not match ambient ring");
    st.basis.push_back(poly_monic(h));
  }
  for (int j = 0; j < static_cast<int>(st.basis.size()); ++j) st.enqueue_pairs_for(j);

  while (!st.queue.empty()) {
    auto [deg, i, j] = *st.queue.begin();
    st.queue.erase(st.queue.begin());
    if (deg > lim.degree_cap) {
      throw ResourceError("degree cap " + std::to_string(lim.degree_cap) +
                          " exceeded by an S-pair lcm");
    }
    const Polynomial& gi = st.basis[static_cast<std::size_t>(i)];
    const Polynomial& gj = st.basis[static_cast<std::size_t>(j)];
    Monomial l = Monomial::lcm(gi.leading().mono, gj.leading().mono);
    if (gi.leading().mono.coprime(gj.leading().mono) || st.chain_criterion(i, j, l)) {
      st.mark_treated(i, j);
      continue;
    }
    Polynomial r = reduce_against(ord, s_polynomial(ord, gi, gj), st.basis, lim);
    st.mark_treated(i, j);
    if (!r.is_zero()) {
      st.basis.push_back(poly_monic(r));
      st.enqueue_pairs_for(static_cast<int>(st.basis.size()) - 1);
    }
  }

  GroebnerBasis out;
  out.order = ord;
  out.nvars = nvars;
  out.polys = minimalize_and_reduce(ord, std::move(st.basis), lim);
  return out;
}

}  // namespace sally
