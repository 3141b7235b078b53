#pragma once

#include <functional>
#include <map>
#include <string>

#include "sally/hilbert.hpp"

namespace sally {

// Component lengths of the Sally module S = ⊕ I^{n+1}/Q^n I and of the
// two-step filtration 0 → L → S → C → 0, plus the reduction bookkeeping.
struct SallyTable {
  int n_max = 0;
  std::vector<long long> s_lengths;  // ℓ(S_n), n = 1..n_max
  std::vector<long long> l_lengths;  // ℓ(L_n) = ℓ(Q^{n-1}I² / Q^n I)
  std::vector<long long> c_lengths;  // ℓ(C_n) = ℓ(I^{n+1} / Q^{n-1}I²), zero at n = 1
  long long sigma = 0;               // ℓ(I²/QI)
  long long c = 0;                   // ℓ(I³/QI²)
  bool q_cap_i2_eq_qi = false;
  bool i2_eq_qi = false;
  bool i3_eq_qi2 = false;
  bool i4_eq_qi3 = false;
  int reduction_number = -1;  // least r with I^{r+1} = Q I^r
};

SallyTable sally_table(const IdealHandle& ideal, const IdealHandle& reduction, int n_max);

// ℓ(C^(i)_n) = ℓ(I^{n+1}/Q^{n-i+1} I^i) for n = i..n_max.
std::vector<long long> vaz_pinto_lengths(const IdealHandle& ideal, const IdealHandle& reduction,
                                         int level, int n_max);

bool check_q_cap_i2(const IdealHandle& ideal, const IdealHandle& reduction);

// Ratliff-Rush closure: the stabilized union of (I^{n+1} : I^n). Returned once
// two consecutive steps agree; each step must contain the previous.
IdealHandle ratliff_rush(const IdealHandle& ideal, int cap = 8);

struct DepthProbe {
  bool positive_depth = false;  // no Ratliff-Rush gap among I, I², ..., I^N
  int rr_gap_at = 0;            // first n with a gap; 0 when none found
  int vv_depth_lower_bound = 0;
  int certified_up_to = 0;
};

DepthProbe depth_probe(const IdealHandle& ideal, const IdealHandle& reduction, int n_max);

struct DecompositionCheck {
  bool passed = false;
  int first_failure = -1;
  long long expected = 0;
  long long actual = 0;
  int checked_up_to = 0;
};

// ℓ(A/I^{n+1}) = e₀C(n+d,d) − (e₀−ℓ(A/I))C(n+d−1,d−1) − σC(n+d−2,d−1) − ℓ(C_n)
// for 0 ≤ n ≤ n_max, where σ = ℓ(I²/QI) and the σ term is ℓ(L_n). For d ≥ 2
// (and for n ≥ 1 when d = 1) this agrees with the split form
// −(e₀−ℓ+σ)C(n+d−1,d−1) + σC(n+d−2,d−2). Requires Q ∩ I² = QI.
DecompositionCheck decomposition_check(const IdealHandle& ideal, const IdealHandle& reduction,
                                       int n_max);

struct E1FormulaCheck {
  long long e0 = 0;
  long long e1 = 0;
  long long colength = 0;  // ℓ(A/I)
  long long sigma = 0;     // ℓ(I²/QI)
  long long gap = 0;       // e₁ − (e₀ − ℓ(A/I) + σ)
  bool gap_nonnegative = false;
  bool i3_eq_qi2 = false;
  bool gap_zero_iff_i3 = false;
  long long sigma_identity_rhs = 0;  // e₀ + (d−1)ℓ(A/I) − ℓ(I/I²)
  bool sigma_identity_holds = false;
};

E1FormulaCheck e1_formula_check(const IdealHandle& ideal, const IdealHandle& reduction);

// Branch labels for the classifier, by the boundary the ideal sits on:
//   northcott-equality   e₁ = e₀ − ℓ(A/I)
//   northcott-plus-1     e₁ = e₀ − ℓ(A/I) + 1
//   ev-equality          e₁ = e₀ − ℓ(A/I) + σ   (with Q ∩ I² = QI)
//   ev-plus-1            e₁ = e₀ − ℓ(A/I) + σ + 1, subcases by c = ℓ(I³/QI²)
//   northcott-plus-2     e₁ = e₀ − ℓ(A/I) + 2 with I³ ≠ QI²
//   northcott-plus-3     e₁ = e₀ − ℓ(A/I) + 3 with σ = 2
struct ClassificationReport {
  int dim = 0;
  long long colength = 0;
  std::vector<long long> e;
  std::vector<long long> numerator;
  long long sigma = 0;
  long long c = 0;
  long long northcott_gap = 0;  // e₁ − (e₀ − ℓ(A/I))
  long long ev_gap = 0;         // e₁ − (e₀ − ℓ(A/I) + σ)
  bool q_cap_i2_eq_qi = false;
  bool i2_eq_qi = false;
  bool i3_eq_qi2 = false;
  bool i4_eq_qi3 = false;
  int reduction_number = -1;
  std::string branch;
  std::string subcase;  // ev-plus-1: "c=1<d" | "1<c<d" | "c=d" | "indeterminate"
  std::vector<long long> predicted_e;
  std::vector<long long> predicted_numerator;
  bool match = false;
  int postulation = -1;
  std::vector<std::string> assumed;
  std::vector<std::string> warnings;
  // Optional bounded check of the Ratliff-Rush filtration condition
  // (ℓ(Ĩ²/I²) = 1 and Ĩ^{n+1} = QĨ^n for 2 ≤ n ≤ cap) in the c = d case.
  bool rr_condition_checked = false;
  long long rr_square_gap = -1;
  bool rr_filtration_stable = false;
  int rr_checked_up_to = 0;
};

ClassificationReport classify(const IdealHandle& ideal, const IdealHandle& reduction, int n_max,
                              bool check_rr_filtration = false);

// A multiplicative filtration given by a rule n ↦ ideal, with memoization and
// invariant spot checks (K₀ = A, descending, K_m·K_n ⊆ K_{m+n}).
class Filtration {
public:
  Filtration(RingPtr ring, std::function<IdealHandle(int)> rule);
  const IdealHandle& at(int n);
  void spot_check(int n_max);

private:
  RingPtr ring_;
  std::function<IdealHandle(int)> rule_;
  std::map<int, IdealHandle> memo_;
};

}  // namespace sally
