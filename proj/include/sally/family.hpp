#pragma once

#include "sally/ringdoc.hpp"
#include "sally/sallymod.hpp"

namespace sally {

// Parameters of the example family: a d-dimensional Cohen-Macaulay local ring
// whose maximal ideal sits one step above the Elias-Valla boundary, with
// invariant c = ℓ(m³/Qm²) prescribed. c defaults to d.
struct FamilySpec {
  int m = 0;
  int d = 1;
  int c = 0;  // 0 means c = d

  int effective_c() const { return c == 0 ? d : c; }
};

// For c = d: variables {x_1..x_m, y, v_1..v_d, z_1..z_d} with relations
// (x_j, y)·(x_j, y, v_i), v_i v_j (i ≠ j), v_i³ − z_i y, ideals I = m and
// Q = (z_1..z_d). For c < d the c-dimensional document is built first and
// d − c fresh variables are adjoined to both I and Q.
RingDocument build_family(const FamilySpec& spec);

struct FamilyCheck {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct FamilyVerification {
  FamilySpec spec;
  std::vector<FamilyCheck> checks;
  bool all_passed = false;
  std::vector<std::string> warnings;
};

// Expected Hilbert series numerator of the family member (depends on m and c
// only): 1 + (m+c+1)z + Σ_{j=3}^{c+2} (−1)^{j−1} C(c+1, j−1) z^j.
std::vector<long long> family_expected_numerator(int m, int c);

// Runs the whole verification battery for one family member: lengths, Hilbert
// coefficients and series, Sally data, Ratliff-Rush gap, depth probe, and the
// classifier branch.
FamilyVerification verify_family(const FamilySpec& spec, const Field& field, int n_max = 8);

}  // namespace sally
