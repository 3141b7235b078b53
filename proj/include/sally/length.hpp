#pragma once

#include <optional>

#include "sally/ideal.hpp"

namespace sally {

// A certified length: the value together with the truncation level it was
// certified at (M^truncation_level lies inside the lifted ideal) and the
// witness level that reproduced the same count.
struct LengthValue {
  long long value = 0;
  int truncation_level = 0;
  int witness_level = 1;
};

// ℓ_A(A/J) for an m-primary J: the number of standard monomials of the lifted
// basis of J. Requires some power of every variable to reduce into J + a;
// otherwise throws NotZeroDimensionalError.
LengthValue artinian_length(const IdealHandle& j);

// ℓ_A(J/K) for K ⊆ J (containment checked, witness reported on failure).
// Falls back to truncated differences ℓ(A/(K+m^N)) − ℓ(A/(J+m^N)) at a
// stabilized N when the direct lengths are infinite.
LengthValue quotient_length(const IdealHandle& outer, const IdealHandle& inner);

// Brute-force lattice count of standard monomials of a monomial ideal; the
// independent oracle for artinian_length. Rejects non-monomial generators.
LengthValue monomial_length_oracle(int nvars, const std::vector<Monomial>& gens,
                                   std::optional<int> truncation = {});
LengthValue monomial_length_oracle(int nvars, const std::vector<Polynomial>& gens,
                                   std::optional<int> truncation = {});

// Krull dimension of the presented local ring, read off as the degree of the
// numerically fitted Hilbert-Samuel polynomial of the maximal-adic filtration.
// Computed once per ring and cached.
int krull_dimension(const RingPtr& ring);

}  // namespace sally
