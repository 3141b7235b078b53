#pragma once

#include <deque>
#include <memory>
#include <string>
#include <vector>

#include "sally/ring.hpp"

namespace sally {

// An ideal of A = D/a, held as a finite generator list of lifts in D. The
// reduced Groebner basis of (generators + relations) is a write-once shared
// cache, so handles are cheap to copy and canonical to compare.
class IdealHandle {
public:
  IdealHandle(RingPtr ring, std::vector<Polynomial> gens);

  // Generator list normalized against the relation basis: normal forms taken,
  // zeros dropped, duplicates and divisible monomial generators pruned.
  static IdealHandle reduced(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const GroebnerBasis& lifted_basis() const;

  bool is_zero() const;
  bool is_unit() const;

private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

IdealHandle zero_ideal(RingPtr ring);
IdealHandle unit_ideal(RingPtr ring);
IdealHandle maximal_ideal(RingPtr ring);

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_power(const IdealHandle& a, int k);  // k >= 0; a^0 is the unit ideal

// J ∩ K via the one-new-variable trick (t·J + (1−t)·K, eliminate t), with the
// ring relations included on both sides.
IdealHandle ideal_intersect(const IdealHandle& a, const IdealHandle& b);

// (J :_A K), computed as the intersection over generators f of K of the
// element colons (J : f) = (1/f)·(J ∩ (f)).
IdealHandle ideal_colon(const IdealHandle& j, const IdealHandle& k);

// Generators of J ∩ k[remaining variables], via an elimination-block order.
IdealHandle eliminate(const IdealHandle& j, const std::vector<std::string>& drop);

bool ideal_member(const IdealHandle& j, const Polynomial& f);
bool ideal_contains(const IdealHandle& outer, const IdealHandle& inner);
bool ideal_equal(const IdealHandle& a, const IdealHandle& b);

// Memoized powers of a fixed base ideal. A deque keeps references returned by
// power() stable while later powers are appended.
class PowerCache {
public:
  explicit PowerCache(IdealHandle base);
  const IdealHandle& power(int k);
  const IdealHandle& base() const { return base_; }

private:
  IdealHandle base_;
  std::deque<IdealHandle> powers_;
};

}  // namespace sally
