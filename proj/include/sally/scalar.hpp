#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "sally/errors.hpp"

namespace sally {

// Coefficient field descriptor: the rationals or a prime field F_p.
class Field {
public:
  enum class Kind { rational, prime };

  static Field rationals() { return Field(Kind::rational, 0); }
  static Field prime_field(std::uint64_t p);  // validates primality, p < 2^31
  static Field parse(const std::string& text);  // "rational" | "prime:<p>"

  Kind kind() const { return kind_; }
  std::uint64_t modulus() const { return p_; }
  bool is_rational() const { return kind_ == Kind::rational; }
  std::string describe() const;

  bool operator==(const Field& other) const = default;

private:
  Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

// A field element. Rationals are kept reduced with positive denominator
// (gmp canonical form); prime-field residues live in [0, p).
class Scalar {
public:
  Scalar() : field_(Field::rationals()) {}

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar of(const Field& f, long value);
  static Scalar of(const Field& f, const mpz_class& value);
  static Scalar rational(const mpz_class& num, const mpz_class& den);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar neg() const;
  Scalar add(const Scalar& other) const;
  Scalar sub(const Scalar& other) const;
  Scalar mul(const Scalar& other) const;
  Scalar div(const Scalar& other) const;
  Scalar inv() const;

  bool operator==(const Scalar& other) const;
  bool operator!=(const Scalar& other) const { return !(*this == other); }

  // Rational value; only meaningful over the rationals.
  const mpq_class& rat() const { return q_; }
  std::uint64_t residue() const { return r_; }

  // Sign of the printed representation (residues count as nonnegative).
  int sign() const;

  std::string str() const;

private:
  explicit Scalar(const Field& f) : field_(f) {}
  void require_same_field(const Scalar& other) const;

  Field field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

}  // namespace sally
