#include "sally/scalar.hpp"

namespace sally {
namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t q = 3; q * q <= p; q += 2) {
    if (p % q == 0) return false;
  }
  return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return acc;
}

}  // namespace

Field Field::prime_field(std::uint64_t p) {
  if (p >= (1ull << 31)) throw InputError("prime modulus too large (must be < 2^31)");
  if (!is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
  return Field(Kind::prime, p);
}

Field Field::parse(const std::string& text) {
  if (text == "rational") return rationals();
  const std::string prefix = "prime:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string digits = text.substr(prefix.size());
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("bad field descriptor '" + text + "'");
    }
    return prime_field(std::stoull(digits));
  }
  throw InputError("bad field descriptor '" + text + "' (expected \"rational\" or \"prime:<p>\")");
}

std::string Field::describe() const {
  return is_rational() ? "rational" : "prime:" + std::to_string(p_);
}

Scalar Scalar::zero(const Field& f) { return Scalar(f); }

Scalar Scalar::one(const Field& f) { return of(f, 1); }

Scalar Scalar::of(const Field& f, long value) {
  Scalar s(f);
  if (f.is_rational()) {
    s.q_ = value;
  } else {
    long m = value % static_cast<long>(f.modulus());
    if (m < 0) m += static_cast<long>(f.modulus());
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Scalar::of(const Field& f, const mpz_class& value) {
  Scalar s(f);
  if (f.is_rational()) {
    s.q_ = value;
  } else {
    mpz_class m = value % mpz_class(static_cast<unsigned long>(f.modulus()));
    if (m < 0) m += static_cast<unsigned long>(f.modulus());
    s.r_ = mpz_get_ui(m.get_mpz_t());
  }
  return s;
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InputError("zero denominator");
  Scalar s(Field::rationals());
  s.q_ = mpq_class(num, den);
  s.q_.canonicalize();
  return s;
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : r_ == 1;
}

void Scalar::require_same_field(const Scalar& other) const {
  if (!(field_ == other.field_)) throw InputError("mixed-field operands");
}

Scalar Scalar::neg() const {
  Scalar s(field_);
  if (field_.is_rational()) {
    s.q_ = -q_;
  } else {
    s.r_ = r_ == 0 ? 0 : field_.modulus() - r_;
  }
  return s;
}

Scalar Scalar::add(const Scalar& other) const {
  require_same_field(other);
  Scalar s(field_);
  if (field_.is_rational()) {
    s.q_ = q_ + other.q_;
  } else {
    s.r_ = (r_ + other.r_) % field_.modulus();
  }
  return s;
}

Scalar Scalar::sub(const Scalar& other) const { return add(other.neg()); }

Scalar Scalar::mul(const Scalar& other) const {
  require_same_field(other);
  Scalar s(field_);
  if (field_.is_rational()) {
    s.q_ = q_ * other.q_;
  } else {
    s.r_ = r_ * other.r_ % field_.modulus();
  }
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw InputError("division by zero");
  Scalar s(field_);
  if (field_.is_rational()) {
    s.q_ = 1 / q_;
  } else {
    s.r_ = mod_pow(r_, field_.modulus() - 2, field_.modulus());
  }
  return s;
}

Scalar Scalar::div(const Scalar& other) const {
  require_same_field(other);
  return mul(other.inv());
}

bool Scalar::operator==(const Scalar& other) const {
  if (!(field_ == other.field_)) return false;
  return field_.is_rational() ? q_ == other.q_ : r_ == other.r_;
}

int Scalar::sign() const {
  if (field_.is_rational()) return sgn(q_);
  return r_ == 0 ? 0 : 1;
}

std::string Scalar::str() const {
  if (field_.is_rational()) return q_.get_str();
  return std::to_string(r_);
}

}  // namespace sally
