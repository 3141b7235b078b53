#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "sally/errors.hpp"

namespace sally {

// Exponent vector with fixed width (the ambient variable count) and a cached
// total degree. Widths are capped at kMaxVars; exponents at 255.
class Monomial {
public:
  static constexpr int kMaxVars = 16;

  Monomial() = default;
  explicit Monomial(int width);

  static Monomial variable(int width, int index, int exponent = 1);

  int width() const { return width_; }
  int degree() const { return degree_; }
  int exponent(int i) const { return exp_[static_cast<std::size_t>(i)]; }
  bool is_unit() const { return degree_ == 0; }

  Monomial with_exponent(int i, int e) const;
  Monomial times(const Monomial& other) const;
  bool divides(const Monomial& other) const;      // this | other
  Monomial divide_by(const Monomial& other) const;  // exact; other | this required
  bool coprime(const Monomial& other) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const {
    return width_ == other.width_ && exp_ == other.exp_;
  }
  bool operator!=(const Monomial& other) const { return !(*this == other); }

private:
  void require_same_width(const Monomial& other) const;

  std::array<std::uint8_t, kMaxVars> exp_{};
  std::uint8_t width_ = 0;
  std::uint16_t degree_ = 0;
};

// Total, multiplicative well-orders on monomials. elimination_block(k) is lex
// on the first k variables, then grevlex on the rest.
class MonomialOrder {
public:
  enum class Kind { lex, grevlex, elim_block };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder elimination_block(int first_block);

  Kind kind() const { return kind_; }
  int block() const { return block_; }

  // -1, 0, +1 for a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder& other) const = default;
  // Strict weak order on MonomialOrder itself, for cache keys.
  bool operator<(const MonomialOrder& other) const {
    if (kind_ != other.kind_) return kind_ < other.kind_;
    return block_ < other.block_;
  }

  std::string describe() const;

private:
  MonomialOrder(Kind kind, int block) : kind_(kind), block_(block) {}
  Kind kind_;
  int block_;
};

}  // namespace sally
