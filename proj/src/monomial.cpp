#include "sally/monomial.hpp"

namespace sally {

Monomial::Monomial(int width) {
  if (width < 0 || width > kMaxVars) {
    throw InputError("variable count " + std::to_string(width) + " out of range (max " +
                     std::to_string(kMaxVars) + ")");
  }
  width_ = static_cast<std::uint8_t>(width);
}

Monomial Monomial::variable(int width, int index, int exponent) {
  Monomial m(width);
  return m.with_exponent(index, exponent);
}

Monomial Monomial::with_exponent(int i, int e) const {
  if (i < 0 || i >= width_) throw InputError("variable index out of range");
  if (e < 0) throw InputError("negative exponent");
  if (e > 255) throw ResourceError("exponent overflow (max 255)");
  Monomial m = *this;
  m.degree_ = static_cast<std::uint16_t>(m.degree_ - m.exp_[static_cast<std::size_t>(i)] + e);
  m.exp_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
  return m;
}

void Monomial::require_same_width(const Monomial& other) const {
  if (width_ != other.width_) throw InputError("mixed-ring operands (monomial widths differ)");
}

Monomial Monomial::times(const Monomial& other) const {
  require_same_width(other);
  Monomial m(width_);
  for (int i = 0; i < width_; ++i) {
    int e = exp_[static_cast<std::size_t>(i)] + other.exp_[static_cast<std::size_t>(i)];
    if (e > 255) throw ResourceError("exponent overflow (max 255)");
    m.exp_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
  }
  m.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_width(other);
  for (int i = 0; i < width_; ++i) {
    if (exp_[static_cast<std::size_t>(i)] > other.exp_[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

Monomial Monomial::divide_by(const Monomial& other) const {
  require_same_width(other);
  Monomial m(width_);
  int deg = 0;
  for (int i = 0; i < width_; ++i) {
    int e = exp_[static_cast<std::size_t>(i)] - other.exp_[static_cast<std::size_t>(i)];
    if (e < 0) throw InputError("non-exact monomial division");
    m.exp_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
    deg += e;
  }
  m.degree_ = static_cast<std::uint16_t>(deg);
  return m;
}

bool Monomial::coprime(const Monomial& other) const {
  require_same_width(other);
  for (int i = 0; i < width_; ++i) {
    if (exp_[static_cast<std::size_t>(i)] != 0 && other.exp_[static_cast<std::size_t>(i)] != 0) {
      return false;
    }
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  a.require_same_width(b);
  Monomial m(a.width_);
  int deg = 0;
  for (int i = 0; i < a.width_; ++i) {
    int e = std::max(a.exp_[static_cast<std::size_t>(i)], b.exp_[static_cast<std::size_t>(i)]);
    m.exp_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
    deg += e;
  }
  m.degree_ = static_cast<std::uint16_t>(deg);
  return m;
}

MonomialOrder MonomialOrder::elimination_block(int first_block) {
  if (first_block < 0) throw InputError("negative elimination block");
  return MonomialOrder(Kind::elim_block, first_block);
}

namespace {

int compare_lex(const Monomial& a, const Monomial& b, int from, int to) {
  for (int i = from; i < to; ++i) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i) ? 1 : -1;
  }
  return 0;
}

int compare_grevlex(const Monomial& a, const Monomial& b, int from, int to) {
  int da = 0, db = 0;
  for (int i = from; i < to; ++i) {
    da += a.exponent(i);
    db += b.exponent(i);
  }
  if (da != db) return da > db ? 1 : -1;
  // Equal degree: the monomial with the smaller exponent in the last
  // differing position is the larger one.
  for (int i = to - 1; i >= from; --i) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.width() != b.width()) throw InputError("mixed-ring operands (monomial widths differ)");
  const int w = a.width();
  switch (kind_) {
    case Kind::lex:
      return compare_lex(a, b, 0, w);
    case Kind::grevlex:
      return compare_grevlex(a, b, 0, w);
    case Kind::elim_block: {
      const int k = std::min(block_, w);
      if (int c = compare_lex(a, b, 0, k)) return c;
      return compare_grevlex(a, b, k, w);
    }
  }
  return 0;
}

std::string MonomialOrder::describe() const {
  switch (kind_) {
    case Kind::lex: return "lex";
    case Kind::grevlex: return "grevlex";
    case Kind::elim_block: return "elim(" + std::to_string(block_) + ")";
  }
  return "?";
}

}  // namespace sally
