#include "sally/parser.hpp"

#include <cctype>
#include <map>

namespace sally {

namespace {

enum class Tok { ident, number, plus, minus, star, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_ws();
    const int line = line_, col = col_;
    if (pos_ >= text_.size()) return {Tok::end, "", line, col};
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string id;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        id += text_[pos_];
        advance();
      }
      return {Tok::ident, id, line, col};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits += text_[pos_];
        advance();
      }
      return {Tok::number, digits, line, col};
    }
    advance();
    switch (c) {
      case '+': return {Tok::plus, "+", line, col};
      case '-': return {Tok::minus, "-", line, col};
      case '*': return {Tok::star, "*", line, col};
      case '^': return {Tok::caret, "^", line, col};
      case '(': return {Tok::lparen, "(", line, col};
      case ')': return {Tok::rparen, ")", line, col};
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
public:
  Parser(const std::string& text, const std::vector<std::string>& variables, const Field& field,
         const MonomialOrder& ord)
      : lexer_(text), vars_(variables), field_(field), ord_(ord) {
    for (std::size_t i = 0; i < variables.size(); ++i) var_index_[variables[i]] = static_cast<int>(i);
    cur_ = lexer_.next();
  }

  Polynomial parse() {
    Polynomial f = expression();
    if (cur_.kind != Tok::end) throw ParseError("trailing input", cur_.line, cur_.column);
    return f;
  }

private:
  void bump() { cur_ = lexer_.next(); }

  int width() const { return static_cast<int>(vars_.size()); }

  Polynomial expression() {
    bool negate = false;
    if (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
      negate = cur_.kind == Tok::minus;
      bump();
    }
    Polynomial acc = product();
    if (negate) acc = poly_neg(acc);
    while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
      bool minus = cur_.kind == Tok::minus;
      bump();
      Polynomial rhs = product();
      acc = minus ? poly_sub(ord_, acc, rhs) : poly_add(ord_, acc, rhs);
    }
    return acc;
  }

  Polynomial product() {
    Polynomial acc = power();
    while (cur_.kind == Tok::star) {
      bump();
      acc = poly_mul(ord_, acc, power());
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (cur_.kind != Tok::caret) return base;
    const Token caret = cur_;
    bump();
    if (cur_.kind != Tok::number) throw ParseError("expected integer exponent after '^'", cur_.line, cur_.column);
    if (cur_.text.size() > 4) throw ParseError("exponent too large", cur_.line, cur_.column);
    int e = std::stoi(cur_.text);
    if (e > 255) throw ParseError("exponent too large", cur_.line, cur_.column);
    bump();
    (void)caret;
    Polynomial acc = Polynomial::constant(Scalar::one(field_), width());
    for (int i = 0; i < e; ++i) acc = poly_mul(ord_, acc, base);
    return acc;
  }

  Polynomial atom() {
    switch (cur_.kind) {
      case Tok::ident: {
        auto it = var_index_.find(cur_.text);
        if (it == var_index_.end()) {
          throw ParseError("unknown variable '" + cur_.text + "'", cur_.line, cur_.column);
        }
        bump();
        return Polynomial::term(Monomial::variable(width(), it->second), Scalar::one(field_));
      }
      case Tok::number: {
        mpz_class z(cur_.text);
        bump();
        return Polynomial::constant(Scalar::of(field_, z), width());
      }
      case Tok::lparen: {
        bump();
        Polynomial f = expression();
        if (cur_.kind != Tok::rparen) throw ParseError("expected ')'", cur_.line, cur_.column);
        bump();
        return f;
      }
      default:
        throw ParseError("expected identifier, number, or '('", cur_.line, cur_.column);
    }
  }

  Lexer lexer_;
  const std::vector<std::string>& vars_;
  Field field_;
  MonomialOrder ord_;
  std::map<std::string, int> var_index_;
  Token cur_;
};

std::string monomial_string(const Monomial& m, const std::vector<std::string>& variables) {
  std::string out;
  for (int i = 0; i < m.width(); ++i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += variables[static_cast<std::size_t>(i)];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string coeff_magnitude(const Scalar& c) {
  std::string s = c.str();
  if (!s.empty() && s[0] == '-') s.erase(0, 1);
  return s;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables,
                            const Field& field, const MonomialOrder& ord) {
  return Parser(text, variables, field, ord).parse();
}

std::string to_string(const Polynomial& f, const std::vector<std::string>& variables) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool neg = t.coeff.sign() < 0;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mag = coeff_magnitude(t.coeff);
    std::string mono = monomial_string(t.mono, variables);
    if (mono.empty()) {
      out += mag;
    } else if (mag == "1") {
      out += mono;
    } else {
      out += mag + "*" + mono;
    }
  }
  return out;
}

std::string to_integer_string(const Polynomial& f, const std::vector<std::string>& variables) {
  if (f.is_zero()) return "0";
  if (!f.leading().coeff.field().is_rational()) return to_string(f, variables);
  mpz_class den = 1;
  for (const auto& t : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.rat().get_den().get_mpz_t());
  mpz_class gcd = 0;
  for (const auto& t : f.terms()) {
    mpz_class num = t.coeff.rat().get_num() * (den / t.coeff.rat().get_den());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), num.get_mpz_t());
  }
  if (gcd == 0) gcd = 1;
  mpq_class unit(den, gcd);
  unit.canonicalize();
  Polynomial scaled = poly_scale(f, Scalar::rational(unit.get_num(), unit.get_den()));
  if (scaled.leading().coeff.sign() < 0) scaled = poly_neg(scaled);
  return to_string(scaled, variables);
}

}  // namespace sally
