#include "diffnorm/text.hpp"

#include <cctype>
#include <optional>

#include "diffnorm/error.hpp"

namespace diffnorm {

std::string variable_name(int index, const NameList& names) {
  if (names.empty()) return "y" + std::to_string(index);
  if (index < 1 || index > static_cast<int>(names.size()))
    fail(ErrorCode::InvalidArgument, "no name for indeterminate " + std::to_string(index));
  return names[static_cast<std::size_t>(index - 1)];
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const NameList& names, bool time_mode)
      : text_(text), names_(names), domain_(time_mode ? Domain::RationalInT : Domain::Rational) {}

  DiffPoly run() {
    skip_space();
    if (at_end()) error("empty expression");
    DiffPoly p = expression();
    skip_space();
    if (!at_end()) error("unexpected '" + std::string(1, peek()) + "'");
    return p;
  }

 private:
  DiffPoly expression() {
    skip_space();
    bool negate = false;
    if (accept('+')) {
    } else if (accept('-')) {
      negate = true;
    }
    DiffPoly sum = term();
    if (negate) sum = -sum;
    while (true) {
      skip_space();
      if (accept('+')) {
        sum += term();
      } else if (accept('-')) {
        sum -= term();
      } else {
        return sum;
      }
    }
  }

  DiffPoly term() {
    DiffPoly product = unary();
    while (true) {
      skip_space();
      if (accept('*')) {
        product *= unary();
      } else if (peek() == '/') {
        const std::size_t at = pos_;
        ++pos_;
        const DiffPoly divisor = unary();
        if (!divisor.is_constant()) error_at(at, "division by a non-constant expression");
        if (divisor.is_zero()) error_at(at, "division by zero");
        product *= divisor.constant_term().inverse();
      } else {
        return product;
      }
    }
  }

  DiffPoly unary() {
    skip_space();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    DiffPoly base = primary();
    skip_space();
    if (accept('^')) {
      skip_space();
      long e = 0;
      if (accept('(')) {
        e = integer();
        skip_space();
        expect(')');
      } else {
        e = integer();
      }
      if (e < 0) error("negative exponent");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  DiffPoly primary() {
    skip_space();
    if (at_end()) error("unexpected end of input");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      Scalar value(mpq_class(std::string(text_.substr(start, pos_ - start))));
      if (domain_ == Domain::RationalInT) value = value.to_time_mode();
      return DiffPoly::constant(value);
    }
    if (accept('(')) {
      DiffPoly inner = expression();
      skip_space();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
    error("unexpected '" + std::string(1, c) + "'");
  }

  DiffPoly variable() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    if (name == "t" && domain_ == Domain::RationalInT) {
      return DiffPoly::constant(Scalar(RatFunc(RatPoly::t())));
    }
    const int index = lookup(name);
    if (index == 0) error_at(start, "unknown identifier '" + name + "'");

    int order = 0;
    while (!at_end() && peek() == '\'') {
      ++pos_;
      ++order;
    }
    if (order > 3) error_at(start, "more than three primes; use the x^(k) form");
    if (order == 0 && pos_ + 1 < text_.size() && peek() == '^' && text_[pos_ + 1] == '(') {
      const std::size_t at = pos_;
      pos_ += 2;
      skip_space();
      const long k = integer();
      skip_space();
      expect(')');
      if (k < 0)
        throw ParseError(ErrorCode::NegativeDerivativeOrder, at, "negative derivative order at position " + std::to_string(at));
      order = static_cast<int>(k);
    }
    return DiffPoly::var(index, order, domain_);
  }

  int lookup(const std::string& name) const {
    if (names_.empty()) {
      if (name.size() < 2 || name[0] != 'y' || name[1] == '0') return 0;
      for (std::size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return 0;
      return std::stoi(name.substr(1));
    }
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i) + 1;
    return 0;
  }

  long integer() {
    const std::size_t start = pos_;
    bool negative = false;
    if (accept('-')) negative = true;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) error_at(start, "expected an integer");
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000) error_at(start, "integer too large");
      ++pos_;
    }
    return negative ? -value : value;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool accept(char c) {
    if (peek() != c || at_end()) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error("expected '" + std::string(1, c) + "'");
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void error(const std::string& what) const { error_at(pos_, what); }
  [[noreturn]] void error_at(std::size_t at, const std::string& what) const {
    throw ParseError(ErrorCode::SyntaxError, at, what + " at position " + std::to_string(at));
  }

  std::string_view text_;
  const NameList& names_;
  Domain domain_;
  std::size_t pos_ = 0;
};

std::string power(const std::string& base, bool wrap, int e) {
  if (e == 1) return base;
  return (wrap ? "(" + base + ")" : base) + "^" + std::to_string(e);
}

std::string monomial_text(const Monomial& m, const NameList& names) {
  std::string out;
  const auto factors = m.factors();
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    if (!out.empty()) out += "*";
    out += power(format_var(it->first, names), it->first.order > 0, it->second);
  }
  return out;
}

}  // namespace

std::string format_var(const DerivVar& v, const NameList& names) {
  std::string base = variable_name(v.index, names);
  if (v.order <= 3) return base + std::string(static_cast<std::size_t>(v.order), '\'');
  return base + "^(" + std::to_string(v.order) + ")";
}

DiffPoly parse_diffpoly(std::string_view text, const NameList& names, bool time_mode) {
  return Parser(text, names, time_mode).run();
}

std::string format_diffpoly(const DiffPoly& p, const NameList& names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const std::string mono = monomial_text(m, names);
    std::optional<mpq_class> rational;
    if (c.domain() == Domain::Rational) rational = c.rational();
    if (c.domain() == Domain::RationalInT && c.rational_in_t().is_constant())
      rational = c.rational_in_t().num().coeff(0);

    if (rational) {
      const bool neg = *rational < 0;
      const mpq_class mag = abs(*rational);
      out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (m.is_unit()) {
        out += mag.get_str();
      } else {
        if (mag != 1) out += mag.get_str() + "*";
        out += mono;
      }
      continue;
    }
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (!m.is_unit()) out += "*" + mono;
  }
  return out;
}

}  // namespace diffnorm
