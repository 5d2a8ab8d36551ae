#include "gres/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "gres/error.hpp"

namespace gres {

namespace {

constexpr std::uint32_t kMaxExponent = 10000;

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// 0-based index -> 1-based byte position.
std::size_t pos1(std::size_t index) { return index + 1; }

[[noreturn]] void fail(ErrorKind kind, const std::string& msg, std::size_t index) {
  throw Error(kind, msg + " at position " + std::to_string(pos1(index)), pos1(index));
}

// Reads digits ('/' digits)? starting at i; returns the rational value.
mpq_class read_rational(std::string_view text, std::size_t& i) {
  const std::size_t start = i;
  while (i < text.size() && is_digit(text[i])) ++i;
  if (i == start) fail(ErrorKind::syntax_error, "expected a numeral", start);
  mpz_class num(std::string(text.substr(start, i - start)));
  mpz_class den = 1;
  if (i < text.size() && text[i] == '/') {
    const std::size_t dstart = ++i;
    while (i < text.size() && is_digit(text[i])) ++i;
    if (i == dstart) fail(ErrorKind::syntax_error, "malformed numeral", start);
    den = mpz_class(std::string(text.substr(dstart, i - dstart)));
    if (den == 0) fail(ErrorKind::zero_denominator, "zero denominator", start);
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

// 'i' at index i that is not the prefix of a longer identifier.
bool imaginary_unit_at(std::string_view text, std::size_t i) {
  return i < text.size() && text[i] == 'i' && (i + 1 == text.size() || !is_ident_char(text[i + 1]));
}

enum class Tok { number, ident, plus, minus, star, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::size_t index;  // 0-based start
  std::string_view text;
  Scalar value;     // number tokens
  bool integral = false;  // plain integer literal (usable as an exponent)
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    const std::size_t start = pos_;
    if (pos_ == text_.size()) return {Tok::end, start, {}, {}};
    const char c = text_[pos_];
    if (is_digit(c)) {
      mpq_class q = read_rational(text_, pos_);
      const bool had_slash = text_.substr(start, pos_ - start).find('/') != std::string_view::npos;
      Token t{Tok::number, start, {}, Scalar(q), !had_slash};
      if (imaginary_unit_at(text_, pos_)) {
        ++pos_;
        t.value = Scalar(0, q);
        t.integral = false;
      }
      t.text = text_.substr(start, pos_ - start);
      return t;
    }
    if (is_ident_start(c)) {
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      return {Tok::ident, start, text_.substr(start, pos_ - start), {}};
    }
    ++pos_;
    switch (c) {
      case '+': return {Tok::plus, start, text_.substr(start, 1), {}};
      case '-': return {Tok::minus, start, text_.substr(start, 1), {}};
      case '*': return {Tok::star, start, text_.substr(start, 1), {}};
      case '^': return {Tok::caret, start, text_.substr(start, 1), {}};
      case '(': return {Tok::lparen, start, text_.substr(start, 1), {}};
      case ')': return {Tok::rparen, start, text_.substr(start, 1), {}};
      default: break;
    }
    fail(ErrorKind::syntax_error, std::string("unexpected character '") + c + "'", start);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class PolyParser {
 public:
  PolyParser(std::string_view text, std::span<const std::string> vars)
      : lexer_(text), vars_(vars), tok_(lexer_.next()) {}

  MultiPoly parse() {
    if (tok_.kind == Tok::end) fail(ErrorKind::syntax_error, "empty expression", tok_.index);
    MultiPoly p = expr();
    if (tok_.kind != Tok::end) {
      if (tok_.kind == Tok::ident || tok_.kind == Tok::number || tok_.kind == Tok::lparen) {
        fail(ErrorKind::syntax_error, "missing operator (implicit multiplication is not allowed)", tok_.index);
      }
      fail(ErrorKind::syntax_error, "unexpected '" + std::string(tok_.text) + "'", tok_.index);
    }
    return p;
  }

 private:
  void advance() { tok_ = lexer_.next(); }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (tok_.kind == Tok::plus || tok_.kind == Tok::minus) {
      const bool minus = tok_.kind == Tok::minus;
      advance();
      MultiPoly rhs = term();
      if (minus) acc -= rhs; else acc += rhs;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (tok_.kind == Tok::star) {
      advance();
      acc = acc * unary();
    }
    return acc;
  }

  MultiPoly unary() {
    if (tok_.kind == Tok::minus) {
      advance();
      return -unary();
    }
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (tok_.kind != Tok::caret) return base;
    advance();
    if (tok_.kind == Tok::minus) fail(ErrorKind::negative_exponent, "negative exponent", tok_.index);
    if (tok_.kind != Tok::number || !tok_.integral) {
      fail(ErrorKind::syntax_error, "exponent must be a non-negative integer", tok_.index);
    }
    if (tok_.value.re() > kMaxExponent) fail(ErrorKind::syntax_error, "exponent too large", tok_.index);
    const auto e = static_cast<unsigned>(tok_.value.re().get_num().get_ui());
    advance();
    if (tok_.kind == Tok::caret) fail(ErrorKind::syntax_error, "chained exponents need parentheses", tok_.index);
    return base.pow(e);
  }

  MultiPoly primary() {
    const Token t = tok_;
    switch (t.kind) {
      case Tok::number:
        advance();
        return MultiPoly::constant(vars_.size(), t.value);
      case Tok::ident: {
        advance();
        if (t.text == "i") return MultiPoly::constant(vars_.size(), Scalar::i());
        auto it = std::find(vars_.begin(), vars_.end(), t.text);
        if (it == vars_.end()) {
          fail(ErrorKind::unknown_identifier, "unknown identifier '" + std::string(t.text) + "'", t.index);
        }
        return MultiPoly::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin()));
      }
      case Tok::lparen: {
        advance();
        MultiPoly inner = expr();
        if (tok_.kind != Tok::rparen) fail(ErrorKind::syntax_error, "expected ')'", tok_.index);
        advance();
        return inner;
      }
      case Tok::end:
        fail(ErrorKind::syntax_error, "unexpected end of input", t.index);
      default:
        fail(ErrorKind::syntax_error, "unexpected '" + std::string(t.text) + "'", t.index);
    }
  }

  Lexer lexer_;
  std::span<const std::string> vars_;
  Token tok_;
};

void skip_ws(std::string_view text, std::size_t& i) {
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])) != 0) ++i;
}

// Parses "rational? '*'? 'i'" or just "i"; returns the coefficient.
std::optional<mpq_class> read_imaginary(std::string_view text, std::size_t& i) {
  if (imaginary_unit_at(text, i)) {
    ++i;
    return mpq_class(1);
  }
  if (i >= text.size() || !is_digit(text[i])) return std::nullopt;
  std::size_t j = i;
  mpq_class q = read_rational(text, j);
  std::size_t k = j;
  if (k < text.size() && text[k] == '*') ++k;
  if (!imaginary_unit_at(text, k)) return std::nullopt;
  i = k + 1;
  return q;
}

}  // namespace

std::vector<std::string> default_variable_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) names.push_back("s" + std::to_string(k));
  return names;
}

void validate_variable_names(std::span<const std::string> names) {
  std::set<std::string_view> seen;
  for (const auto& name : names) {
    const bool ident = !name.empty() && is_ident_start(name[0]) &&
                       std::all_of(name.begin(), name.end(), is_ident_char);
    if (!ident) throw Error(ErrorKind::invalid_argument, "invalid variable name '" + name + "'");
    if (name == "i") throw Error(ErrorKind::invalid_argument, "'i' is reserved for the imaginary unit");
    if (!seen.insert(name).second) throw Error(ErrorKind::invalid_argument, "duplicate variable name '" + name + "'");
  }
}

Scalar parse_scalar(std::string_view text) {
  std::size_t i = 0;
  skip_ws(text, i);
  bool negative = false;
  if (i < text.size() && text[i] == '-') {
    negative = true;
    ++i;
    skip_ws(text, i);
  }
  Scalar value;
  if (auto im = read_imaginary(text, i)) {
    value = Scalar(0, negative ? mpq_class(-*im) : *im);
  } else {
    if (i >= text.size() || !is_digit(text[i])) fail(ErrorKind::syntax_error, "malformed numeral", i);
    mpq_class re = read_rational(text, i);
    value = Scalar(negative ? mpq_class(-re) : re);
    skip_ws(text, i);
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      const bool minus = text[i] == '-';
      ++i;
      skip_ws(text, i);
      const std::size_t at = i;
      auto im = read_imaginary(text, i);
      if (!im) fail(ErrorKind::syntax_error, "expected an imaginary part", at);
      value += Scalar(0, minus ? mpq_class(-*im) : *im);
    }
  }
  skip_ws(text, i);
  if (i != text.size()) fail(ErrorKind::syntax_error, "trailing characters in scalar", i);
  return value;
}

MultiPoly parse_poly(const PolySource& src) { return parse_poly(src.text, src.variables); }

MultiPoly parse_poly(std::string_view text, std::span<const std::string> variables) {
  validate_variable_names(variables);
  return PolyParser(text, variables).parse();
}

std::string format_monomial(const Monomial& m, std::span<const std::string> names) {
  std::string out;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[j];
    if (m[j] > 1) out += '^' + std::to_string(m[j]);
  }
  return out.empty() ? "1" : out;
}

std::string format_poly(const MultiPoly& p, const MonomialOrder& order, std::span<const std::string> names) {
  if (names.size() != p.nvars()) throw Error(ErrorKind::arity_mismatch, "wrong number of variable names");
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Scalar>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool negative = sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
    const Scalar mag = negative ? -c : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string coeff;
    if (!mag.is_real() && sgn(mag.re()) != 0) {
      coeff = "(" + mag.to_string() + ")";
    } else {
      coeff = mag.to_string();
    }
    if (m.is_one()) {
      out += coeff;
    } else {
      if (!mag.is_one()) out += coeff + "*";
      out += format_monomial(m, names);
    }
  }
  return out;
}

}  // namespace gres
