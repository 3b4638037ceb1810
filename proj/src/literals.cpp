#include "petit/literals.hpp"

#include <cctype>
#include <sstream>

#include "petit/error.hpp"

namespace petit {

namespace {

struct Token {
  enum class Kind { integer, symbol, name, end } kind;
  std::string text;
  int64_t value = 0;
  size_t pos = 0;
};

[[noreturn]] void parse_error(size_t pos, const std::string& msg) {
  std::ostringstream os;
  os << "parse error at column " << pos + 1 << ": " << msg;
  throw InputError(os.str());
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i;
      int64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        int64_t digit = text[i] - '0';
        if (v > (INT64_MAX - digit) / 10) parse_error(start, "integer literal overflows");
        v = v * 10 + digit;
        ++i;
      }
      out.push_back({Token::Kind::integer, std::string(text.substr(start, i - start)), v, start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = i;
      while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Token::Kind::name, std::string(text.substr(start, i - start)), 0, start});
      continue;
    }
    if (std::string("+-*/^()").find(c) != std::string::npos) {
      out.push_back({Token::Kind::symbol, std::string(1, c), 0, i});
      ++i;
      continue;
    }
    parse_error(i, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Token::Kind::end, "", 0, text.size()});
  return out;
}

// Recursive-descent evaluator producing skew polynomials. Field constants are
// degree-0 polynomials, so ordinary arithmetic applies throughout.
class PolyParser {
 public:
  PolyParser(const GaloisExtension& ext, std::string_view text)
      : ext_(ext), toks_(tokenize(text)) {}

  SkewPoly parse() {
    SkewPoly v = expr();
    if (cur().kind != Token::Kind::end) parse_error(cur().pos, "trailing input");
    return v;
  }

 private:
  const Token& cur() const { return toks_[idx_]; }
  void advance() { ++idx_; }
  bool accept_symbol(const char* s) {
    if (cur().kind == Token::Kind::symbol && cur().text == s) {
      advance();
      return true;
    }
    return false;
  }
  void expect_symbol(const char* s, const char* what) {
    if (!accept_symbol(s)) parse_error(cur().pos, std::string("expected ") + what);
  }

  SkewPoly expr() {
    SkewPoly v = term();
    while (true) {
      if (accept_symbol("+"))
        v = v + term();
      else if (accept_symbol("-"))
        v = v - term();
      else
        return v;
    }
  }

  SkewPoly term() {
    SkewPoly v = factor();
    while (true) {
      if (accept_symbol("*")) {
        v = v * factor();
      } else if (accept_symbol("/")) {
        size_t at = cur().pos;
        SkewPoly d = factor();
        if (d.is_zero()) parse_error(at, "division by zero");
        if (d.degree() && *d.degree() > 0)
          parse_error(at, "division only by field constants");
        v = d.coeff(0).inverse() * v;
      } else {
        return v;
      }
    }
  }

  SkewPoly factor() {
    if (accept_symbol("-")) return -factor();
    return power();
  }

  SkewPoly power() {
    SkewPoly base = atom();
    if (!accept_symbol("^")) return base;
    bool negexp = accept_symbol("-");
    if (cur().kind != Token::Kind::integer)
      parse_error(cur().pos, "expected an integer exponent");
    int64_t e = cur().value;
    size_t at = cur().pos;
    advance();
    if (negexp) {
      if (base.degree() && *base.degree() > 0)
        parse_error(at, "negative exponents only on field constants");
      return SkewPoly::constant(base.coeff(0).pow(-e));
    }
    if (e > 64) parse_error(at, "exponent too large");
    SkewPoly acc = SkewPoly::one(ext_);
    for (int64_t s = 0; s < e; ++s) acc = acc * base;
    return acc;
  }

  SkewPoly atom() {
    const Token& tk = cur();
    if (tk.kind == Token::Kind::integer) {
      advance();
      return SkewPoly::constant(ext_.from_integer(tk.value));
    }
    if (accept_symbol("(")) {
      SkewPoly v = expr();
      expect_symbol(")", "')'");
      return v;
    }
    if (tk.kind == Token::Kind::name) {
      if (tk.text == "t") {
        advance();
        return SkewPoly::t_power(ext_, 1);
      }
      if (tk.text == "g") {
        if (!ext_.is_finite())
          parse_error(tk.pos, "'g' denotes the finite-field generator");
        advance();
        return SkewPoly::constant(ext_.generator());
      }
      if (tk.text == "i") {
        if (ext_.is_finite() || ext_.base_field() != BaseField::gaussian_rationals)
          parse_error(tk.pos, "'i' requires the gaussian-rationals base");
        advance();
        return SkewPoly::constant(ext_.from_base(Gaussian(Rational(0), Rational(1))));
      }
      if (tk.text == "sqrt") {
        if (ext_.is_finite())
          parse_error(tk.pos, "'sqrt(b)' requires the quadratic backend");
        advance();
        expect_symbol("(", "'(' after sqrt");
        if (cur().kind != Token::Kind::name || cur().text != "b")
          parse_error(cur().pos, "only 'sqrt(b)' is supported");
        advance();
        expect_symbol(")", "')'");
        return SkewPoly::constant(ext_.sqrt_b());
      }
      parse_error(tk.pos, "unknown name '" + tk.text + "'");
    }
    parse_error(tk.pos, "expected a value");
  }

  GaloisExtension ext_;
  std::vector<Token> toks_;
  size_t idx_ = 0;
};

// Same grammar restricted to Q(i) scalars.
class GaussianParser {
 public:
  GaussianParser(std::string_view text, bool allow_imaginary)
      : toks_(tokenize(text)), allow_im_(allow_imaginary) {}

  Gaussian parse() {
    Gaussian v = expr();
    if (cur().kind != Token::Kind::end) parse_error(cur().pos, "trailing input");
    return v;
  }

 private:
  const Token& cur() const { return toks_[idx_]; }
  void advance() { ++idx_; }
  bool accept_symbol(const char* s) {
    if (cur().kind == Token::Kind::symbol && cur().text == s) {
      advance();
      return true;
    }
    return false;
  }

  Gaussian expr() {
    Gaussian v = term();
    while (true) {
      if (accept_symbol("+"))
        v = v + term();
      else if (accept_symbol("-"))
        v = v - term();
      else
        return v;
    }
  }
  Gaussian term() {
    Gaussian v = factor();
    while (true) {
      if (accept_symbol("*"))
        v = v * factor();
      else if (accept_symbol("/")) {
        size_t at = cur().pos;
        Gaussian d = factor();
        if (d.is_zero()) parse_error(at, "division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }
  Gaussian factor() {
    if (accept_symbol("-")) return -factor();
    Gaussian base = atom();
    if (accept_symbol("^")) {
      bool negexp = accept_symbol("-");
      if (cur().kind != Token::Kind::integer)
        parse_error(cur().pos, "expected an integer exponent");
      int64_t e = cur().value;
      advance();
      return base.pow(negexp ? -e : e);
    }
    return base;
  }
  Gaussian atom() {
    const Token& tk = cur();
    if (tk.kind == Token::Kind::integer) {
      advance();
      return Gaussian(Rational(tk.value));
    }
    if (accept_symbol("(")) {
      Gaussian v = expr();
      if (!accept_symbol(")")) parse_error(cur().pos, "expected ')'");
      return v;
    }
    if (tk.kind == Token::Kind::name && tk.text == "i") {
      if (!allow_im_) parse_error(tk.pos, "'i' is not allowed here");
      advance();
      return Gaussian(Rational(0), Rational(1));
    }
    parse_error(tk.pos, "expected a rational value");
  }

  std::vector<Token> toks_;
  size_t idx_ = 0;
  bool allow_im_;
};

}  // namespace

SkewPoly parse_skew_poly(const GaloisExtension& ext, std::string_view text) {
  return PolyParser(ext, text).parse();
}

FieldElement parse_field_element(const GaloisExtension& ext, std::string_view text) {
  SkewPoly v = parse_skew_poly(ext, text);
  if (v.degree() && *v.degree() > 0)
    throw InputError("expected a field element, got a polynomial in t");
  return v.coeff(0);
}

Gaussian parse_gaussian(std::string_view text, bool allow_imaginary) {
  return GaussianParser(text, allow_imaginary).parse();
}

}  // namespace petit
