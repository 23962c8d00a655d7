#include "cliffroot/parser.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace cliffroot {

ParseError::ParseError(const std::string &what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
public:
  Parser(std::string_view text, Signature sig) : s_(text), sig_(sig), out_(sig) {}

  Multivector run() {
    skip();
    if (at_end())
      throw ParseError("empty expression", pos_);
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (match_sign(sign)) {
        skip();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      term(sign);
      first = false;
      skip();
    }
    return out_;
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
  Signature sig_;
  Multivector out_;

  bool at_end() const { return pos_ >= s_.size(); }
  char peek(std::size_t k = 0) const { return pos_ + k < s_.size() ? s_[pos_ + k] : '\0'; }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }

  bool match_sign(int &sign) {
    if (peek() == '+') {
      ++pos_;
      return true;
    }
    if (peek() == '-') {
      sign = -1;
      ++pos_;
      return true;
    }
    // U+2212 MINUS SIGN
    if (s_.substr(pos_, 3) == "\xE2\x88\x92") {
      sign = -1;
      pos_ += 3;
      return true;
    }
    return false;
  }

  void term(int sign) {
    const std::size_t start = pos_;
    double coef = 1.0;
    bool has_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
      coef = number();
      has_coef = true;
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        const std::size_t at = pos_;
        const double den = number();
        if (den == 0.0)
          throw ParseError("division by zero", at);
        coef /= den;
        skip();
      }
    }
    bool star = false;
    if (peek() == '*') {
      ++pos_;
      star = true;
      skip();
    }
    Blade b = 0;
    if (peek() == 'e') {
      b = blade();
    } else if (!has_coef || star) {
      // A bare "1" after "*" or as the whole term is the scalar blade.
      if (peek() == '1' && !std::isdigit(static_cast<unsigned char>(peek(1))) && peek(1) != '.') {
        ++pos_;
      } else {
        throw ParseError("expected coefficient or blade", pos_ == start ? start : pos_);
      }
    }
    out_[b] += sign * coef;
  }

  double number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (peek() == '.') {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())))
        ++pos_;
    }
    // An exponent needs an explicit sign so that "2e1" stays 2*e1.
    if ((peek() == 'e' || peek() == 'E') && (peek(1) == '+' || peek(1) == '-') &&
        std::isdigit(static_cast<unsigned char>(peek(2)))) {
      pos_ += 2;
      while (std::isdigit(static_cast<unsigned char>(peek())))
        ++pos_;
    }
    const std::string lit(s_.substr(start, pos_ - start));
    if (lit.empty() || lit == ".")
      throw ParseError("malformed number", start);
    return std::strtod(lit.c_str(), nullptr);
  }

  Blade blade() {
    const std::size_t start = pos_;
    ++pos_; // 'e'
    Blade b = 0;
    int last = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const int idx = peek() - '0';
      if (idx < 1 || idx > sig_.n())
        throw ParseError("basis index " + std::to_string(idx) + " out of range for " + sig_.name(), pos_);
      if (idx <= last)
        throw ParseError("blade indices must be strictly ascending", pos_);
      b |= 1u << (idx - 1);
      last = idx;
      ++pos_;
    }
    if (last == 0)
      throw ParseError("blade without indices", start);
    return b;
  }
};

std::string format_number(double x, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, x);
  return buf;
}

} // namespace

Multivector parse_mv(std::string_view text, Signature sig) { return Parser(text, sig).run(); }

std::string format_mv(const Multivector &a, int precision) {
  std::string out;
  for (Blade b : canonical_order(a.signature().n())) {
    const double c = a[b];
    if (c == 0.0)
      continue;
    const double mag = std::abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (b == 0)
      out += format_number(mag, precision);
    else if (mag == 1.0)
      out += blade_name(b);
    else
      out += format_number(mag, precision) + "*" + blade_name(b);
  }
  return out.empty() ? "0" : out;
}

} // namespace cliffroot
