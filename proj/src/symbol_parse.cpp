#include "holoquant/symbol_parse.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

#include "holoquant/io.hpp"

namespace holoquant {

namespace {

struct Term {
  Complex coeff = 1.0;
  int e0 = 0, e1 = 0;  // exponents of the two variables
};

class Parser {
 public:
  Parser(std::string_view text, std::string_view v0, std::string_view v1) : s_(text), v0_(v0), v1_(v1) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip();
    if (pos_ == s_.size()) throw ParseError("empty symbol", pos_);
    double sign = 1.0;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1.0 : 1.0;
      ++pos_;
    }
    for (;;) {
      Term t = term();
      t.coeff *= sign;
      terms.push_back(t);
      skip();
      if (pos_ == s_.size()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail(c);
      sign = c == '-' ? -1.0 : 1.0;
      ++pos_;
    }
    return terms;
  }

 private:
  char peek() const { return s_[pos_]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(char c) const {
    if (c == '(' || c == ')') throw ParseError("parentheses are not supported", pos_);
    if (c == '/') throw ParseError("division is not supported", pos_);
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Term term() {
    Term t;
    factor(t);
    for (;;) {
      skip();
      if (pos_ < s_.size() && peek() == '*') {
        ++pos_;
        factor(t);
      } else {
        return t;
      }
    }
  }

  bool match(std::string_view word) {
    if (s_.substr(pos_, word.size()) != word) return false;
    const std::size_t end = pos_ + word.size();
    if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) return false;
    pos_ = end;
    return true;
  }

  int exponent() {
    skip();
    if (pos_ >= s_.size() || peek() != '^') return 1;
    ++pos_;
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) {
      if (pos_ < s_.size()) fail(peek());
      throw ParseError("missing exponent", pos_);
    }
    int e = 0;
    auto r = std::from_chars(s_.data() + start, s_.data() + pos_, e);
    if (r.ec != std::errc() || e > 1000) throw ParseError("exponent out of range", start);
    return e;
  }

  void factor(Term& t) {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
        std::size_t q = pos_ + 1;
        if (q < s_.size() && (s_[q] == '+' || s_[q] == '-')) ++q;
        if (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) {
          pos_ = q;
          while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        }
      }
      double v = 0.0;
      auto r = std::from_chars(s_.data() + start, s_.data() + pos_, v);
      if (r.ec != std::errc() || r.ptr != s_.data() + pos_) throw ParseError("malformed number", start);
      if (pos_ < s_.size() && s_[pos_] == 'i' &&
          !(pos_ + 1 < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
        ++pos_;
        t.coeff *= Complex(0.0, v);
      } else {
        t.coeff *= v;
      }
      return;
    }
    // longer variable names first so "zb" is not read as "z" then "b"
    if (v1_.size() >= v0_.size()) {
      if (match(v1_)) { t.e1 += exponent(); return; }
      if (match(v0_)) { t.e0 += exponent(); return; }
    } else {
      if (match(v0_)) { t.e0 += exponent(); return; }
      if (match(v1_)) { t.e1 += exponent(); return; }
    }
    if (match("i")) {
      t.coeff *= Complex(0.0, 1.0);
      return;
    }
    fail(c);
  }

  std::string_view s_, v0_, v1_;
  std::size_t pos_ = 0;
};

std::string format_coeff_part(double v, bool first, bool imag, bool bare) {
  std::string out;
  if (v < 0) out += first ? "-" : " - ";
  else if (!first) out += " + ";
  const double a = std::abs(v);
  if (!(bare && a == 1.0 && !imag)) {
    if (imag && a == 1.0) out += "i";
    else out += format_double(a) + (imag ? "i" : "");
  }
  return out;
}

std::string monomial_text(std::string_view v0, int e0, std::string_view v1, int e1) {
  std::string out;
  auto add = [&](std::string_view v, int e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += v;
    if (e != 1) out += '^' + std::to_string(e);
  };
  add(v0, e0);
  add(v1, e1);
  return out;
}

template <class Range>
std::string print(const Range& terms, std::string_view v0, std::string_view v1) {
  std::string out;
  bool first = true;
  for (const auto& [e0, e1, c] : terms) {
    const std::string mono = monomial_text(v0, e0, v1, e1);
    for (int part = 0; part < 2; ++part) {
      const double v = part == 0 ? c.real() : c.imag();
      if (v == 0.0) continue;
      std::string piece = format_coeff_part(v, first, part == 1, !mono.empty());
      const bool coeff_written = !(mono.size() && std::abs(v) == 1.0 && part == 0);
      if (!mono.empty()) piece += (coeff_written ? "*" : "") + mono;
      out += piece;
      first = false;
    }
  }
  return first ? "0" : out;
}

}  // namespace

PhaseSymbol parse_symbol(std::string_view text) {
  PhaseSymbol out(1);
  for (const Term& t : Parser(text, "x", "p").parse()) out.add_term({t.e0, t.e1}, t.coeff);
  return out;
}

SBSymbol parse_sb_symbol(std::string_view text) {
  SBSymbol out;
  for (const Term& t : Parser(text, "z", "zb").parse()) out.add_term({t.e0, t.e1}, t.coeff);
  return out;
}

std::string to_string(const PhaseSymbol& f) {
  if (f.dim() != 1) throw UnsupportedOperation("printer supports one degree of freedom");
  std::vector<std::tuple<int, int, Complex>> terms;
  for (const auto& [k, c] : f.terms()) terms.emplace_back(k[0], k[1], c);
  return print(terms, "x", "p");
}

std::string to_string(const SBSymbol& f) {
  std::vector<std::tuple<int, int, Complex>> terms;
  for (const auto& [k, c] : f.terms()) terms.emplace_back(k.first, k.second, c);
  return print(terms, "z", "zb");
}

}  // namespace holoquant
