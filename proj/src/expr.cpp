#include "galog/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace galog {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos); }
};

double parse_number(Cursor& c) {
  const std::size_t start = c.pos;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
  if (c.peek() == '.') {
    ++c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
  }
  if (c.pos == start || (c.pos == start + 1 && c.text[start] == '.'))
    c.fail("expected a number");
  const double value = std::stod(std::string(c.text.substr(start, c.pos - start)));
  if (c.peek() == '/') {
    ++c.pos;
    const std::size_t dstart = c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    if (c.pos == dstart) c.fail("expected a denominator");
    const double den = std::stod(std::string(c.text.substr(dstart, c.pos - dstart)));
    if (den == 0.0) c.fail("zero denominator");
    return value / den;
  }
  return value;
}

// Returns the coefficient slot, or -1 when the cursor is not at a monomial.
int parse_basis(Cursor& c) {
  if (c.peek() == 'I') {
    ++c.pos;
    return kE123;
  }
  if (c.peek() != 'e') return -1;
  const std::size_t start = c.pos;
  ++c.pos;
  std::string digits;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
    digits += c.text[c.pos++];
  if (digits == "1") return kE1;
  if (digits == "2") return kE2;
  if (digits == "3") return kE3;
  if (digits == "12") return kE12;
  if (digits == "13") return kE13;
  if (digits == "23") return kE23;
  if (digits == "123") return kE123;
  c.pos = start;
  c.fail("unknown basis element 'e" + digits + "'");
}

}  // namespace

Multivector parse_mv(std::string_view text, Signature sig) {
  Multivector out(sig);
  Cursor c{text};
  c.skip_ws();
  if (c.done()) c.fail("empty expression");
  bool first = true;
  while (true) {
    c.skip_ws();
    if (c.done()) break;
    double sign = 1.0;
    if (c.peek() == '+' || c.peek() == '-') {
      sign = c.peek() == '-' ? -1.0 : 1.0;
      ++c.pos;
      c.skip_ws();
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    double coeff = 1.0;
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek())) || c.peek() == '.') {
      coeff = parse_number(c);
      have_number = true;
      c.skip_ws();
      if (c.peek() == '*') {
        ++c.pos;
        c.skip_ws();
      }
    }
    int slot = kScalar;
    if (c.peek() == 'e' || c.peek() == 'I') {
      slot = parse_basis(c);
    } else if (!have_number) {
      c.fail("expected a coefficient or basis element");
    }
    out.c[slot] += sign * coeff;
    first = false;
  }
  return out;
}

namespace {

std::string format_double(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

void append_term(std::string& s, double coeff, int slot, int digits) {
  if (coeff == 0.0) return;
  const bool neg = std::signbit(coeff);
  if (s.empty()) {
    if (neg) s += "-";
  } else {
    s += neg ? " - " : " + ";
  }
  const double mag = std::abs(coeff);
  if (slot == kScalar) {
    s += format_double(mag, digits);
    return;
  }
  if (mag == 1.0) {
    s += kBasisNames[slot];
    return;
  }
  s += format_double(mag, digits);
  s += "*";
  s += kBasisNames[slot];
}

}  // namespace

std::string format_mv(const Multivector& a, int digits) {
  std::string s;
  for (int i = 0; i < 8; ++i) append_term(s, a.c[i], i, digits);
  return s.empty() ? "0" : s;
}

std::string format_extended(const ExtendedMultivector& a, int digits) {
  if (!a.has_lambda()) return format_mv(a.fin, digits);
  std::string s;
  for (int i = 0; i < 8; ++i) {
    if (a.lam.c[i] == 0.0) {
      append_term(s, a.fin.c[i], i, digits);
      continue;
    }
    if (!s.empty()) s += " + ";
    s += "(";
    if (a.fin.c[i] != 0.0) {
      s += format_double(a.fin.c[i], digits);
      s += a.lam.c[i] < 0 ? " - " : " + ";
      s += format_double(std::abs(a.lam.c[i]), digits);
    } else {
      s += format_double(a.lam.c[i], digits);
    }
    s += "*log(0+))";
    if (i != kScalar) {
      s += "*";
      s += kBasisNames[i];
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace galog
