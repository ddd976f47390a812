#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "evarlab/algebra/polynomial.hpp"
#include "evarlab/errors.hpp"

namespace evarlab::algebra {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  try {
    Rational q(text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal: " + text);
  }
}

namespace {

void append_term(std::string& out, const Ring& ring, const Term& t, bool first) {
  Rational c = t.coeff;
  if (c < 0) {
    out += first ? "-" : " - ";
    c = -c;
  } else if (!first) {
    out += " + ";
  }
  const bool unit_coeff = (c == 1);
  if (!unit_coeff || t.mono.is_one()) out += c.get_str();
  bool need_star = !unit_coeff || t.mono.is_one();
  for (const auto& [v, e] : t.mono.entries()) {
    if (need_star) out += '*';
    out += ring.name(v);
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
    need_star = true;
  }
}

}  // namespace

std::string Polynomial::to_string(const MonomialOrder& order) const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](const Term* a, const Term* b) {
                     return order.greater(a->mono, b->mono);
                   });
  std::string out;
  bool first = true;
  for (const Term* t : sorted) {
    append_term(out, *ring_, *t, first);
    first = false;
  }
  return out;
}

std::string Polynomial::to_string() const {
  return to_string(MonomialOrder::grevlex(ring_));
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  char take() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of polynomial");
    return text[pos++];
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("polynomial parse error at position " +
                     std::to_string(pos) + ": " + msg);
  }
};

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

std::string read_name(Cursor& cur) {
  cur.skip_ws();
  std::size_t start = cur.pos;
  if (start >= cur.text.size() || !is_name_start(cur.text[start]))
    cur.fail("expected variable name");
  std::size_t end = start;
  while (end < cur.text.size() && is_name_char(cur.text[end])) ++end;
  cur.pos = end;
  return std::string(cur.text.substr(start, end - start));
}

std::string read_number(Cursor& cur) {
  cur.skip_ws();
  std::size_t start = cur.pos;
  std::size_t end = start;
  while (end < cur.text.size() &&
         (std::isdigit(static_cast<unsigned char>(cur.text[end])) ||
          cur.text[end] == '/'))
    ++end;
  if (end == start) cur.fail("expected number");
  cur.pos = end;
  return std::string(cur.text.substr(start, end - start));
}

}  // namespace

// Grammar: poly := [sign] term (sign term)*
//          term := factor ('*' factor)*
//          factor := rational | name ['^' integer]
Polynomial Polynomial::parse(const RingPtr& ring, std::string_view text) {
  Cursor cur{text};
  std::vector<Term> terms;
  bool first = true;
  while (!cur.done()) {
    int sign = 1;
    char c = cur.peek();
    if (c == '+' || c == '-') {
      cur.take();
      if (c == '-') sign = -1;
    } else if (!first) {
      cur.fail("expected '+' or '-' between terms");
    }
    Rational coeff = sign;
    Monomial mono;
    bool any = false;
    while (true) {
      c = cur.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_rational(read_number(cur));
        any = true;
      } else if (is_name_start(c)) {
        std::string name = read_name(cur);
        auto v = ring->find(name);
        if (!v) cur.fail("unknown variable '" + name + "'");
        std::uint32_t e = 1;
        if (cur.peek() == '^') {
          cur.take();
          std::string num = read_number(cur);
          if (num.find('/') != std::string::npos) cur.fail("fractional exponent");
          e = static_cast<std::uint32_t>(std::stoul(num));
        }
        mono = mono * Monomial::var(*v, e);
        any = true;
      } else {
        cur.fail("expected coefficient or variable");
      }
      if (cur.peek() == '*')
        cur.take();
      else
        break;
    }
    if (!any) cur.fail("empty term");
    terms.push_back({std::move(mono), std::move(coeff)});
    first = false;
  }
  if (first) throw ParseError("empty polynomial text");
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace evarlab::algebra
