#include "linkcalc/laurent.hpp"

#include <cctype>
#include <sstream>

#include "linkcalc/errors.hpp"

namespace linkcalc {

laurent::laurent(long long constant) {
  if (constant != 0) terms_[0] = constant;
}

laurent laurent::monomial(bigint coeff, int exp) {
  laurent p;
  if (coeff != 0) p.terms_[exp] = std::move(coeff);
  return p;
}

bigint laurent::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? bigint(0) : it->second;
}

int laurent::min_exp() const {
  if (terms_.empty()) fail(errc::bad_parameter, "min_exp of zero polynomial");
  return terms_.begin()->first;
}

int laurent::max_exp() const {
  if (terms_.empty()) fail(errc::bad_parameter, "max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

void laurent::insert_term(int exp, const bigint& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(exp, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

laurent& laurent::operator+=(const laurent& rhs) {
  for (const auto& [e, c] : rhs.terms_) insert_term(e, c);
  return *this;
}

laurent& laurent::operator-=(const laurent& rhs) {
  for (const auto& [e, c] : rhs.terms_) insert_term(e, -c);
  return *this;
}

laurent operator*(const laurent& a, const laurent& b) {
  laurent out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.insert_term(ea + eb, ca * cb);
  return out;
}

laurent& laurent::operator*=(const laurent& rhs) { return *this = *this * rhs; }

laurent laurent::operator-() const {
  laurent out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

laurent laurent::invert_variable() const {
  laurent out;
  for (const auto& [e, c] : terms_) out.terms_[-e] = c;
  return out;
}

laurent laurent::shifted(int exp, const bigint& coeff) const {
  laurent out;
  if (coeff == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_[e + exp] = c * coeff;
  return out;
}

namespace {

void append_term(std::ostringstream& os, bool first, const bigint& c, const std::string& power) {
  bigint mag = c < 0 ? bigint(-c) : c;
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (power.empty()) {
    os << mag;
  } else if (mag == 1) {
    os << power;
  } else {
    os << mag << "*" << power;
  }
}

}  // namespace

std::string laurent::render_a() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string power;
    if (e == 1)
      power = "A";
    else if (e != 0)
      power = "A^" + std::to_string(e);
    append_term(os, first, c, power);
    first = false;
  }
  return os.str();
}

std::string laurent::render_t() const {
  if (terms_.empty()) return "0";
  // t-exponent of the A-exponent e is -e/4; track doubled exponents so
  // half-integers stay integral.
  std::map<int, bigint> tt;
  for (const auto& [e, c] : terms_) {
    if (e % 2 != 0) fail(errc::odd_exponent, "odd exponent of A: " + std::to_string(e));
    tt[-e / 2] = c;
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [e2, c] : tt) {
    std::string power;
    if (e2 == 2) {
      power = "t";
    } else if (e2 != 0) {
      if (e2 % 2 == 0)
        power = "t^" + std::to_string(e2 / 2);
      else
        power = "t^" + std::to_string(e2) + "/2";
    }
    append_term(os, first, c, power);
    first = false;
  }
  return os.str();
}

namespace {

struct cursor {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() { return s[pos]; }
  [[noreturn]] void die(const std::string& msg) {
    fail(errc::parse_error, msg + " at position " + std::to_string(pos));
  }
  bigint digits() {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) die("expected digits");
    return bigint(std::string(s.substr(start, pos - start)));
  }
  long long signed_int() {
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
    bigint d = digits();
    if (d > bigint(1) << 30) die("exponent too large");
    long long v = d.convert_to<long long>();
    return neg ? -v : v;
  }
};

}  // namespace

laurent laurent::parse_a(std::string_view text) {
  cursor cur{text};
  laurent out;
  bool any = false;
  while (!cur.eof()) {
    int sign = 1;
    if (any) {
      char op = cur.peek();
      if (op == '+')
        ++cur.pos;
      else if (op == '-')
        sign = -1, ++cur.pos;
      else
        cur.die("expected '+' or '-'");
      if (cur.eof()) cur.die("dangling operator");
    } else if (cur.peek() == '-') {
      sign = -1;
      ++cur.pos;
      if (cur.eof()) cur.die("dangling sign");
    }
    cur.skip_ws();
    bigint coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coeff = cur.digits();
      have_coeff = true;
      cur.skip_ws();
      if (cur.pos < cur.s.size() && cur.peek() == '*') {
        ++cur.pos;
        cur.skip_ws();
      }
    }
    int exp = 0;
    if (cur.pos < cur.s.size() && cur.peek() == 'A') {
      ++cur.pos;
      if (cur.pos < cur.s.size() && cur.s[cur.pos] == '^') {
        ++cur.pos;
        exp = static_cast<int>(cur.signed_int());
      } else {
        exp = 1;
      }
    } else if (!have_coeff) {
      cur.die("expected coefficient or 'A'");
    }
    out.insert_term(exp, sign * coeff);
    any = true;
  }
  if (!any) cur.die("empty polynomial");
  return out;
}

}  // namespace linkcalc
