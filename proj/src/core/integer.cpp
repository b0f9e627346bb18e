#include "cfded/integer.hpp"

#include <ostream>

#include "cfded/error.hpp"

namespace cfded {

Integer Integer::parse(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) fail(ErrorCode::SyntaxError, "empty integer literal");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      fail(ErrorCode::SyntaxError, "invalid integer literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(mpz_class(s, 10));
}

long Integer::to_long() const {
  if (!fits_long()) fail(ErrorCode::InvalidArgument, "integer " + to_string() + " out of range");
  return v_.get_si();
}

std::ostream& operator<<(std::ostream& os, const Integer& x) { return os << x.v_.get_str(10); }

Integer abs(const Integer& x) { return Integer(mpz_class(::abs(x.mpz()))); }

Integer floor_div(const Integer& n, const Integer& d) {
  if (d.is_zero()) fail(ErrorCode::DivisionByZero, "integer division by zero");
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), n.mpz().get_mpz_t(), d.mpz().get_mpz_t());
  return Integer(std::move(q));
}

Integer floor_mod(const Integer& n, const Integer& d) {
  if (d.is_zero()) fail(ErrorCode::DivisionByZero, "integer division by zero");
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), n.mpz().get_mpz_t(), d.mpz().get_mpz_t());
  return Integer(std::move(r));
}

Integer div_exact(const Integer& n, const Integer& d) {
  if (d.is_zero()) fail(ErrorCode::DivisionByZero, "integer division by zero");
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), n.mpz().get_mpz_t(), d.mpz().get_mpz_t());
  return Integer(std::move(q));
}

bool divides(const Integer& d, const Integer& n) {
  return mpz_divisible_p(n.mpz().get_mpz_t(), d.mpz().get_mpz_t()) != 0;
}

Integer gcd(const Integer& x, const Integer& y) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), x.mpz().get_mpz_t(), y.mpz().get_mpz_t());
  return Integer(std::move(g));
}

Integer pow(const Integer& base, unsigned long exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), exponent);
  return Integer(std::move(r));
}

Integer isqrt(const Integer& n) {
  if (n.sign() < 0) fail(ErrorCode::InvalidArgument, "isqrt of negative integer");
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.mpz().get_mpz_t());
  return Integer(std::move(r));
}

bool is_perfect_square(const Integer& n) {
  return n.sign() >= 0 && mpz_perfect_square_p(n.mpz().get_mpz_t()) != 0;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  if (m.sign() <= 0) fail(ErrorCode::InvalidArgument, "modulus must be positive");
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.mpz().get_mpz_t(), m.mpz().get_mpz_t()) == 0) {
    if (m == Integer(1)) return Integer(0);
    fail(ErrorCode::NotCoprime, a.to_string() + " has no inverse modulo " + m.to_string());
  }
  return Integer(std::move(r));
}

}  // namespace cfded
