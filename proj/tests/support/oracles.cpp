#include "oracles.hpp"

#include <mpfr.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

struct Mpfr {
  mpfr_t v;
  explicit Mpfr(long bits) { mpfr_init2(v, bits); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
};

void set_value(Mpfr& out, const cfded::Number& x, long bits) {
  if (x.is_rational()) {
    const mpq_class q(x.rational().num().mpz(), x.rational().den().mpz());
    mpfr_set_q(out.v, q.get_mpq_t(), MPFR_RNDN);
    return;
  }
  const auto& s = x.surd();
  Mpfr root(bits);
  mpfr_set_z(root.v, s.radicand().mpz().get_mpz_t(), MPFR_RNDN);
  mpfr_sqrt(root.v, root.v, MPFR_RNDN);
  mpfr_mul_z(root.v, root.v, s.b().mpz().get_mpz_t(), MPFR_RNDN);
  mpfr_add_z(root.v, root.v, s.a().mpz().get_mpz_t(), MPFR_RNDN);
  mpfr_div_z(out.v, root.v, s.c().mpz().get_mpz_t(), MPFR_RNDN);
}

bool is_square(long n) {
  const long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  for (long t = std::max(0L, r - 1); t <= r + 1; ++t)
    if (t * t == n) return true;
  return false;
}

}  // namespace

std::string to_expression(const Parts& p) {
  return "(" + std::to_string(p.a) + "+(" + std::to_string(p.b) + ")*sqrt(" + std::to_string(p.n) + "))/" +
         std::to_string(p.c);
}

std::vector<mpz_class> digits(const Parts& p, cfded::Kind kind, std::size_t count, long bits) {
  Mpfr x(bits);
  Mpfr t(bits);
  mpfr_set_si(x.v, p.n, MPFR_RNDN);
  mpfr_sqrt(x.v, x.v, MPFR_RNDN);
  mpfr_mul_si(x.v, x.v, p.b, MPFR_RNDN);
  mpfr_add_si(x.v, x.v, p.a, MPFR_RNDN);
  mpfr_div_si(x.v, x.v, p.c, MPFR_RNDN);
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < count; ++i) {
    mpz_class d;
    if (kind == cfded::Kind::Regular) {
      mpfr_get_z(d.get_mpz_t(), x.v, MPFR_RNDD);
      mpfr_sub_z(t.v, x.v, d.get_mpz_t(), MPFR_RNDN);  // x - a
    } else {
      mpfr_get_z(d.get_mpz_t(), x.v, MPFR_RNDU);
      mpfr_z_sub(t.v, d.get_mpz_t(), x.v, MPFR_RNDN);  // c - x
    }
    out.push_back(d);
    mpfr_ui_div(x.v, 1, t.v, MPFR_RNDN);
  }
  return out;
}

mpq_class dedekind_sum(const mpz_class& a, const mpz_class& b) {
  auto saw = [](const mpq_class& x) -> mpq_class {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    if (x.get_den() == 1) return 0;
    return x - fl - mpq_class(1, 2);
  };
  mpq_class total = 0;
  for (mpz_class k = 1; k <= b; ++k) {
    mpq_class u(k, b);
    u.canonicalize();
    mpq_class v(a * k, b);
    v.canonicalize();
    total += saw(u) * saw(v);
  }
  return 12 * total;
}

Fractions convergents(const std::vector<mpz_class>& digits, cfded::Kind kind) {
  const int sign = kind == cfded::Kind::Regular ? 1 : -1;
  Fractions f;
  mpz_class p2 = 0, p1 = 1, q2 = sign, q1 = 0;  // index -2 and -1
  for (const auto& d : digits) {
    mpz_class p = d * p1 + sign * p2;
    mpz_class q = d * q1 + sign * q2;
    f.num.push_back(p);
    f.den.push_back(q);
    p2 = p1;
    p1 = p;
    q2 = q1;
    q1 = q;
  }
  return f;
}

int compare(const cfded::Number& x, const cfded::Number& y, long bits) {
  Mpfr u(bits);
  Mpfr v(bits);
  set_value(u, x, bits);
  set_value(v, y, bits);
  return mpfr_cmp(u.v, v.v);
}

double approx(const cfded::Number& x) {
  Mpfr u(256);
  set_value(u, x, 256);
  return mpfr_get_d(u.v, MPFR_RNDN);
}

Parts SurdGenerator::parts() {
  std::uniform_int_distribution<long> radicand(2, max_n_);
  std::uniform_int_distribution<long> a(-60, 60);
  std::uniform_int_distribution<long> b(-12, 12);
  std::uniform_int_distribution<long> c(1, 40);
  Parts p{};
  do {
    p = {a(rng_), b(rng_), c(rng_), radicand(rng_)};
  } while (p.b == 0 || is_square(p.n));
  if (rng_() % 2 == 0) p.c = -p.c;
  return p;
}

cfded::QuadSurd SurdGenerator::next() {
  const Parts p = parts();
  return cfded::QuadSurd::normalize(p.a, p.b, p.c, p.n);
}

std::vector<cfded::QuadSurd> bounded_fixtures(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> digit(1, 9);
  std::uniform_int_distribution<long> first(-5, 5);
  std::uniform_int_distribution<int> length(0, 3);
  std::vector<cfded::QuadSurd> out;
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<cfded::Integer> pre;
    const int pre_len = length(rng);
    for (int i = 0; i < pre_len; ++i) pre.emplace_back(i == 0 ? first(rng) : digit(rng));
    std::vector<cfded::Integer> period;
    if (n % 2 == 0) {
      // Odd length.
      const int len = 1 + 2 * length(rng);
      for (int i = 0; i < len; ++i) period.emplace_back(digit(rng));
    } else {
      // Palindrome of even length: the alternating sum cancels.
      const int half = 1 + length(rng);
      std::vector<cfded::Integer> left;
      for (int i = 0; i < half; ++i) left.emplace_back(digit(rng));
      period = left;
      period.insert(period.end(), left.rbegin(), left.rend());
    }
    out.push_back(cfded::evaluate_periodic(cfded::Kind::Regular, pre, period));
  }
  return out;
}

std::vector<cfded::Integer> to_integers(const std::vector<long>& values) {
  return {values.begin(), values.end()};
}

cfded::Integer to_integer(const mpz_class& v) { return cfded::Integer(v); }

mpz_class to_mpz(const cfded::Integer& v) { return v.mpz(); }

std::vector<cfded::Integer> e_digits(std::size_t count) {
  std::vector<cfded::Integer> out{cfded::Integer(2)};
  for (long k = 1; out.size() < count; ++k) {
    out.emplace_back(1);
    out.emplace_back(2 * k);
    out.emplace_back(1);
  }
  out.resize(count);
  return out;
}

}  // namespace oracle
