#include "cfded/surd.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "cfded/error.hpp"

namespace cfded {

namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// floor((a + b*sqrt(n)) / c) for c > 0, n >= 0 not a perfect square unless b == 0.
Integer floor_of(const Integer& a, const Integer& b, const Integer& c, const Integer& n) {
  if (b.is_zero()) return floor_div(a, c);
  const Integer root = isqrt(b * b * n);
  const Integer whole = b.sign() > 0 ? root : -root - Integer(1);
  return floor_div(a + whole, c);
}

std::string coefficient_term(const Integer& magnitude, const Integer& n) {
  const std::string root = "sqrt(" + n.to_string() + ")";
  return magnitude == Integer(1) ? root : magnitude.to_string() + "*" + root;
}

// Loose element of Q(sqrt(n)); `n` is absent for plain rationals.
struct Element {
  Integer a, b, c;
  std::optional<Integer> n;
};

Element element_of(const std::variant<Rational, QuadSurd>& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return {r->num(), Integer(0), r->den(), std::nullopt};
  const auto& s = std::get<QuadSurd>(v);
  return {s.a(), s.b(), s.c(), s.radicand()};
}

std::optional<Integer> common_radicand(const Element& x, const Element& y) {
  if (x.n && y.n && *x.n != *y.n)
    fail(ErrorCode::MixedRadicand,
         "operands live in Q(sqrt(" + x.n->to_string() + ")) and Q(sqrt(" + y.n->to_string() + "))");
  return x.n ? x.n : y.n;
}

Number make(const Integer& a, const Integer& b, const Integer& c, const std::optional<Integer>& n) {
  if (b.is_zero() || !n) return Rational(a, c);
  return Number::from_parts(a, b, c, *n);
}

}  // namespace

SquareFreeSplit square_free_split(const Integer& n) {
  if (n.sign() <= 0) fail(ErrorCode::InvalidArgument, "square-free split needs a positive integer");
  Integer outer(1);
  Integer inner(1);
  mpz_class rest = n.mpz();
  for (const std::uint32_t p : small_primes()) {
    if (mpz_cmp_ui(rest.get_mpz_t(), static_cast<unsigned long>(p) * p) < 0) break;
    unsigned exponent = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++exponent;
    }
    if (exponent == 0) continue;
    outer *= pow(Integer(static_cast<long>(p)), exponent / 2);
    if (exponent % 2 == 1) inner *= Integer(static_cast<long>(p));
  }
  const Integer leftover(rest);
  if (leftover == Integer(1)) return {outer, inner};
  if (leftover < pow(Integer(static_cast<long>(kTrialLimit)), 2)) {
    // Either 1, or a single prime (the trial loop stopped at sqrt).
    inner *= leftover;
    return {outer, inner};
  }
  if (is_perfect_square(leftover)) {
    outer *= isqrt(leftover);
    return {outer, inner};
  }
  // Without prime factors below 10^6 and not a square, a cofactor below
  // 10^18 has at most two distinct large primes.
  if (leftover < pow(Integer(static_cast<long>(kTrialLimit)), 3)) {
    inner *= leftover;
    return {outer, inner};
  }
  fail(ErrorCode::UnsupportedRadicand,
       "cannot certify that " + leftover.to_string() + " is squarefree (no factor below 10^6)");
}

QuadSurd QuadSurd::reduce(Integer a, Integer b, Integer c, Integer n) {
  if (c.is_zero()) fail(ErrorCode::ZeroDenominator, "surd with zero denominator");
  if (b.is_zero()) fail(ErrorCode::RationalValue, "surd with vanishing sqrt coefficient");
  if (c.sign() < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  const Integer g = gcd(gcd(a, b), c);
  if (g != Integer(1)) {
    a = div_exact(a, g);
    b = div_exact(b, g);
    c = div_exact(c, g);
  }
  return QuadSurd(std::move(a), std::move(b), std::move(c), std::move(n));
}

QuadSurd QuadSurd::normalize(Integer a, Integer b, Integer c, Integer radicand) {
  if (c.is_zero()) fail(ErrorCode::ZeroDenominator, "surd with zero denominator");
  if (radicand.sign() < 0) fail(ErrorCode::InvalidArgument, "negative radicand " + radicand.to_string());
  if (b.is_zero()) fail(ErrorCode::RationalValue, "surd with vanishing sqrt coefficient");
  if (radicand < Integer(2)) fail(ErrorCode::PerfectSquare, "radicand " + radicand.to_string() + " is a perfect square");
  auto split = square_free_split(radicand);
  if (split.inner == Integer(1))
    fail(ErrorCode::PerfectSquare, "radicand " + radicand.to_string() + " is a perfect square");
  return reduce(std::move(a), b * split.outer, std::move(c), std::move(split.inner));
}

Integer QuadSurd::floor() const { return floor_of(a_, b_, c_, n_); }

QuadSurd QuadSurd::conjugate() const { return QuadSurd(a_, -b_, c_, n_); }

std::string QuadSurd::to_decimal(unsigned digits) const {
  const bool negative = sign_of_sum(a_, b_, n_) < 0;
  const Integer scale = pow(Integer(10), digits);
  const Integer sa = negative ? -a_ * scale : a_ * scale;
  const Integer sb = negative ? -b_ * scale : b_ * scale;
  return format_fixed_point(negative, floor_of(sa, sb, c_, n_), digits);
}

std::string QuadSurd::to_expression() const {
  std::string out;
  if (a_.is_zero()) {
    out = (b_.sign() < 0 ? "-" : "") + coefficient_term(abs(b_), n_);
  } else {
    out = a_.to_string() + (b_.sign() < 0 ? "-" : "+") + coefficient_term(abs(b_), n_);
    if (c_ != Integer(1)) out = "(" + out + ")";
  }
  if (c_ != Integer(1)) out += "/" + c_.to_string();
  return out;
}

std::string QuadSurd::to_quadruple() const {
  return a_.to_string() + " " + b_.to_string() + " " + c_.to_string() + " " + n_.to_string();
}

std::ostream& operator<<(std::ostream& os, const QuadSurd& x) { return os << x.to_expression(); }

bool SurdFieldLess::operator()(const QuadSurd& x, const QuadSurd& y) const {
  if (x.radicand() != y.radicand()) return x.radicand() < y.radicand();
  if (x.c() != y.c()) return x.c() < y.c();
  if (x.b() != y.b()) return x.b() < y.b();
  return x.a() < y.a();
}

int sign_of_sum(const Integer& a, const Integer& b, const Integer& n) {
  const int sa = a.sign();
  const int sb = n.is_zero() ? 0 : b.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const Integer lhs = a * a;
  const Integer rhs = b * b * n;
  const int diff = lhs == rhs ? 0 : (lhs > rhs ? 1 : -1);
  return sa > 0 ? diff : -diff;
}

Number Number::from_parts(Integer a, Integer b, Integer c, Integer radicand) {
  if (c.is_zero()) fail(ErrorCode::ZeroDenominator, "zero denominator");
  if (b.is_zero()) return Rational(std::move(a), std::move(c));
  if (radicand < Integer(2)) fail(ErrorCode::InvalidArgument, "radicand must be >= 2");
  return QuadSurd::reduce(std::move(a), std::move(b), std::move(c), std::move(radicand));
}

const QuadSurd& Number::surd() const {
  if (const auto* s = std::get_if<QuadSurd>(&v_)) return *s;
  fail(ErrorCode::RationalValue, "expected a quadratic irrational, got rational " + std::get<Rational>(v_).to_string());
}

const Rational& Number::rational() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return *r;
  fail(ErrorCode::InvalidArgument, "expected a rational, got " + std::get<QuadSurd>(v_).to_expression());
}

int Number::sign() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return r->sign();
  const auto& s = std::get<QuadSurd>(v_);
  return sign_of_sum(s.a(), s.b(), s.radicand());
}

Integer Number::floor() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return r->floor();
  return std::get<QuadSurd>(v_).floor();
}

Integer Number::ceil() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return r->ceil();
  return std::get<QuadSurd>(v_).ceil();
}

std::string Number::to_decimal(unsigned digits) const {
  if (const auto* r = std::get_if<Rational>(&v_)) return r->to_decimal(digits);
  return std::get<QuadSurd>(v_).to_decimal(digits);
}

std::string Number::to_expression() const {
  if (const auto* r = std::get_if<Rational>(&v_)) {
    return r->is_integer() ? r->to_string() : "(" + r->num().to_string() + ")/" + r->den().to_string();
  }
  return std::get<QuadSurd>(v_).to_expression();
}

Number Number::operator-() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return -*r;
  const auto& s = std::get<QuadSurd>(v_);
  return QuadSurd(-s.a(), -s.b(), s.c(), s.radicand());
}

Number operator+(const Number& x, const Number& y) {
  if (x.is_rational() && y.is_rational()) return std::get<Rational>(x.v_) + std::get<Rational>(y.v_);
  const Element p = element_of(x.v_);
  const Element q = element_of(y.v_);
  const auto n = common_radicand(p, q);
  return make(p.a * q.c + q.a * p.c, p.b * q.c + q.b * p.c, p.c * q.c, n);
}

Number operator-(const Number& x, const Number& y) { return x + (-y); }

Number operator*(const Number& x, const Number& y) {
  if (x.is_rational() && y.is_rational()) return std::get<Rational>(x.v_) * std::get<Rational>(y.v_);
  const Element p = element_of(x.v_);
  const Element q = element_of(y.v_);
  const auto n = common_radicand(p, q);
  return make(p.a * q.a + p.b * q.b * n.value(), p.a * q.b + p.b * q.a, p.c * q.c, n);
}

Number inverse(const Number& x) {
  if (x.is_rational()) {
    const Rational& r = x.rational();
    if (r.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
    return Rational(r.den(), r.num());
  }
  // c / (a + b sqrt N) = c (a - b sqrt N) / (a^2 - b^2 N); the norm is
  // nonzero because N is not a square.
  const QuadSurd& s = x.surd();
  const Integer norm = s.a() * s.a() - s.b() * s.b() * s.radicand();
  return Number::from_parts(s.c() * s.a(), -(s.c() * s.b()), norm, s.radicand());
}

Number operator/(const Number& x, const Number& y) {
  if (y.is_rational() && y.rational().is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
  return x * inverse(y);
}

std::strong_ordering operator<=>(const Number& x, const Number& y) {
  const int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Number& x) { return os << x.to_expression(); }

std::strong_ordering compare(const QuadSurd& x, const QuadSurd& y) {
  if (x.radicand() == y.radicand()) return Number(x) <=> Number(y);
  // Distinct squarefree radicands: x != y, so floor(2^k x) and floor(2^k y)
  // separate for some k.
  Integer scale(1);
  for (;;) {
    const Integer fx = QuadSurd::normalize(x.a() * scale, x.b() * scale, x.c(), x.radicand()).floor();
    const Integer fy = QuadSurd::normalize(y.a() * scale, y.b() * scale, y.c(), y.radicand()).floor();
    if (fx != fy) return fx <=> fy;
    scale = scale * Integer(2);
  }
}

}  // namespace cfded
