#include "sosgap/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace sosgap {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_slash_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal_string(const Rational& q, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Integer n = q.get_num() * scale;
  Integer d = q.get_den();
  Integer whole = n / d;  // truncates toward zero
  bool neg = whole < 0 || (whole == 0 && q < 0);
  Integer aw = abs(whole);
  std::string body = aw.get_str();
  if (static_cast<int>(body.size()) <= digits)
    body.insert(0, digits + 1 - body.size(), '0');
  if (digits > 0) body.insert(body.size() - digits, ".");
  return (neg ? "-" : "") + body;
}

double to_double(const Rational& q) { return q.get_d(); }

Rational rational_from_double(double x, long max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  bool neg = x < 0;
  double a = std::fabs(x);
  // Continued-fraction convergents p/q until the denominator cap.
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = a;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(frac);
    if (fl > 9e17) break;
    long ai = static_cast<long>(fl);
    long p2 = ai * p1 + p0;
    long q2 = ai * q1 + q0;
    if (q2 > max_den || p2 < 0 || q2 < 0) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return Rational(0);
  Rational r(p1, q1);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

namespace {

// Stern-Brocot style recursion on the continued-fraction expansions.
Rational simplest_nonneg(const Rational& lo, const Rational& hi) {
  Integer fl = lo.get_num() / lo.get_den();  // floor for nonnegative lo
  if (Rational(fl) >= lo) {
    // lo is an integer or fl == ceil; the smallest integer >= lo may fit.
  }
  Integer lo_floor;
  mpz_fdiv_q(lo_floor.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
  Rational fl_r(lo_floor);
  if (fl_r + 1 <= hi) {
    // An integer lies in [lo, hi]: the smallest denominator is 1.
    if (fl_r >= lo) return fl_r;
    return fl_r + 1;
  }
  // No integer inside: recurse on the fractional parts, inverted.
  Rational lo2 = Rational(1) / (hi - fl_r);
  Rational hi2 = Rational(1) / (lo - fl_r);
  Rational inner = simplest_nonneg(lo2, hi2);
  return fl_r + Rational(1) / inner;
}

}  // namespace

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("empty interval");
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_nonneg(-hi, -lo);
  return simplest_nonneg(lo, hi);
}

Rational pow_rational(const Rational& base, unsigned long exp) {
  Rational r;
  mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), exp);
  mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), exp);
  r.canonicalize();
  return r;
}

}  // namespace sosgap
