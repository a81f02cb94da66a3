#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sosgap/poly.hpp"
#include "sosgap/rational.hpp"

namespace sosgap {

// Dense univariate polynomial over exact rationals, coefficients ascending.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly zero() { return UPoly(); }
  static UPoly constant(const Rational& c);
  // x - r
  static UPoly linear_root(const Rational& r);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
  bool is_zero() const { return c_.empty(); }
  const Rational& operator[](int i) const { return c_[i]; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& s, const UPoly& a);
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  Rational eval(const Rational& x) const;
  UPoly derivative() const;
  // Quotient and remainder over the rationals.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly monic() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& p);

// Exact real-root isolation via Sturm sequences. Every root is reported
// either exactly (rational) or as an open interval (lo, hi) containing
// exactly one real root of the squarefree part.
struct RootIsolation {
  std::vector<Rational> exact;                        // exact rational roots
  std::vector<std::pair<Rational, Rational>> boxes;   // irrational roots
};

class SturmChain {
 public:
  explicit SturmChain(const UPoly& squarefree);
  // Number of sign variations at x.
  int variations(const Rational& x) const;
  // Number of distinct real roots in (lo, hi].
  int count(const Rational& lo, const Rational& hi) const;

 private:
  std::vector<UPoly> chain_;
};

// Cauchy bound: all real roots lie in (-B, B).
Rational cauchy_bound(const UPoly& p);

// Isolates all distinct real roots of p. Rational roots are recognized
// exactly (denominator-bounded reconstruction plus exact verification);
// everything else comes back as an isolating interval.
RootIsolation isolate_real_roots(const UPoly& p);

// Shrinks an isolating interval of a simple root of `squarefree` below the
// requested width by sign bisection.
std::pair<Rational, Rational> refine_root(const UPoly& squarefree, Rational lo,
                                          Rational hi, const Rational& width);

// Lagrange interpolation through (xs[i], ys[i]) with distinct xs.
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// Views a bivariate polynomial as univariate in `main_var` with rational
// coefficients obtained by substituting `value` for the other variable.
UPoly to_univariate(const Poly& p, int main_var, int other_var, const Rational& value);

// Exact coefficient extraction when p involves only `var`.
UPoly as_univariate(const Poly& p, int var);

// Resultant of two bivariate polynomials with respect to elim_var, i.e. a
// univariate polynomial in the kept variable. Computed by evaluation and
// interpolation of the Sylvester determinant.
UPoly bivariate_resultant(const Poly& f, const Poly& g, int elim_var, int keep_var);

}  // namespace sosgap
