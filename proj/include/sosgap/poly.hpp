#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "sosgap/rational.hpp"

namespace sosgap {

// Dense fixed-length exponent vector, one entry per variable.
using Exponents = std::vector<int>;

inline int exponent_sum(const Exponents& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

// Graded lexicographic, highest term first. Fixes canonical serialization.
struct GradedLexDesc {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = exponent_sum(a), db = exponent_sum(b);
    if (da != db) return da > db;
    return a > b;  // lexicographic on equal degree
  }
};

using TermMap = std::map<Exponents, Rational, GradedLexDesc>;

// Sparse multivariate polynomial over exact rationals. Values are immutable
// in spirit: every operation returns a fresh Poly. No zero coefficients are
// ever stored, so operator== on the term maps is structural equality.
class Poly {
 public:
  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int index);
  static Poly monomial(int nvars, Exponents e, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  // Total degree; -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(int var) const;
  bool is_homogeneous() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coeff(const Exponents& e) const;
  // Leading coefficient/monomial in graded lex order.
  const Exponents& leading_exponents() const;
  const Rational& leading_coeff() const;

  void add_term(const Exponents& e, const Rational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);
  bool operator==(const Poly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  Poly pow(int e) const;

  Rational evaluate(std::span<const Rational> pt) const;
  Rational evaluate(const std::vector<Rational>& pt) const {
    return evaluate(std::span<const Rational>(pt));
  }

  Poly derivative(int var) const;
  std::vector<Poly> gradient() const;

  // Substitutes an exact value for one variable; arity is unchanged.
  Poly substitute(int var, const Rational& value) const;
  // Substitutes a polynomial (same arity as the result) for one variable.
  Poly substitute(int var, const Poly& value) const;
  // Substitutes value for var^2; throws if var occurs with odd exponent.
  Poly substitute_square(int var, const Rational& value) const;
  // Removes a variable that occurs in no term.
  Poly drop_var(int var) const;
  // Appends a fresh unused variable at position `index`.
  Poly insert_var(int index) const;
  // Applies a permutation of the variables: result exponent of perm[i] is
  // the input exponent of i.
  Poly permute_vars(const std::vector<int>& perm) const;

  Poly homogenize(int target_degree, int new_var_index) const;
  Poly dehomogenize(int var_index) const;

  // Exact substitution expansion; this->nvars() must equal inner.size() and
  // all inner polynomials must share one arity.
  Poly compose(std::span<const Poly> inner) const;
  Poly compose(const std::vector<Poly>& inner) const {
    return compose(std::span<const Poly>(inner));
  }

  // Reverses the exponents of `var` around `clearing_degree`, i.e. performs
  // t -> 1/t followed by multiplication with t^clearing_degree. Throws if
  // some exponent exceeds the clearing degree.
  Poly reverse_var(int var, int clearing_degree) const;

  // Quotient if `divisor` divides this exactly, std::nullopt-like empty
  // result otherwise (returned via success flag).
  bool try_divide(const Poly& divisor, Poly* quotient) const;

  // Exact square root if this is a perfect square of a polynomial.
  bool square_root(Poly* root) const;

 private:
  int nvars_;
  TermMap terms_;
};

// Monomial bases in canonical (graded lex desc) order.
std::vector<Exponents> monomials_up_to_degree(int nvars, int degree);
std::vector<Exponents> monomials_of_degree(int nvars, int degree);

// Coefficient vector of p over the given monomial list (missing = 0).
std::vector<Rational> coefficient_vector(const Poly& p,
                                         const std::vector<Exponents>& basis);
Poly poly_from_coefficients(int nvars, const std::vector<Exponents>& basis,
                            std::span<const Rational> coeffs);

}  // namespace sosgap
