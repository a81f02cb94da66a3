#pragma once

#include <span>
#include <vector>

#include "sosgap/poly.hpp"
#include "sosgap/rational.hpp"

namespace sosgap {

enum class Definiteness {
  positive_definite,
  psd_singular,
  indefinite,
  negative_definite,
  nsd_singular,
};

const char* to_string(Definiteness d);

// Exact symmetric quadratic form u^T M u.
class QuadForm {
 public:
  explicit QuadForm(int n);
  QuadForm(int n, std::vector<std::vector<Rational>> m);

  int dim() const { return n_; }
  const Rational& at(int i, int j) const { return m_[i][j]; }
  void set(int i, int j, const Rational& v);  // keeps the matrix symmetric

  Rational value(std::span<const Rational> u) const;
  bool is_zero() const;

  // Exact classification by symmetric elimination with rational pivots.
  Definiteness definiteness() const;

  // Directions certifying the classification: value(u) has the sign of the
  // corresponding pivot. Useful for cross-checking against sampling.
  struct SignWitnesses {
    std::vector<std::vector<Rational>> positive;
    std::vector<std::vector<Rational>> negative;
  };
  SignWitnesses sign_witnesses() const;

  // As a homogeneous degree-2 polynomial in n variables.
  Poly to_poly() const;
  // From a homogeneous quadratic (M_ii = coeff of x_i^2, M_ij = half the
  // coeff of x_i x_j).
  static QuadForm from_quadratic_poly(const Poly& p);

 private:
  int n_;
  std::vector<std::vector<Rational>> m_;
};

// Degree-2 component of p(pt + u) as an exact quadratic form in u.
QuadForm taylor_quadratic(const Poly& p, std::span<const Rational> pt);
QuadForm taylor_quadratic(const Poly& p, const std::vector<Rational>& pt);

// True iff p vanishes at pt together with its gradient and the quadratic
// Taylor component there is positive definite.
bool is_round(const Poly& p, const std::vector<Rational>& pt);

}  // namespace sosgap
