#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sosgap/linalg.hpp"
#include "sosgap/poly.hpp"
#include "sosgap/rational.hpp"
#include "sosgap/univariate.hpp"

namespace sosgap {

enum class PointMode { affine, projective };

using Point = std::vector<Rational>;

// Finite list of exact rational points.
struct PointSet {
  PointMode mode = PointMode::affine;
  int dim = 0;  // coordinates per point
  std::vector<Point> points;

  int size() const { return static_cast<int>(points.size()); }
  // Throws if points repeat (projective: are pairwise proportional) or a
  // projective point is zero.
  void validate() const;

  static PointSet affine(std::vector<Point> pts);
  static PointSet projective(std::vector<Point> pts);
  // The associated projective set (appends coordinate 1).
  PointSet projectivize() const;
};

struct ConfigReport {
  int max_collinear = 0;
  int max_on_conic = 0;
  bool all_on_conic = false;
  std::vector<std::vector<int>> line_witnesses;   // index sets, >= 3 points
  std::vector<std::vector<int>> conic_witnesses;  // index sets, >= 6 points
};

struct IdealBasis {
  PointSet pointset;
  int degree = 0;
  int order = 0;
  std::vector<Poly> basis;
  int condition_matrix_rank = 0;

  int dimension() const { return static_cast<int>(basis.size()); }
};

// A coordinate that is either exact or an isolating interval.
struct AlgebraicCoord {
  bool is_exact = true;
  Rational value;        // when exact
  Rational lo, hi;       // open isolating interval otherwise
  Rational approx() const { return is_exact ? value : (lo + hi) / 2; }
};

struct ForcedZeros {
  std::vector<Point> affine;                 // exact rational points
  std::vector<Point> at_infinity;            // projective directions, last coord 0
  std::vector<std::vector<AlgebraicCoord>> affine_boxes;  // interval-certified
  UPoly eliminant_x, eliminant_y;            // defining data for the boxes
  std::string method = "resultant";          // "resultant" | "verified-input"
};

// Exact linear functional separating a polynomial from the span of pairwise
// basis products. Indexed over the canonical monomial basis (affine: all
// monomials of degree <= `degree`; projective: monomials of degree exactly
// `degree`).
struct DualWitness {
  int nvars = 0;
  int degree = 0;
  bool homogeneous = false;
  Vec functional;
  std::string annihilated;

  Rational apply(const Poly& p) const;
};

struct ProductSpan {
  std::vector<Poly> products;  // f_i f_j for i <= j
  bool independent = false;
  int rank = 0;
};

struct GapElement {
  Poly g;
  DualWitness witness;
};

// Incidence counts from exact 3x3 and 6x6 minors. Planar input only
// (2 affine or 3 projective coordinates).
ConfigReport geometry_report(const PointSet& a);

// Basis of the polynomials of degree <= d (projective: forms of degree d)
// with order-s zeros at every point. s must be 1 or 2.
IdealBasis vanishing_basis(const PointSet& a, int degree, int order);

// Pairwise products of an order-1 basis together with the exact rank of
// their coefficient matrix.
ProductSpan product_span(const IdealBasis& basis);

// An element of the order-2 ideal of degree 2d outside the span of the
// pairwise products, plus the separating functional; nullopt when the span
// already fills the ideal.
std::optional<GapElement> gap_element(const PointSet& a, int degree);

// Common zeros of the basis beyond the point set, affine and at infinity.
ForcedZeros forced_zeros(const IdealBasis& basis);

// True iff at every point the gradients of the basis elements span every
// direction (projective: the tangent space of the sphere at the point).
bool fullness(const PointSet& a, const IdealBasis& basis);

// Eight planar points whose cubic ideal has exactly one simple extra common
// zero, affine or at infinity.
bool copacetic(const PointSet& a);

struct PhiPsi {
  Poly phi;  // quadratic through the five points
  Poly psi;  // quartic through the five, singular at the three
};

// The classical quadratic/quartic pair for a nine-point configuration:
// five simple zeros shared by both, three double zeros of psi, and the
// product nonzero at the remaining point.
PhiPsi phi_psi(const PointSet& a9, const std::array<std::vector<int>, 3>& partition);

// The unique (up to scale) cubic singular at p1 and through six more points,
// normalized by its first nonzero canonical coefficient.
Poly singular_cubic(const Point& p1, const std::vector<Point>& others);

// Monomial basis matching a witness / condition system layout.
std::vector<Exponents> ideal_monomials(const PointSet& a, int degree);

// Helper: true iff the two polynomial lists span the same subspace of the
// common coefficient space.
bool same_span(const std::vector<Poly>& a, const std::vector<Poly>& b,
               const std::vector<Exponents>& monomials);

}  // namespace sosgap
