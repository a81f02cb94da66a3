#include "sosgap/pointideal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sosgap/errors.hpp"
#include "sosgap/quadform.hpp"

namespace sosgap {

namespace {

bool proportional(const Point& a, const Point& b) {
  // a and b nonzero vectors of equal length.
  int n = static_cast<int>(a.size());
  int k = -1;
  for (int i = 0; i < n; ++i)
    if (b[i] != 0) { k = i; break; }
  if (k < 0) return false;
  if (a[k] == 0) return false;
  Rational f = a[k] / b[k];
  for (int i = 0; i < n; ++i)
    if (a[i] != f * b[i]) return false;
  return true;
}

}  // namespace

void PointSet::validate() const {
  for (const Point& p : points) {
    if (static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("point with wrong coordinate count");
    if (mode == PointMode::projective) {
      bool nonzero = false;
      for (const Rational& c : p) nonzero = nonzero || c != 0;
      if (!nonzero) throw std::invalid_argument("zero projective point");
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      bool same = mode == PointMode::projective ? proportional(points[i], points[j])
                                                : points[i] == points[j];
      if (same) throw std::invalid_argument("points not pairwise distinct");
    }
  }
}

PointSet PointSet::affine(std::vector<Point> pts) {
  PointSet s;
  s.mode = PointMode::affine;
  s.dim = pts.empty() ? 0 : static_cast<int>(pts[0].size());
  s.points = std::move(pts);
  s.validate();
  return s;
}

PointSet PointSet::projective(std::vector<Point> pts) {
  PointSet s;
  s.mode = PointMode::projective;
  s.dim = pts.empty() ? 0 : static_cast<int>(pts[0].size());
  s.points = std::move(pts);
  s.validate();
  return s;
}

PointSet PointSet::projectivize() const {
  if (mode == PointMode::projective) return *this;
  std::vector<Point> pts = points;
  for (Point& p : pts) p.push_back(Rational(1));
  return PointSet::projective(std::move(pts));
}

// ---------------------------------------------------------------------------
// geometry_report

ConfigReport geometry_report(const PointSet& a) {
  bool planar = (a.mode == PointMode::affine && a.dim == 2) ||
                (a.mode == PointMode::projective && a.dim == 3);
  if (!planar) throw std::invalid_argument("geometry_report: planar input required");
  a.validate();
  int n = a.size();

  // Row of incidence conditions for a point on a line / on a conic.
  auto line_row = [&](int i) -> Vec {
    const Point& p = a.points[i];
    if (a.mode == PointMode::affine) return {Rational(1), p[0], p[1]};
    return {p[0], p[1], p[2]};
  };
  auto conic_row = [&](int i) -> Vec {
    const Point& p = a.points[i];
    if (a.mode == PointMode::affine)
      return {Rational(1), p[0], p[1], p[0] * p[0], p[0] * p[1], p[1] * p[1]};
    return {p[0] * p[0], p[1] * p[1], p[2] * p[2], p[0] * p[1], p[0] * p[2], p[1] * p[2]};
  };

  ConfigReport rep;
  // Lines: for each pair, collect every point collinear with it.
  std::set<std::vector<int>> line_sets;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> on{i, j};
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        Mat m{line_row(i), line_row(j), line_row(k)};
        if (det(m) == 0) on.push_back(k);
      }
      std::sort(on.begin(), on.end());
      rep.max_collinear = std::max(rep.max_collinear, static_cast<int>(on.size()));
      if (on.size() >= 3) line_sets.insert(on);
    }
  }
  rep.line_witnesses.assign(line_sets.begin(), line_sets.end());

  // Conics: five points determine at least one conic; count incident points
  // by rank instead of tracking individual conics.
  if (n >= 2) rep.max_on_conic = std::min(n, 5);
  std::set<std::vector<int>> conic_sets;
  std::vector<int> idx(5);
  auto consider = [&](const std::vector<int>& five) {
    Mat rows;
    for (int i : five) rows.push_back(conic_row(i));
    std::vector<int> on = five;
    for (int k = 0; k < n; ++k) {
      if (std::find(five.begin(), five.end(), k) != five.end()) continue;
      Mat m = rows;
      m.push_back(conic_row(k));
      if (rank(m) == rank(rows)) on.push_back(k);
    }
    std::sort(on.begin(), on.end());
    rep.max_on_conic = std::max(rep.max_on_conic, static_cast<int>(on.size()));
    if (on.size() >= 6) conic_sets.insert(on);
  };
  if (n >= 5) {
    // All 5-subsets; configurations here are small (typically <= 10 points).
    std::vector<int> c(5);
    for (c[0] = 0; c[0] < n; ++c[0])
      for (c[1] = c[0] + 1; c[1] < n; ++c[1])
        for (c[2] = c[1] + 1; c[2] < n; ++c[2])
          for (c[3] = c[2] + 1; c[3] < n; ++c[3])
            for (c[4] = c[3] + 1; c[4] < n; ++c[4]) consider(c);
  } else if (n >= 1) {
    rep.max_on_conic = n;
  }
  rep.conic_witnesses.assign(conic_sets.begin(), conic_sets.end());

  // A single conic through all points?
  Mat all;
  for (int i = 0; i < n; ++i) all.push_back(conic_row(i));
  rep.all_on_conic = n == 0 || rank(all) < 6;
  return rep;
}

// ---------------------------------------------------------------------------
// vanishing_basis

std::vector<Exponents> ideal_monomials(const PointSet& a, int degree) {
  if (a.mode == PointMode::affine) return monomials_up_to_degree(a.dim, degree);
  return monomials_of_degree(a.dim, degree);
}

IdealBasis vanishing_basis(const PointSet& a, int degree, int order) {
  if (a.points.empty()) throw std::invalid_argument("vanishing_basis: empty point set");
  if (order != 1 && order != 2) throw std::invalid_argument("vanishing_basis: order must be 1 or 2");
  if (degree < 1) throw std::invalid_argument("vanishing_basis: degree must be positive");
  a.validate();

  std::vector<Exponents> mons = ideal_monomials(a, degree);
  int n = a.dim;
  Mat conditions;
  auto add_condition = [&](auto&& valueOfMonomial) {
    Vec row;
    row.reserve(mons.size());
    for (const Exponents& e : mons) row.push_back(valueOfMonomial(e));
    conditions.push_back(std::move(row));
  };

  for (const Point& p : a.points) {
    // Value condition.
    add_condition([&](const Exponents& e) {
      Rational v(1);
      for (int i = 0; i < n; ++i)
        if (e[i] > 0) v *= pow_rational(p[i], e[i]);
      return v;
    });
    if (order == 2) {
      for (int var = 0; var < n; ++var) {
        add_condition([&](const Exponents& e) {
          if (e[var] == 0) return Rational(0);
          Rational v(e[var]);
          for (int i = 0; i < n; ++i) {
            int ex = (i == var) ? e[i] - 1 : e[i];
            if (ex > 0) v *= pow_rational(p[i], ex);
          }
          return v;
        });
      }
    }
  }

  IdealBasis out;
  out.pointset = a;
  out.degree = degree;
  out.order = order;
  {
    Mat copy = conditions;
    out.condition_matrix_rank = static_cast<int>(rref(copy).size());
  }
  for (const Vec& v : nullspace(conditions, static_cast<int>(mons.size())))
    out.basis.push_back(poly_from_coefficients(n, mons, v));
  return out;
}

bool same_span(const std::vector<Poly>& a, const std::vector<Poly>& b,
               const std::vector<Exponents>& monomials) {
  Mat ma, mb, all;
  for (const Poly& p : a) ma.push_back(coefficient_vector(p, monomials));
  for (const Poly& p : b) mb.push_back(coefficient_vector(p, monomials));
  all = ma;
  all.insert(all.end(), mb.begin(), mb.end());
  int ra = rank(ma), rb = rank(mb);
  return ra == rb && rank(all) == ra;
}

// ---------------------------------------------------------------------------
// product_span / gap_element

ProductSpan product_span(const IdealBasis& basis) {
  if (basis.order != 1) throw std::invalid_argument("product_span: order-1 basis required");
  ProductSpan out;
  int r = basis.dimension();
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) out.products.push_back(basis.basis[i] * basis.basis[j]);
  std::vector<Exponents> mons = ideal_monomials(basis.pointset, 2 * basis.degree);
  Mat rows;
  for (const Poly& p : out.products) rows.push_back(coefficient_vector(p, mons));
  out.rank = rank(rows);
  out.independent = out.rank == r * (r + 1) / 2;
  return out;
}

std::optional<GapElement> gap_element(const PointSet& a, int degree) {
  IdealBasis b1 = vanishing_basis(a, degree, 1);
  IdealBasis b2 = vanishing_basis(a, 2 * degree, 2);
  ProductSpan prods = product_span(b1);

  std::vector<Exponents> mons = ideal_monomials(a, 2 * degree);
  Mat prod_rows;
  for (const Poly& p : prods.products) prod_rows.push_back(coefficient_vector(p, mons));

  // Reduce the order-2 ideal basis against the product span: RREF the
  // products, then eliminate their pivots from each candidate. The first
  // survivor in canonical order is the gap element.
  Mat red = prod_rows;
  std::vector<int> pivots = rref(red);
  auto reduce = [&](Vec v) {
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      Rational f = v[pivots[k]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * red[k][j];
    }
    return v;
  };

  std::optional<Poly> g;
  for (const Poly& cand : b2.basis) {
    Vec v = reduce(coefficient_vector(cand, mons));
    bool zero = std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
    if (!zero) {
      // Normalize by the first nonzero coordinate for determinism.
      Rational lead(0);
      for (const Rational& x : v)
        if (x != 0) { lead = x; break; }
      for (Rational& x : v) x /= lead;
      g = poly_from_coefficients(a.dim, mons, v);
      break;
    }
  }
  if (!g) return std::nullopt;

  // Separating functional: a nullspace vector of the product rows that does
  // not annihilate g, normalized so that <w, g> = 1.
  Vec gvec = coefficient_vector(*g, mons);
  DualWitness w;
  w.nvars = a.dim;
  w.degree = 2 * degree;
  w.homogeneous = a.mode == PointMode::projective;
  w.annihilated = "pairwise products of the degree-" + std::to_string(degree) +
                  " vanishing basis (" + std::to_string(prods.products.size()) + " products)";
  for (const Vec& n : nullspace(prod_rows, static_cast<int>(mons.size()))) {
    Rational val = dot(n, gvec);
    if (val != 0) {
      w.functional = n;
      for (Rational& x : w.functional) x /= val;
      break;
    }
  }
  if (w.functional.empty())
    throw std::logic_error("gap element found but no separating functional exists");
  return GapElement{*g, w};
}

Rational DualWitness::apply(const Poly& p) const {
  std::vector<Exponents> mons =
      homogeneous ? monomials_of_degree(nvars, degree) : monomials_up_to_degree(nvars, degree);
  return dot(functional, coefficient_vector(p, mons));
}

// ---------------------------------------------------------------------------
// fullness

bool fullness(const PointSet& a, const IdealBasis& basis) {
  if (basis.order != 1) throw std::invalid_argument("fullness: order-1 basis required");
  int want = a.mode == PointMode::projective ? a.dim - 1 : a.dim;
  for (const Point& p : a.points) {
    Mat grads;
    for (const Poly& f : basis.basis) {
      Vec row;
      for (int i = 0; i < a.dim; ++i) row.push_back(f.derivative(i).evaluate(p));
      grads.push_back(std::move(row));
    }
    // Projective: gradients at a zero are orthogonal to the point (Euler),
    // so full rank means spanning that hyperplane.
    if (rank(grads) < want) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// forced_zeros

namespace {

struct ChartData {
  std::vector<Poly> polys;       // bivariate generators in the chart
  std::vector<Point> excluded;   // affine points of A in the chart
  std::vector<Point> excluded_infinity;  // projective points of A at infinity
  int degree = 0;
};

ChartData to_chart(const IdealBasis& basis) {
  ChartData c;
  c.degree = basis.degree;
  if (basis.pointset.mode == PointMode::affine) {
    if (basis.pointset.dim != 2)
      throw std::invalid_argument("forced_zeros: planar input required");
    c.polys = basis.basis;
    c.excluded = basis.pointset.points;
    return c;
  }
  if (basis.pointset.dim != 3)
    throw std::invalid_argument("forced_zeros: planar (ternary) input required");
  for (const Poly& f : basis.basis) c.polys.push_back(f.dehomogenize(2));
  for (const Point& p : basis.pointset.points) {
    if (p[2] != 0)
      c.excluded.push_back({p[0] / p[2], p[1] / p[2]});
    else
      c.excluded_infinity.push_back(p);
  }
  return c;
}

bool contains_point(const std::vector<Point>& pts, const Point& p) {
  return std::find(pts.begin(), pts.end(), p) != pts.end();
}

bool proportional_dir(const Point& a, const Point& b) { return proportional(a, b); }

// Interval evaluation of a bivariate polynomial on a coordinate box.
std::pair<Rational, Rational> box_eval(const Poly& f, const AlgebraicCoord& x,
                                       const AlgebraicCoord& y) {
  Rational lo(0), hi(0);
  auto bounds = [](const AlgebraicCoord& c, int e) {
    Rational a = c.is_exact ? c.value : c.lo;
    Rational b = c.is_exact ? c.value : c.hi;
    // monomial bounds for c^e over [a, b]
    Rational pa = pow_rational(a, e), pb = pow_rational(b, e);
    Rational mn = std::min(pa, pb), mx = std::max(pa, pb);
    if (e % 2 == 0 && a < 0 && b > 0) mn = 0;
    return std::make_pair(mn, mx);
  };
  for (const auto& [e, coef] : f.terms()) {
    auto [x0, x1] = bounds(x, e[0]);
    auto [y0, y1] = bounds(y, e[1]);
    // product interval
    Rational cands[4] = {x0 * y0, x0 * y1, x1 * y0, x1 * y1};
    Rational mn = cands[0], mx = cands[0];
    for (const Rational& v : cands) {
      mn = std::min(mn, v);
      mx = std::max(mx, v);
    }
    if (coef > 0) {
      lo += coef * mn;
      hi += coef * mx;
    } else {
      lo += coef * mx;
      hi += coef * mn;
    }
  }
  return {lo, hi};
}

}  // namespace

ForcedZeros forced_zeros(const IdealBasis& basis) {
  if (basis.order != 1) throw std::invalid_argument("forced_zeros: order-1 basis required");
  if (basis.dimension() < 2)
    throw std::invalid_argument("forced_zeros: need at least two generators");
  ChartData chart = to_chart(basis);
  const Poly& f1 = chart.polys[0];
  const Poly& f2 = chart.polys[1];

  ForcedZeros out;
  out.method = "resultant";

  // Eliminants. When a generator is free of one variable it is its own
  // eliminant in the other.
  auto eliminant = [&](int keep) -> UPoly {
    int elim = 1 - keep;
    bool f1_free = f1.degree_in(elim) == 0;
    bool f2_free = f2.degree_in(elim) == 0;
    if (f1_free && f2_free) {
      UPoly a = as_univariate(f1, keep), b = as_univariate(f2, keep);
      UPoly g = gcd(a, b);
      if (g.degree() >= 1)
        throw InfiniteIntersectionError("generators share a one-variable factor");
      return UPoly::constant(Rational(1));
    }
    if (f1_free) return as_univariate(f1, keep);
    if (f2_free) return as_univariate(f2, keep);
    UPoly r = bivariate_resultant(f1, f2, elim, keep);
    if (r.is_zero())
      throw InfiniteIntersectionError("vanishing resultant: generators share a factor");
    return r;
  };

  UPoly rx = eliminant(0);  // candidates for the x coordinate
  UPoly ry = eliminant(1);  // candidates for the y coordinate
  out.eliminant_x = rx;
  out.eliminant_y = ry;

  RootIsolation roots_x = isolate_real_roots(rx);
  RootIsolation roots_y = isolate_real_roots(ry);

  // Exact rational candidates: for each rational x-root, the common roots of
  // the substituted generators give the y values.
  for (const Rational& xv : roots_x.exact) {
    UPoly g1 = as_univariate(f1.substitute(0, xv).drop_var(0), 0);
    UPoly g2 = as_univariate(f2.substitute(0, xv).drop_var(0), 0);
    UPoly common;
    if (g1.is_zero() && g2.is_zero())
      throw InfiniteIntersectionError("a vertical line lies in both generators");
    if (g1.is_zero())
      common = g2;
    else if (g2.is_zero())
      common = g1;
    else
      common = gcd(g1, g2);
    if (common.degree() < 1) continue;
    RootIsolation ys = isolate_real_roots(common);
    for (const Rational& yv : ys.exact) {
      Point pt{xv, yv};
      bool on_all = true;
      for (const Poly& f : chart.polys) on_all = on_all && f.evaluate(pt) == 0;
      if (!on_all) continue;
      if (contains_point(chart.excluded, pt)) continue;
      out.affine.push_back(pt);
    }
    for (const auto& [lo, hi] : ys.boxes) {
      std::vector<AlgebraicCoord> coords(2);
      coords[0] = AlgebraicCoord{true, xv, Rational(0), Rational(0)};
      coords[1] = AlgebraicCoord{false, Rational(0), lo, hi};
      out.affine_boxes.push_back(coords);
    }
  }

  // Irrational x candidates: pair isolating boxes and certify by interval
  // evaluation with refinement.
  if (!roots_x.boxes.empty()) {
    UPoly sfx = squarefree_part(rx);
    UPoly sfy = squarefree_part(ry);
    std::vector<AlgebraicCoord> ycands;
    for (const Rational& yv : roots_y.exact)
      ycands.push_back(AlgebraicCoord{true, yv, Rational(0), Rational(0)});
    for (const auto& [lo, hi] : roots_y.boxes)
      ycands.push_back(AlgebraicCoord{false, Rational(0), lo, hi});
    for (const auto& [xlo0, xhi0] : roots_x.boxes) {
      for (AlgebraicCoord yc : ycands) {
        AlgebraicCoord xc{false, Rational(0), xlo0, xhi0};
        bool excluded = false;
        for (int round = 0; round < 40; ++round) {
          bool possible = true;
          for (const Poly& f : chart.polys) {
            auto [lo, hi] = box_eval(f, xc, yc);
            if (lo > 0 || hi < 0) { possible = false; break; }
          }
          if (!possible) { excluded = true; break; }
          auto [nxlo, nxhi] = refine_root(sfx, xc.lo, xc.hi, (xc.hi - xc.lo) / 4);
          xc.lo = nxlo;
          xc.hi = nxhi;
          if (nxlo == nxhi) { xc.is_exact = true; xc.value = nxlo; }
          if (!yc.is_exact) {
            auto [nylo, nyhi] = refine_root(sfy, yc.lo, yc.hi, (yc.hi - yc.lo) / 4);
            yc.lo = nylo;
            yc.hi = nyhi;
            if (nylo == nyhi) { yc.is_exact = true; yc.value = nylo; }
          }
          if (xc.is_exact && yc.is_exact) break;
        }
        if (excluded) continue;
        if (xc.is_exact && yc.is_exact) {
          Point pt{xc.value, yc.value};
          bool on_all = true;
          for (const Poly& f : chart.polys) on_all = on_all && f.evaluate(pt) == 0;
          if (on_all && !contains_point(chart.excluded, pt)) out.affine.push_back(pt);
          continue;
        }
        out.affine_boxes.push_back({xc, yc});
      }
    }
  }

  // Zeros at infinity: common real directions of the top-degree forms.
  {
    int d = chart.degree;
    auto leading_form = [&](const Poly& f) {
      Poly top(2);
      for (const auto& [e, c] : f.terms())
        if (exponent_sum(e) == d) top.add_term(e, c);
      return top;
    };
    std::vector<Poly> tops;
    for (const Poly& f : chart.polys) tops.push_back(leading_form(f));
    bool any_zero = std::any_of(tops.begin(), tops.end(),
                                [](const Poly& p) { return p.is_zero(); });
    std::vector<Point> dirs;
    if (!any_zero) {
      // Directions with x != 0: common roots of top(1, t).
      UPoly common;
      bool first = true;
      for (const Poly& top : tops) {
        UPoly u = as_univariate(top.substitute(0, Rational(1)).drop_var(0), 0);
        common = first ? u : gcd(common, u);
        first = false;
        if (common.degree() < 1 && !common.is_zero()) break;
      }
      if (common.is_zero())
        throw InfiniteIntersectionError("leading forms share every direction");
      if (common.degree() >= 1) {
        RootIsolation rs = isolate_real_roots(common);
        for (const Rational& t : rs.exact) dirs.push_back({Rational(1), t, Rational(0)});
        // Irrational common directions would land in boxes; configurations
        // in scope have rational directions, but surface them if present.
        for (const auto& [lo, hi] : rs.boxes) {
          std::vector<AlgebraicCoord> coords(2);
          coords[0] = AlgebraicCoord{true, Rational(1), Rational(0), Rational(0)};
          coords[1] = AlgebraicCoord{false, Rational(0), lo, hi};
          out.affine_boxes.push_back(coords);  // recorded as a box with x = 1 direction
        }
      }
      // The direction (0, 1): every leading form must kill it.
      bool vertical = true;
      for (const Poly& top : tops) {
        Exponents e{0, d};
        vertical = vertical && top.coeff(e) == 0;
      }
      if (vertical) dirs.push_back({Rational(0), Rational(1), Rational(0)});
    }
    for (const Point& dir : dirs) {
      bool in_a = false;
      for (const Point& p : chart.excluded_infinity) in_a = in_a || proportional_dir(p, dir);
      if (!in_a) out.at_infinity.push_back(dir);
    }
  }

  return out;
}

// ---------------------------------------------------------------------------
// copacetic

bool copacetic(const PointSet& a) {
  bool planar = (a.mode == PointMode::affine && a.dim == 2) ||
                (a.mode == PointMode::projective && a.dim == 3);
  if (!planar || a.size() != 8)
    throw std::invalid_argument("copacetic: eight planar points required");
  IdealBasis basis = vanishing_basis(a, 3, 1);
  if (basis.dimension() != 2)
    throw std::invalid_argument("copacetic: cubic ideal dimension is " +
                                std::to_string(basis.dimension()) + ", expected 2");
  ForcedZeros fz = forced_zeros(basis);
  if (!fz.affine_boxes.empty()) return false;
  int count = static_cast<int>(fz.affine.size() + fz.at_infinity.size());
  if (count != 1) return false;

  // Simplicity: the Jacobian of the two generators at the forced zero.
  if (!fz.affine.empty()) {
    Point pt = fz.affine[0];
    std::vector<Poly> gens;
    if (a.mode == PointMode::affine) {
      gens = basis.basis;
    } else {
      for (const Poly& f : basis.basis) gens.push_back(f.dehomogenize(2));
    }
    Mat j;
    for (const Poly& f : gens)
      j.push_back({f.derivative(0).evaluate(pt), f.derivative(1).evaluate(pt)});
    return det(j) != 0;
  }
  // Forced zero at infinity: move it to a finite chart by a coordinate swap
  // and repeat the Jacobian test there.
  Point dir = fz.at_infinity[0];
  std::vector<Poly> forms;
  for (const Poly& f : basis.basis)
    forms.push_back(a.mode == PointMode::projective ? f : f.homogenize(3, 2));
  int swap_with = dir[0] != 0 ? 0 : 1;
  std::vector<int> perm{0, 1, 2};
  std::swap(perm[swap_with], perm[2]);
  Point moved{dir[perm[0]] != 0 ? dir[0] : dir[0], Rational(0), Rational(0)};
  // Apply the permutation to both the forms and the direction.
  Point dir2(3);
  for (int i = 0; i < 3; ++i) dir2[perm[i]] = dir[i];
  Point pt{dir2[0] / dir2[2], dir2[1] / dir2[2]};
  Mat j;
  for (const Poly& f : forms) {
    Poly g = f.permute_vars(perm).dehomogenize(2);
    j.push_back({g.derivative(0).evaluate(pt), g.derivative(1).evaluate(pt)});
  }
  return det(j) != 0;
}

// ---------------------------------------------------------------------------
// phi_psi / singular_cubic

namespace {

Poly nullspace_unique(const Mat& conditions, const std::vector<Exponents>& mons, int nvars,
                      const char* what) {
  std::vector<Vec> ns = nullspace(conditions, static_cast<int>(mons.size()));
  if (ns.size() != 1)
    throw ConfigurationViolationError(std::string(what) + ": nullspace dimension " +
                                      std::to_string(ns.size()) + ", expected 1");
  Vec v = ns[0];
  Rational lead(0);
  for (const Rational& x : v)
    if (x != 0) { lead = x; break; }
  for (Rational& x : v) x /= lead;
  return poly_from_coefficients(nvars, mons, v);
}

Vec value_row(const Point& p, const std::vector<Exponents>& mons) {
  Vec row;
  row.reserve(mons.size());
  for (const Exponents& e : mons) {
    Rational v(1);
    for (std::size_t i = 0; i < p.size(); ++i)
      if (e[i] > 0) v *= pow_rational(p[i], e[i]);
    row.push_back(v);
  }
  return row;
}

Vec gradient_row(const Point& p, const std::vector<Exponents>& mons, int var) {
  Vec row;
  row.reserve(mons.size());
  for (const Exponents& e : mons) {
    if (e[var] == 0) {
      row.push_back(Rational(0));
      continue;
    }
    Rational v(e[var]);
    for (std::size_t i = 0; i < p.size(); ++i) {
      int ex = (static_cast<int>(i) == var) ? e[i] - 1 : e[i];
      if (ex > 0) v *= pow_rational(p[i], ex);
    }
    row.push_back(v);
  }
  return row;
}

}  // namespace

PhiPsi phi_psi(const PointSet& a9, const std::array<std::vector<int>, 3>& partition) {
  if (a9.size() != 9 || a9.mode != PointMode::affine || a9.dim != 2)
    throw std::invalid_argument("phi_psi: nine affine planar points required");
  const auto& [five, three, one] = partition;
  if (five.size() != 5 || three.size() != 3 || one.size() != 1)
    throw std::invalid_argument("phi_psi: partition must have shape (5, 3, 1)");

  std::vector<Exponents> mons2 = monomials_up_to_degree(2, 2);
  Mat cond_phi;
  for (int i : five) cond_phi.push_back(value_row(a9.points[i], mons2));
  Poly phi = nullspace_unique(cond_phi, mons2, 2, "phi system");

  std::vector<Exponents> mons4 = monomials_up_to_degree(2, 4);
  Mat cond_psi;
  for (int i : five) cond_psi.push_back(value_row(a9.points[i], mons4));
  for (int i : three) {
    cond_psi.push_back(value_row(a9.points[i], mons4));
    cond_psi.push_back(gradient_row(a9.points[i], mons4, 0));
    cond_psi.push_back(gradient_row(a9.points[i], mons4, 1));
  }
  Poly psi = nullspace_unique(cond_psi, mons4, 2, "psi system");

  const Point& p9 = a9.points[one[0]];
  if (phi.evaluate(p9) * psi.evaluate(p9) == 0)
    throw ConfigurationViolationError("phi_psi: product vanishes at the ninth point");
  return PhiPsi{phi, psi};
}

Poly singular_cubic(const Point& p1, const std::vector<Point>& others) {
  if (others.size() != 6) throw std::invalid_argument("singular_cubic: six further points required");
  std::vector<Point> all = others;
  all.push_back(p1);
  PointSet seven = PointSet::affine(all);
  ConfigReport rep = geometry_report(seven);
  if (rep.max_collinear >= 4 || rep.all_on_conic)
    throw std::invalid_argument(
        "singular_cubic: configuration has four collinear points or lies on a conic");

  std::vector<Exponents> mons3 = monomials_up_to_degree(2, 3);
  Mat cond;
  cond.push_back(value_row(p1, mons3));
  cond.push_back(gradient_row(p1, mons3, 0));
  cond.push_back(gradient_row(p1, mons3, 1));
  for (const Point& p : others) cond.push_back(value_row(p, mons3));
  return nullspace_unique(cond, mons3, 2, "singular cubic");
}

}  // namespace sosgap
