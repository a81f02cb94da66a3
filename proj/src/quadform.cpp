#include "sosgap/quadform.hpp"

#include <stdexcept>
#include <utility>

namespace sosgap {

const char* to_string(Definiteness d) {
  switch (d) {
    case Definiteness::positive_definite: return "positive_definite";
    case Definiteness::psd_singular: return "psd_singular";
    case Definiteness::indefinite: return "indefinite";
    case Definiteness::negative_definite: return "negative_definite";
    case Definiteness::nsd_singular: return "nsd_singular";
  }
  return "?";
}

QuadForm::QuadForm(int n) : n_(n), m_(n, std::vector<Rational>(n, Rational(0))) {
  if (n < 0) throw std::invalid_argument("negative dimension");
}

QuadForm::QuadForm(int n, std::vector<std::vector<Rational>> m) : n_(n), m_(std::move(m)) {
  if (static_cast<int>(m_.size()) != n) throw std::invalid_argument("matrix size mismatch");
  for (const auto& row : m_)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("matrix size mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m_[i][j] != m_[j][i]) throw std::invalid_argument("matrix not symmetric");
}

void QuadForm::set(int i, int j, const Rational& v) {
  m_[i][j] = v;
  m_[j][i] = v;
}

Rational QuadForm::value(std::span<const Rational> u) const {
  if (static_cast<int>(u.size()) != n_) throw std::invalid_argument("value: arity mismatch");
  Rational s(0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) s += m_[i][j] * u[i] * u[j];
  return s;
}

bool QuadForm::is_zero() const {
  for (const auto& row : m_)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

namespace {

struct Elimination {
  std::vector<Rational> pivots;             // nonzero diagonal pivots found
  std::vector<std::vector<Rational>> dirs;  // direction achieving each pivot sign
  bool hyperbolic = false;                  // hit an off-diagonal-only block
  std::vector<Rational> hyper_plus, hyper_minus;
};

// Symmetric Gaussian elimination (congruence transforms only), tracking the
// directions that realise each pivot so classifications come with witnesses.
Elimination eliminate(int n, std::vector<std::vector<Rational>> a) {
  Elimination out;
  // basis[k] expresses current coordinate k in the original coordinates.
  std::vector<std::vector<Rational>> basis(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) basis[i][i] = 1;
  int k = 0;
  while (k < n) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a[i][i] != 0) { piv = i; break; }
    if (piv < 0) {
      // Zero diagonal in the active block: either all zero (done) or a
      // hyperbolic pair exists.
      int r = -1, c = -1;
      for (int i = k; i < n && r < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (a[i][j] != 0) { r = i; c = j; break; }
      if (r < 0) break;
      out.hyperbolic = true;
      // q(e_r + e_c) = 2 a_rc, q(e_r - e_c) = -2 a_rc.
      std::vector<Rational> plus(n, Rational(0)), minus(n, Rational(0));
      for (int t = 0; t < n; ++t) {
        plus[t] = basis[r][t] + basis[c][t];
        minus[t] = basis[r][t] - basis[c][t];
      }
      if (a[r][c] > 0) {
        out.hyper_plus = plus;
        out.hyper_minus = minus;
      } else {
        out.hyper_plus = minus;
        out.hyper_minus = plus;
      }
      return out;
    }
    if (piv != k) {
      std::swap(a[piv], a[k]);
      for (int i = 0; i < n; ++i) std::swap(a[i][piv], a[i][k]);
      std::swap(basis[piv], basis[k]);
    }
    Rational d = a[k][k];
    out.pivots.push_back(d);
    out.dirs.push_back(basis[k]);
    for (int i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rational f = a[i][k] / d;
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      for (int j = 0; j < n; ++j) a[j][i] = a[i][j];
      for (int t = 0; t < n; ++t) basis[i][t] -= f * basis[k][t];
    }
    ++k;
  }
  return out;
}

}  // namespace

Definiteness QuadForm::definiteness() const {
  Elimination e = eliminate(n_, m_);
  int pos = 0, neg = 0;
  for (const Rational& p : e.pivots) (p > 0 ? pos : neg)++;
  if (e.hyperbolic || (pos > 0 && neg > 0)) return Definiteness::indefinite;
  int rank = pos + neg;
  if (neg == 0) {
    return rank == n_ ? Definiteness::positive_definite : Definiteness::psd_singular;
  }
  return rank == n_ ? Definiteness::negative_definite : Definiteness::nsd_singular;
}

QuadForm::SignWitnesses QuadForm::sign_witnesses() const {
  Elimination e = eliminate(n_, m_);
  SignWitnesses w;
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    (e.pivots[i] > 0 ? w.positive : w.negative).push_back(e.dirs[i]);
  if (e.hyperbolic) {
    w.positive.push_back(e.hyper_plus);
    w.negative.push_back(e.hyper_minus);
  }
  return w;
}

Poly QuadForm::to_poly() const {
  Poly p(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = i; j < n_; ++j) {
      Rational c = (i == j) ? m_[i][i] : m_[i][j] * 2;
      Exponents e(n_, 0);
      e[i] += 1;
      e[j] += 1;
      p.add_term(e, c);
    }
  }
  return p;
}

QuadForm QuadForm::from_quadratic_poly(const Poly& p) {
  int n = p.nvars();
  QuadForm q(n);
  for (const auto& [e, c] : p.terms()) {
    if (exponent_sum(e) != 2)
      throw std::invalid_argument("from_quadratic_poly: input not homogeneous quadratic");
    int i = -1, j = -1;
    for (int v = 0; v < n; ++v) {
      if (e[v] == 2) { i = j = v; break; }
      if (e[v] == 1) { (i < 0 ? i : j) = v; }
    }
    if (i == j)
      q.set(i, i, c);
    else
      q.set(i, j, c / 2);
  }
  return q;
}

QuadForm taylor_quadratic(const Poly& p, std::span<const Rational> pt) {
  if (static_cast<int>(pt.size()) != p.nvars())
    throw std::invalid_argument("taylor_quadratic: arity mismatch");
  int n = p.nvars();
  QuadForm q(n);
  for (int i = 0; i < n; ++i) {
    Poly di = p.derivative(i);
    for (int j = i; j < n; ++j) {
      Rational h = di.derivative(j).evaluate(pt);
      q.set(i, j, h / 2);
    }
  }
  return q;
}

QuadForm taylor_quadratic(const Poly& p, const std::vector<Rational>& pt) {
  return taylor_quadratic(p, std::span<const Rational>(pt));
}

bool is_round(const Poly& p, const std::vector<Rational>& pt) {
  if (p.evaluate(pt) != 0) return false;
  for (int i = 0; i < p.nvars(); ++i)
    if (p.derivative(i).evaluate(pt) != 0) return false;
  return taylor_quadratic(p, pt).definiteness() == Definiteness::positive_definite;
}

}  // namespace sosgap
