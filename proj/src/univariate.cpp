#include "sosgap/univariate.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "sosgap/linalg.hpp"

namespace sosgap {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) {
  return c == 0 ? UPoly() : UPoly(std::vector<Rational>{c});
}

UPoly UPoly::linear_root(const Rational& r) {
  return UPoly(std::vector<Rational>{-r, Rational(1)});
}

const Rational& UPoly::leading() const {
  if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return c_.back();
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (Rational& x : r.c_) x = -x;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

UPoly operator*(const Rational& s, const UPoly& a) {
  if (s == 0) return UPoly();
  UPoly r = a;
  for (Rational& x : r.c_) x *= s;
  return r;
}

Rational UPoly::eval(const Rational& x) const {
  Rational v(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(d));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  UPoly rem = *this;
  if (rem.degree() < d.degree()) return {UPoly(), rem};
  std::vector<Rational> q(rem.degree() - d.degree() + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    int k = rem.degree() - d.degree();
    Rational f = rem.leading() / d.leading();
    q[k] = f;
    // rem -= f x^k d
    for (int i = 0; i <= d.degree(); ++i) rem.c_[i + k] -= f * d.c_[i];
    rem.trim();
  }
  return {UPoly(std::move(q)), rem};
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return (Rational(1) / leading()) * *this;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x.divmod(y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 1) return p.monic();
  UPoly g = gcd(p, p.derivative());
  if (g.degree() == 0) return p.monic();
  return p.divmod(g).first.monic();
}

SturmChain::SturmChain(const UPoly& squarefree) {
  chain_.push_back(squarefree);
  if (squarefree.degree() >= 1) {
    chain_.push_back(squarefree.derivative());
    while (chain_.back().degree() >= 1) {
      UPoly r = chain_[chain_.size() - 2].divmod(chain_.back()).second;
      if (r.is_zero()) break;
      chain_.push_back(-r);
    }
  }
}

int SturmChain::variations(const Rational& x) const {
  int v = 0, prev = 0;
  for (const UPoly& p : chain_) {
    int s = sign(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int SturmChain::count(const Rational& lo, const Rational& hi) const {
  return variations(lo) - variations(hi);
}

Rational cauchy_bound(const UPoly& p) {
  if (p.degree() < 0) return Rational(1);
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p[i] / p.leading())));
  return m + 1;
}

namespace {

// Attempts to recognize the unique root in (lo, hi) of `sf` as a rational
// with denominator at most den_bound.
std::optional<Rational> rational_root_probe(const UPoly& sf, Rational lo, Rational hi,
                                            const Integer& den_bound) {
  // Two distinct rationals with denominators <= B differ by more than 1/B^2.
  Rational min_gap = Rational(1) / Rational(den_bound * den_bound);
  int slo = sign(sf.eval(lo));
  for (int it = 0; it < 4096 && hi - lo >= min_gap; ++it) {
    Rational mid = (lo + hi) / 2;
    int sm = sign(sf.eval(mid));
    if (sm == 0) return mid;
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
  Rational cand = simplest_rational_between(lo, hi);
  if (cand.get_den() <= den_bound && sf.eval(cand) == 0) return cand;
  return std::nullopt;
}

}  // namespace

RootIsolation isolate_real_roots(const UPoly& p) {
  RootIsolation out;
  if (p.degree() <= 0) return out;
  UPoly sf = squarefree_part(p);
  if (sf.degree() == 1) {
    out.exact.push_back(-sf[0] / sf[1]);
    return out;
  }
  SturmChain sturm(sf);
  Rational b = cauchy_bound(sf);

  // Denominator bound for rational roots: the leading coefficient of the
  // primitive integer form of sf divides every root denominator.
  Integer den = 1;
  for (const Rational& c : sf.coeffs())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  Integer lead_int = sf.leading().get_num() * (den / sf.leading().get_den());
  Integer den_bound = abs(lead_int);

  std::deque<std::pair<Rational, Rational>> work;
  work.emplace_back(-b, b);
  while (!work.empty()) {
    auto [lo, hi] = work.front();
    work.pop_front();
    int n = sturm.count(lo, hi);
    if (n == 0) continue;
    if (n == 1) {
      if (sf.eval(hi) == 0) {
        out.exact.push_back(hi);
        continue;
      }
      auto cand = rational_root_probe(sf, lo, hi, den_bound);
      if (cand)
        out.exact.push_back(*cand);
      else
        out.boxes.emplace_back(lo, hi);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    if (sf.eval(mid) == 0) {
      out.exact.push_back(mid);
      Rational eps = (hi - lo) / 16;
      while (sturm.count(mid - eps, mid + eps) != 1) eps /= 16;
      work.emplace_back(lo, mid - eps);
      work.emplace_back(mid + eps, hi);
    } else {
      work.emplace_back(lo, mid);
      work.emplace_back(mid, hi);
    }
  }
  std::sort(out.exact.begin(), out.exact.end());
  std::sort(out.boxes.begin(), out.boxes.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::pair<Rational, Rational> refine_root(const UPoly& squarefree, Rational lo, Rational hi,
                                          const Rational& width) {
  int slo = sign(squarefree.eval(lo));
  if (slo == 0) return {lo, lo};
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    int sm = sign(squarefree.eval(mid));
    if (sm == 0) return {mid, mid};
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  // Newton form with divided differences, then expand.
  std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  UPoly result = UPoly::constant(dd.empty() ? Rational(0) : dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;)
    result = result * UPoly::linear_root(xs[i]) + UPoly::constant(dd[i]);
  return result;
}

UPoly to_univariate(const Poly& p, int main_var, int other_var, const Rational& value) {
  Poly q = p.substitute(other_var, value);
  return as_univariate(q, main_var);
}

UPoly as_univariate(const Poly& p, int var) {
  std::vector<Rational> c(p.degree_in(var) + 1, Rational(0));
  for (const auto& [e, coef] : p.terms()) {
    for (int i = 0; i < p.nvars(); ++i)
      if (i != var && e[i] != 0)
        throw std::invalid_argument("as_univariate: polynomial involves another variable");
    c[e[var]] += coef;
  }
  return UPoly(std::move(c));
}

UPoly bivariate_resultant(const Poly& f, const Poly& g, int elim_var, int keep_var) {
  int m = f.degree_in(elim_var);
  int n = g.degree_in(elim_var);
  if (m == 0 || n == 0)
    throw std::invalid_argument("bivariate_resultant: an input is free of the eliminated variable");
  int bound = f.total_degree() * g.total_degree();
  std::vector<Rational> xs, ys;
  xs.reserve(bound + 1);
  ys.reserve(bound + 1);
  long t = 0;
  while (static_cast<int>(xs.size()) < bound + 1) {
    Rational x0(t);
    // Sylvester matrix of f(x0, .) and g(x0, .) with the generic degrees.
    UPoly fu = to_univariate(f, elim_var, keep_var, x0);
    UPoly gu = to_univariate(g, elim_var, keep_var, x0);
    auto coef = [](const UPoly& p, int i) {
      return (i <= p.degree() && i >= 0) ? p[i] : Rational(0);
    };
    int size = m + n;
    Mat s(size, Vec(size, Rational(0)));
    for (int r = 0; r < n; ++r)
      for (int i = 0; i <= m; ++i) s[r][r + i] = coef(fu, m - i);
    for (int r = 0; r < m; ++r)
      for (int i = 0; i <= n; ++i) s[n + r][r + i] = coef(gu, n - i);
    xs.push_back(x0);
    ys.push_back(det(s));
    t = (t > 0) ? -t : -t + 1;  // 0, 1, -1, 2, -2, ...
  }
  return interpolate(xs, ys);
}

}  // namespace sosgap
