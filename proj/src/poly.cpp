#include "sosgap/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace sosgap {

namespace {

void check_arity(int want, int got, const char* what) {
  if (want != got)
    throw std::invalid_argument(std::string(what) + ": arity mismatch (" +
                                std::to_string(want) + " vs " + std::to_string(got) + ")");
}

}  // namespace

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  if (c != 0) p.terms_.emplace(Exponents(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(nvars, e, Rational(1));
}

Poly Poly::monomial(int nvars, Exponents e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars)
    throw std::invalid_argument("exponent vector length mismatch");
  for (int x : e)
    if (x < 0) throw std::invalid_argument("negative exponent");
  Poly p(nvars);
  if (c != 0) p.terms_.emplace(std::move(e), c);
  return p;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  // Graded order: the first key has maximal degree.
  return exponent_sum(terms_.begin()->first);
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = exponent_sum(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (exponent_sum(e) != d) return false;
  return true;
}

Rational Poly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Exponents& Poly::leading_exponents() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rational& Poly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->second;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("exponent vector length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_arity(nvars_, o.nvars_, "poly add");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_arity(nvars_, o.nvars_, "poly sub");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_arity(a.nvars_, b.nvars_, "poly mul");
  Poly r(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly operator*(const Rational& c, const Poly& p) {
  Poly r(p.nvars_);
  if (c == 0) return r;
  for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  Poly r = Poly::constant(nvars_, Rational(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = (e >>= 1) ? base * base : base;
  }
  return r;
}

Rational Poly::evaluate(std::span<const Rational> pt) const {
  check_arity(nvars_, static_cast<int>(pt.size()), "evaluate");
  // Cache powers of each coordinate up to the degree actually used.
  std::vector<std::vector<Rational>> pows(nvars_);
  for (int i = 0; i < nvars_; ++i) pows[i].push_back(Rational(1));
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < nvars_; ++i) {
      auto& pw = pows[i];
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * pt[i]);
      if (e[i] > 0) term *= pw[e[i]];
    }
    total += term;
  }
  return total;
}

Poly Poly::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw std::invalid_argument("derivative: bad variable");
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents e2 = e;
    e2[var] -= 1;
    r.add_term(e2, c * e[var]);
  }
  return r;
}

std::vector<Poly> Poly::gradient() const {
  std::vector<Poly> g;
  g.reserve(nvars_);
  for (int i = 0; i < nvars_; ++i) g.push_back(derivative(i));
  return g;
}

Poly Poly::substitute(int var, const Rational& value) const {
  if (var < 0 || var >= nvars_) throw std::invalid_argument("substitute: bad variable");
  Poly r(nvars_);
  std::vector<Rational> pows{Rational(1)};
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(pows.size()) <= e[var]) pows.push_back(pows.back() * value);
    Exponents e2 = e;
    e2[var] = 0;
    r.add_term(e2, c * pows[e[var]]);
  }
  return r;
}

Poly Poly::substitute(int var, const Poly& value) const {
  if (var < 0 || var >= nvars_) throw std::invalid_argument("substitute: bad variable");
  check_arity(nvars_, value.nvars(), "substitute");
  Poly r(nvars_);
  std::vector<Poly> pows{Poly::constant(nvars_, Rational(1))};
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(pows.size()) <= e[var]) pows.push_back(pows.back() * value);
    Exponents e2 = e;
    e2[var] = 0;
    r += c * (Poly::monomial(nvars_, e2, Rational(1)) * pows[e[var]]);
  }
  return r;
}

Poly Poly::substitute_square(int var, const Rational& value) const {
  Poly r(nvars_);
  std::vector<Rational> pows{Rational(1)};
  for (const auto& [e, c] : terms_) {
    if (e[var] % 2 != 0)
      throw std::domain_error("substitute_square: odd exponent in selected variable");
    int half = e[var] / 2;
    while (static_cast<int>(pows.size()) <= half) pows.push_back(pows.back() * value);
    Exponents e2 = e;
    e2[var] = 0;
    r.add_term(e2, c * pows[half]);
  }
  return r;
}

Poly Poly::drop_var(int var) const {
  Poly r(nvars_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e[var] != 0) throw std::domain_error("drop_var: variable still occurs");
    Exponents e2;
    e2.reserve(nvars_ - 1);
    for (int i = 0; i < nvars_; ++i)
      if (i != var) e2.push_back(e[i]);
    r.terms_.emplace(std::move(e2), c);
  }
  return r;
}

Poly Poly::insert_var(int index) const {
  if (index < 0 || index > nvars_) throw std::invalid_argument("insert_var: bad position");
  Poly r(nvars_ + 1);
  for (const auto& [e, c] : terms_) {
    Exponents e2;
    e2.reserve(nvars_ + 1);
    for (int i = 0; i < index; ++i) e2.push_back(e[i]);
    e2.push_back(0);
    for (int i = index; i < nvars_; ++i) e2.push_back(e[i]);
    r.terms_.emplace(std::move(e2), c);
  }
  return r;
}

Poly Poly::permute_vars(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != nvars_)
    throw std::invalid_argument("permute_vars: wrong permutation size");
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents e2(nvars_, 0);
    for (int i = 0; i < nvars_; ++i) e2[perm[i]] = e[i];
    r.add_term(e2, c);
  }
  return r;
}

Poly Poly::homogenize(int target_degree, int new_var_index) const {
  if (target_degree < total_degree())
    throw std::invalid_argument("homogenize: target degree below polynomial degree");
  Poly shifted = insert_var(new_var_index);
  Poly r(nvars_ + 1);
  for (const auto& [e, c] : shifted.terms()) {
    Exponents e2 = e;
    e2[new_var_index] = target_degree - exponent_sum(e);
    r.terms_.emplace(std::move(e2), c);
  }
  // Rebuild through add_term-free path is safe: distinct inputs stay distinct
  // because they differ outside new_var_index.
  return r;
}

Poly Poly::dehomogenize(int var_index) const {
  if (!is_homogeneous()) throw std::invalid_argument("dehomogenize: input not homogeneous");
  return substitute(var_index, Rational(1)).drop_var(var_index);
}

Poly Poly::compose(std::span<const Poly> inner) const {
  check_arity(nvars_, static_cast<int>(inner.size()), "compose");
  if (inner.empty()) throw std::invalid_argument("compose: no inner polynomials");
  int m = inner[0].nvars();
  for (const Poly& q : inner) check_arity(m, q.nvars(), "compose inner");
  std::vector<std::vector<Poly>> pows(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i)
    pows[i].push_back(Poly::constant(m, Rational(1)));
  Poly r(m);
  for (const auto& [e, c] : terms_) {
    Poly term = Poly::constant(m, c);
    for (std::size_t i = 0; i < inner.size(); ++i) {
      auto& pw = pows[i];
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * inner[i]);
      if (e[i] > 0) term = term * pw[e[i]];
    }
    r += term;
  }
  return r;
}

Poly Poly::reverse_var(int var, int clearing_degree) const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] > clearing_degree)
      throw std::domain_error("reverse_var: exponent exceeds clearing degree");
    Exponents e2 = e;
    e2[var] = clearing_degree - e[var];
    r.add_term(e2, c);
  }
  return r;
}

bool Poly::try_divide(const Poly& divisor, Poly* quotient) const {
  check_arity(nvars_, divisor.nvars(), "divide");
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  Poly rem = *this;
  Poly q(nvars_);
  const Exponents& dl = divisor.leading_exponents();
  const Rational& dc = divisor.leading_coeff();
  while (!rem.is_zero()) {
    const Exponents& rl = rem.leading_exponents();
    Exponents diff(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      diff[i] = rl[i] - dl[i];
      if (diff[i] < 0) return false;
    }
    Poly t = Poly::monomial(nvars_, diff, rem.leading_coeff() / dc);
    q += t;
    rem -= t * divisor;
  }
  if (quotient) *quotient = q;
  return true;
}

bool Poly::square_root(Poly* root) const {
  if (is_zero()) {
    if (root) *root = Poly(nvars_);
    return true;
  }
  int d = total_degree();
  if (d % 2 != 0) return false;
  // The leading monomial of h^2 is the square of the leading monomial of h.
  const Exponents& le = leading_exponents();
  for (int x : le)
    if (x % 2 != 0) return false;
  const Rational& lc = leading_coeff();
  if (lc < 0) return false;
  if (mpz_perfect_square_p(lc.get_num().get_mpz_t()) == 0 ||
      mpz_perfect_square_p(lc.get_den().get_mpz_t()) == 0)
    return false;
  Integer num_root, den_root;
  mpz_sqrt(num_root.get_mpz_t(), lc.get_num().get_mpz_t());
  mpz_sqrt(den_root.get_mpz_t(), lc.get_den().get_mpz_t());
  Exponents he = le;
  for (int& x : he) x /= 2;
  Poly h = Poly::monomial(nvars_, he, Rational(num_root) / Rational(den_root));
  // Grow h term by term: at each step the leading term of (this - h^2) must
  // be divisible by twice the leading term of h.
  Poly lead2 = Rational(2) * Poly::monomial(nvars_, he, h.leading_coeff());
  while (true) {
    Poly rem = *this - h * h;
    if (rem.is_zero()) {
      if (root) *root = h;
      return true;
    }
    const Exponents& rl = rem.leading_exponents();
    Exponents diff(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      diff[i] = rl[i] - he[i];
      if (diff[i] < 0) return false;
    }
    // The correction monomial must sit strictly below the head of h.
    if (!GradedLexDesc{}(he, diff)) return false;
    Poly t = Poly::monomial(nvars_, diff, rem.leading_coeff() / lead2.leading_coeff());
    h += t;
  }
}

namespace {

void enumerate_rec(int nvars, int pos, int remaining, bool exact, Exponents& cur,
                   std::vector<Exponents>& out) {
  if (pos == nvars) {
    if (!exact || remaining == 0) out.push_back(cur);
    return;
  }
  if (pos == nvars - 1 && exact) {
    cur[pos] = remaining;
    out.push_back(cur);
    cur[pos] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[pos] = e;
    enumerate_rec(nvars, pos + 1, remaining - e, exact, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Exponents> monomials_up_to_degree(int nvars, int degree) {
  std::vector<Exponents> out;
  Exponents cur(nvars, 0);
  for (int d = degree; d >= 0; --d) enumerate_rec(nvars, 0, d, true, cur, out);
  return out;
}

std::vector<Exponents> monomials_of_degree(int nvars, int degree) {
  std::vector<Exponents> out;
  Exponents cur(nvars, 0);
  enumerate_rec(nvars, 0, degree, true, cur, out);
  return out;
}

std::vector<Rational> coefficient_vector(const Poly& p,
                                         const std::vector<Exponents>& basis) {
  std::vector<Rational> v;
  v.reserve(basis.size());
  std::size_t found = 0;
  for (const Exponents& e : basis) {
    Rational c = p.coeff(e);
    if (c != 0) ++found;
    v.push_back(c);
  }
  if (found != p.term_count())
    throw std::invalid_argument("coefficient_vector: polynomial has terms outside basis");
  return v;
}

Poly poly_from_coefficients(int nvars, const std::vector<Exponents>& basis,
                            std::span<const Rational> coeffs) {
  if (basis.size() != coeffs.size())
    throw std::invalid_argument("poly_from_coefficients: size mismatch");
  Poly p(nvars);
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coeffs[i]);
  return p;
}

}  // namespace sosgap
