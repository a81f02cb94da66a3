#include "sosgap/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace sosgap {

std::vector<int> rref(Mat& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  int nrows = static_cast<int>(a.size());
  int ncols = static_cast<int>(a[0].size());
  int row = 0;
  for (int col = 0; col < ncols && row < nrows; ++col) {
    int piv = -1;
    for (int i = row; i < nrows; ++i)
      if (a[i][col] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[piv], a[row]);
    Rational inv = a[row][col];
    for (int j = col; j < ncols; ++j) a[row][j] /= inv;
    for (int i = 0; i < nrows; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (int j = col; j < ncols; ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(Mat a) { return static_cast<int>(rref(a).size()); }

std::vector<Vec> nullspace(const Mat& a, int ncols) {
  Mat r = a;
  for (const Vec& row : r)
    if (static_cast<int>(row.size()) != ncols)
      throw std::invalid_argument("nullspace: ragged matrix");
  std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(ncols, Rational(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: size mismatch");
  if (a.empty()) return Vec{};
  int ncols = static_cast<int>(a[0].size());
  Mat aug = a;
  for (std::size_t i = 0; i < a.size(); ++i) aug[i].push_back(b[i]);
  std::vector<int> pivots = rref(aug);
  // Inconsistent iff a pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
  Vec x(ncols, Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][ncols];
  return x;
}

bool in_row_span(const Mat& rows, const Vec& v) {
  Mat m = rows;
  int r0 = rank(m);
  m.push_back(v);
  return rank(m) == r0;
}

std::optional<Vec> coordinates_in_span(const Mat& rows, const Vec& v) {
  // Transpose: columns are the spanning rows.
  if (rows.empty()) return v.empty() ? std::optional<Vec>(Vec{}) : std::nullopt;
  std::size_t ncols = rows[0].size();
  Mat t(ncols, Vec(rows.size(), Rational(0)));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j) t[j][i] = rows[i][j];
  return solve(t, v);
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational det(Mat a) {
  int n = static_cast<int>(a.size());
  for (const Vec& row : a)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("det: not square");
  Rational d(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (a[i][col] != 0) { piv = i; break; }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      d = -d;
    }
    d *= a[col][col];
    Rational inv = a[col][col];
    for (int i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      Rational f = a[i][col] / inv;
      for (int j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return d;
}

}  // namespace sosgap
