#include "lndlab/denslab/linalg.hpp"

#include <utility>

#include <gmpxx.h>

namespace lnd::denslab {

namespace {

struct GaussInt {
  mpz_class re = 0;
  mpz_class im = 0;

  bool is_zero() const { return re == 0 && im == 0; }
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt sub(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }

// Exact division in Z[i]; throws if the quotient is not integral.
GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
  const mpz_class norm = b.re * b.re + b.im * b.im;
  const mpz_class re = a.re * b.re + a.im * b.im;
  const mpz_class im = a.im * b.re - a.re * b.im;
  if (!mpz_divisible_p(re.get_mpz_t(), norm.get_mpz_t()) || !mpz_divisible_p(im.get_mpz_t(), norm.get_mpz_t())) {
    throw InvariantFailure("Bareiss step produced a non-integral quotient");
  }
  return {re / norm, im / norm};
}

}  // namespace

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ArityMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

std::size_t rank(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<GaussInt>> a(rows, std::vector<GaussInt>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class den = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      den = lcm(den, m.at(r, c).re().get_den());
      den = lcm(den, m.at(r, c).im().get_den());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const Coeff& v = m.at(r, c);
      a[r][c].re = v.re().get_num() * (den / v.re().get_den());
      a[r][c].im = v.im().get_num() * (den / v.im().get_den());
    }
  }

  GaussInt prev{1, 0};
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = exact_div(sub(mul(a[r][c], a[i][j]), mul(a[i][c], a[r][j])), prev);
      }
      a[i][c] = GaussInt{};
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

Rref rref(Matrix m) {
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    }
    const Coeff inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      const Coeff f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m.at(r, j).is_zero()) m.at(i, j) -= f * m.at(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::vector<Vec> nullspace(const Matrix& m) {
  Rref e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced.at(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace lnd::denslab
