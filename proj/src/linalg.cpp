#include "symstress/linalg.hpp"

#include <stdexcept>

namespace symstress {

Matrix<double> to_double(const Matrix<Rational>& a) {
  Matrix<double> d(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) d(r, c) = a(r, c).get_d();
  return d;
}

Eigen::MatrixXd to_eigen(const Matrix<double>& a) {
  Eigen::MatrixXd e(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      e(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = a(r, c);
  return e;
}

std::vector<std::size_t> rref(Matrix<Rational>& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (sgn(a(r, j)) != 0) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void make_primitive(Vec<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v)
    if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  Integer g = 0;
  for (auto& x : v) {
    x *= l;
    if (sgn(x) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g == 0) return;
  int sign = 0;
  for (const auto& x : v)
    if (sgn(x) != 0) {
      sign = sgn(x);
      break;
    }
  Rational s(g);
  if (sign < 0) s = -s;
  for (auto& x : v) x /= s;
}

NullSpace<Rational> null_space(const Matrix<Rational>& a, double) {
  Matrix<Rational> r = a;
  auto pivots = rref(r);
  NullSpace<Rational> ns;
  ns.rank = pivots.size();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<Rational> v(a.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    make_primitive(v);
    ns.basis.push_back(std::move(v));
  }
  return ns;
}

NullSpace<double> null_space(const Matrix<double>& a, double rel_tol) {
  NullSpace<double> ns;
  const std::size_t n = a.cols();
  if (n == 0) return ns;
  if (a.rows() == 0) {
    for (std::size_t i = 0; i < n; ++i) {
      Vec<double> v(n, 0.0);
      v[i] = 1.0;
      ns.basis.push_back(v);
    }
    return ns;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(a), Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv.size() ? sv(0) : 0.0;
  ns.threshold = rel_tol * smax;
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (smax > 0 && sv(i) > ns.threshold) ++rank;
  ns.rank = rank;
  const auto& V = svd.matrixV();
  for (std::size_t c = rank; c < n; ++c) {
    Vec<double> v(n);
    for (std::size_t i = 0; i < n; ++i)
      v[i] = V(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c));
    ns.basis.push_back(std::move(v));
  }
  return ns;
}

namespace {

std::vector<std::vector<Integer>> integer_rows(const Matrix<Rational>& a) {
  std::vector<std::vector<Integer>> m(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < a.cols(); ++c) {
      Rational x = a(r, c) * l;
      m[r][c] = x.get_num();
    }
  }
  return m;
}

// Fraction-free forward elimination. Returns rank; *sign tracks row swaps.
std::size_t bareiss(std::vector<std::vector<Integer>>& m, std::size_t cols, int* sign) {
  std::size_t rows = m.size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      if (sign) *sign = -*sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank_bareiss(const Matrix<Rational>& a) {
  auto m = integer_rows(a);
  return bareiss(m, a.cols(), nullptr);
}

std::size_t rank(const Matrix<Rational>& a, double) { return rank_bareiss(a); }

std::size_t rank(const Matrix<double>& a, double rel_tol) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(a));
  const auto& sv = svd.singularValues();
  double thr = rel_tol * sv(0);
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(0) > 0 && sv(i) > thr) ++k;
  return k;
}

Rational determinant(const Matrix<Rational>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer scale = 1;
  auto m = integer_rows(a);
  for (std::size_t r = 0; r < n; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    scale *= l;
  }
  int sign = 1;
  if (bareiss(m, n, &sign) < n) return 0;
  Rational d(Integer(m[n - 1][n - 1] * sign), scale);
  d.canonicalize();
  return d;
}

std::optional<Vec<Rational>> solve(const Matrix<Rational>& a, const Vec<Rational>& b) {
  Matrix<Rational> aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto pivots = rref(aug);
  Vec<Rational> x(a.cols(), Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] == a.cols()) return std::nullopt;
    x[pivots[k]] = aug(k, a.cols());
  }
  return x;
}

Vec<double> solve_least_squares(const Matrix<double>& a, const Vec<double>& b, double* residual) {
  Eigen::MatrixXd A = to_eigen(a);
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(b.size()));
  for (std::size_t i = 0; i < b.size(); ++i) rhs(static_cast<Eigen::Index>(i)) = b[i];
  Eigen::VectorXd x = A.completeOrthogonalDecomposition().solve(rhs);
  if (residual) *residual = (A * x - rhs).norm();
  return Vec<double>(x.data(), x.data() + x.size());
}

Vec<Rational> RowSpace::reduce(Vec<Rational> v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& f = v[pivots_[k]];
    if (sgn(f) == 0) continue;
    Rational ff = f;
    for (std::size_t j = 0; j < dim_; ++j)
      if (sgn(rows_[k][j]) != 0) v[j] -= ff * rows_[k][j];
  }
  return v;
}

bool RowSpace::add(Vec<Rational> v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < dim_ && sgn(v[p]) == 0) ++p;
  if (p == dim_) return false;
  Rational inv = 1 / v[p];
  for (auto& x : v) x *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool RowSpace::contains(Vec<Rational> v) const {
  v = reduce(std::move(v));
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

std::vector<Vec<Rational>> RowSpace::basis() const {
  std::vector<Vec<Rational>> out = rows_;
  for (auto& v : out) make_primitive(v);
  return out;
}

}  // namespace symstress
