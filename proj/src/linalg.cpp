#include "fockalg/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

namespace fockalg {

ScalarMode matrix_mode(const ScalarMatrix& m) {
  ScalarMode mode = ScalarMode::ExactRational;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) mode = wider(mode, m(r, c).mode());
  return mode;
}

bool is_exact(const ScalarMatrix& m) { return matrix_mode(m) != ScalarMode::ComplexFloat; }

ScalarMatrix to_mode(const ScalarMatrix& m, ScalarMode mode) {
  ScalarMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).to_mode(mode);
  return out;
}

ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b) {
  ScalarMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k).is_exact() && a(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

ScalarVector multiply(const ScalarMatrix& a, const ScalarVector& x) {
  ScalarVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a(r, c) * x[c];
  return out;
}

ScalarMatrix conjugate_transpose(const ScalarMatrix& m) {
  ScalarMatrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c).conj();
  return t;
}

bool is_hermitian(const ScalarMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = r; c < m.cols(); ++c)
      if (!approx_equal(m(r, c), m(c, r).conj(), tol)) return false;
  return true;
}

namespace {

/// Element of Z[i]; Bareiss only needs ring operations plus exact division.
struct GaussianInteger {
  mpz_class re;
  mpz_class im;

  bool is_zero() const { return re == 0 && im == 0; }

  friend GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianInteger operator-(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re - b.re, a.im - b.im};
  }

  GaussianInteger divexact(const GaussianInteger& d) const {
    mpz_class n2 = d.re * d.re + d.im * d.im;
    GaussianInteger num = *this * GaussianInteger{d.re, -d.im};
    GaussianInteger q;
    mpz_divexact(q.re.get_mpz_t(), num.re.get_mpz_t(), n2.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), num.im.get_mpz_t(), n2.get_mpz_t());
    return q;
  }
};

bool ring_is_zero(const mpz_class& v) { return v == 0; }
bool ring_is_zero(const GaussianInteger& v) { return v.is_zero(); }

mpz_class ring_divexact(const mpz_class& a, const mpz_class& d) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}
GaussianInteger ring_divexact(const GaussianInteger& a, const GaussianInteger& d) {
  return a.divexact(d);
}

template <typename T>
std::size_t bareiss_rank_impl(Matrix<T> m, const T& one) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  T prev = one;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && ring_is_zero(m(pivot, col))) ++pivot;
    if (pivot == rows) continue;
    m.swap_rows(pivot, rank);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        T num = m(rank, col) * m(r, c) - m(r, col) * m(rank, c);
        m(r, c) = ring_divexact(num, prev);
      }
      m(r, col) = T{};
    }
    prev = m(rank, col);
    ++rank;
  }
  return rank;
}

mpz_class lcm_of_row_denominators(const ScalarMatrix& m, std::size_t r) {
  mpz_class l = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    ComplexRational v = m(r, c).exact_complex();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.re.get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.im.get_den_mpz_t());
  }
  return l;
}

Eigen::MatrixXcd to_eigen(const ScalarMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c).to_complex();
  return e;
}

double max_abs(const ScalarMatrix& m) {
  double best = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) best = std::max(best, std::abs(m(r, c).to_complex()));
  return best;
}

}  // namespace

std::size_t bareiss_rank(const ScalarMatrix& m) {
  const ScalarMode mode = matrix_mode(m);
  if (mode == ScalarMode::ComplexFloat)
    throw ScalarError("bareiss_rank requires an exact matrix; use float_rank");

  if (mode == ScalarMode::ExactRational) {
    Matrix<mpz_class> z(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      mpz_class scale = lcm_of_row_denominators(m, r);
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const Rational& v = *m(r, c).as_rational();
        z(r, c) = v.get_num() * (scale / v.get_den());
      }
    }
    return bareiss_rank_impl(std::move(z), mpz_class(1));
  }

  Matrix<GaussianInteger> z(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class scale = lcm_of_row_denominators(m, r);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      ComplexRational v = m(r, c).exact_complex();
      z(r, c) = {v.re.get_num() * (scale / v.re.get_den()),
                 v.im.get_num() * (scale / v.im.get_den())};
    }
  }
  return bareiss_rank_impl(std::move(z), GaussianInteger{1, 0});
}

ScalarVector leading_principal_minors(const ScalarMatrix& m) {
  if (!is_exact(m)) throw ScalarError("leading_principal_minors requires an exact matrix");
  ScalarMatrix a = m;
  const std::size_t n = std::min(a.rows(), a.cols());
  ScalarVector minors;
  Scalar det(1);
  for (std::size_t k = 0; k < n; ++k) {
    det *= a(k, k);
    minors.push_back(det);
    if (a(k, k).is_zero()) break;
    for (std::size_t r = k + 1; r < a.rows(); ++r) {
      if (a(r, k).is_zero()) continue;
      Scalar factor = a(r, k) / a(k, k);
      for (std::size_t c = k; c < a.cols(); ++c) a(r, c) -= factor * a(k, c);
    }
  }
  return minors;
}

RowEchelon row_reduce(const ScalarMatrix& m) {
  RowEchelon out{m, {}, {}};
  ScalarMatrix& a = out.reduced;
  const bool exact = is_exact(a);
  const double tol = exact ? 0.0 : kDefaultTolerance * std::max(1.0, max_abs(a));
  auto negligible = [&](const Scalar& v) {
    return exact ? v.is_zero() : std::abs(v.to_complex()) <= tol;
  };

  std::size_t row = 0;
  std::size_t col = 0;
  for (; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = a.rows();
    if (exact) {
      for (std::size_t r = row; r < a.rows(); ++r)
        if (!a(r, col).is_zero()) {
          pivot = r;
          break;
        }
    } else {
      double best = tol;
      for (std::size_t r = row; r < a.rows(); ++r) {
        double v = std::abs(a(r, col).to_complex());
        if (v > best) {
          best = v;
          pivot = r;
        }
      }
    }
    if (pivot == a.rows()) {
      out.free.push_back(col);
      continue;
    }
    a.swap_rows(pivot, row);
    Scalar inv = Scalar(1) / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || negligible(a(r, col))) {
        if (r != row && !exact) a(r, col) = Scalar(ComplexFloat(0.0, 0.0));
        continue;
      }
      Scalar factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= factor * a(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  for (; col < a.cols(); ++col) out.free.push_back(col);
  return out;
}

std::vector<ScalarVector> kernel_basis(const RowEchelon& echelon) {
  const ScalarMatrix& a = echelon.reduced;
  ScalarMode mode = matrix_mode(a);
  std::vector<ScalarVector> basis;
  for (std::size_t f : echelon.free) {
    ScalarVector v(a.cols(), Scalar(0).to_mode(mode));
    v[f] = Scalar(1).to_mode(mode);
    for (std::size_t r = 0; r < echelon.pivots.size(); ++r) v[echelon.pivots[r]] = -a(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult solve_particular(const ScalarMatrix& a, const ScalarMatrix& b) {
  ScalarMatrix aug(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, a.cols() + c) = b(r, c);
  }

  // Track where each row ends up so an inconsistency can be traced back.
  ScalarMatrix tagged(a.rows(), a.cols() + b.cols() + a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < aug.cols(); ++c) tagged(r, c) = aug(r, c);
    tagged(r, aug.cols() + r) = Scalar(1);
  }
  RowEchelon ech = row_reduce(tagged);

  SolveResult result;
  std::size_t coefficient_pivots = 0;
  for (std::size_t p : ech.pivots)
    if (p < a.cols()) ++coefficient_pivots;
  result.free_dimension = a.cols() - coefficient_pivots;

  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    std::size_t p = ech.pivots[r];
    if (p >= a.cols() && p < aug.cols()) {
      // Row reduced to 0 = nonzero. The last original row in the
      // combination is the one whose addition broke consistency.
      for (std::size_t k = a.rows(); k-- > 0;)
        if (!ech.reduced(r, aug.cols() + k).is_zero()) {
          result.inconsistent_row = k;
          break;
        }
      if (!result.inconsistent_row) result.inconsistent_row = 0;
      return result;
    }
  }

  ScalarMode mode = wider(matrix_mode(a), matrix_mode(b));
  ScalarMatrix x(a.cols(), b.cols(), Scalar(0).to_mode(mode));
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    std::size_t p = ech.pivots[r];
    if (p >= a.cols()) break;
    for (std::size_t c = 0; c < b.cols(); ++c) x(p, c) = ech.reduced(r, a.cols() + c);
  }
  result.solution = std::move(x);
  return result;
}

std::optional<ScalarMatrix> inverse(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  ScalarMode mode = matrix_mode(m);
  ScalarMatrix id = ScalarMatrix::identity(m.rows(), Scalar(1).to_mode(mode), Scalar(0).to_mode(mode));
  SolveResult s = solve_particular(m, id);
  if (!s.solution || s.free_dimension != 0) return std::nullopt;
  return s.solution;
}

std::size_t float_rank(const ScalarMatrix& m, double rel_tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  std::size_t rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > rel_tol * sv(0)) ++rank;
  return rank;
}

std::vector<double> hermitian_eigenvalues(const ScalarMatrix& m) {
  if (m.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

double condition_number(const ScalarMatrix& m) {
  if (m.rows() == 0) return 1.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
  const auto& sv = svd.singularValues();
  double smin = sv(sv.size() - 1);
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / smin;
}

}  // namespace fockalg
