#ifndef FOCKALG_LINALG_HPP
#define FOCKALG_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "fockalg/matrix.hpp"
#include "fockalg/scalar.hpp"

namespace fockalg {

using ScalarMatrix = Matrix<Scalar>;
using ScalarVector = std::vector<Scalar>;

/// Widest scalar mode among the entries (ExactRational for an empty matrix).
ScalarMode matrix_mode(const ScalarMatrix& m);
bool is_exact(const ScalarMatrix& m);
ScalarMatrix to_mode(const ScalarMatrix& m, ScalarMode mode);

ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarVector multiply(const ScalarMatrix& a, const ScalarVector& x);
ScalarMatrix conjugate_transpose(const ScalarMatrix& m);
bool is_hermitian(const ScalarMatrix& m, double tol = kDefaultTolerance);

// ---- exact routes ----------------------------------------------------------

/// Rank by fraction-free (Bareiss) elimination. Rows are cleared of
/// denominators first, so elimination runs over Z or Z[i].
std::size_t bareiss_rank(const ScalarMatrix& m);

/// Leading principal minors det(M[0..k, 0..k]) for k = 0, 1, ...; stops
/// after the first zero minor. Exact input only.
ScalarVector leading_principal_minors(const ScalarMatrix& m);

/// Reduced row echelon form with lexicographic pivoting (first nonzero
/// entry scanning rows top-down).
struct RowEchelon {
  ScalarMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::vector<std::size_t> free;    // non-pivot columns, ascending
  std::size_t rank() const { return pivots.size(); }
};

RowEchelon row_reduce(const ScalarMatrix& m);

/// Kernel basis read off the echelon form: one vector per free column f,
/// with 1 at f and zeros at the other free columns.
std::vector<ScalarVector> kernel_basis(const RowEchelon& echelon);

struct SolveResult {
  std::optional<ScalarMatrix> solution;
  /// First row (in the augmented elimination) that exposed an
  /// inconsistency, as an index into the original rows.
  std::optional<std::size_t> inconsistent_row;
  /// Dimension of the solution space of the homogeneous system.
  std::size_t free_dimension = 0;
};

/// Solves A X = B exactly. Free variables are set to zero.
SolveResult solve_particular(const ScalarMatrix& a, const ScalarMatrix& b);

/// Exact inverse, nullopt when singular.
std::optional<ScalarMatrix> inverse(const ScalarMatrix& m);

// ---- floating routes -------------------------------------------------------

/// Rank counting singular values above rel_tol * sigma_max.
std::size_t float_rank(const ScalarMatrix& m, double rel_tol = kDefaultTolerance);

/// Ascending eigenvalues of a Hermitian matrix.
std::vector<double> hermitian_eigenvalues(const ScalarMatrix& m);

/// 2-norm condition number sigma_max / sigma_min (infinity when singular).
double condition_number(const ScalarMatrix& m);

}  // namespace fockalg

#endif  // FOCKALG_LINALG_HPP
