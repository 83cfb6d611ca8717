#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hjac/ideal.hpp"
#include "hjac/polynomial.hpp"

namespace hjac {

/// Dense matrix of polynomials over one ring. As a presentation matrix,
/// columns correspond to module generators and rows to relations.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  /// Throws DomainError on ragged input or mixed rings.
  PolyMatrix(RingPtr ring, std::vector<std::vector<Polynomial>> entries);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Polynomial value);

  PolyMatrix transposed() const;
  PolyMatrix with_permuted(const std::vector<std::size_t>& row_perm,
                           const std::vector<std::size_t>& col_perm) const;

 private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> data_;
};

using PresentationMatrix = PolyMatrix;

/// The n-th Jacobian matrix of f. Rows are indexed by beta with
/// 0 <= |beta| <= n-1, columns by alpha with 1 <= |alpha| <= n, both in
/// graded-lex order (degree ascending, lex descending within a degree).
/// Entry (beta, alpha) is the Hasse derivative D^(alpha-beta) f when alpha
/// strictly dominates beta, and 0 otherwise (in particular on the diagonal).
struct JacobianMatrix {
  Polynomial f;
  unsigned order;
  std::vector<MultiIndex> row_indices;
  std::vector<MultiIndex> col_indices;
  PolyMatrix entries;
};

/// Throws DomainError for f = 0 or n = 0.
JacobianMatrix jac_matrix(const Polynomial& f, unsigned n);

/// Shape C(d-1+n, d) x (C(d+n, d) - 1) without building the matrix.
std::pair<std::size_t, std::size_t> jac_matrix_shape(std::size_t d, unsigned n);

/// All k x k minors, row subsets outer and column subsets inner, both in
/// lexicographic order. Determinants are expanded along rows with sub-minors
/// shared between column subsets. Zero minors are dropped unless
/// `keep_zeros` is set. Throws DomainError if k is 0 or exceeds a dimension.
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k, bool keep_zeros = false);

/// Fitt_k of the module presented by m (g = m.cols() generators): the ideal
/// of (g-k) x (g-k) minors; the unit ideal when g-k <= 0 and the zero ideal
/// when g-k exceeds the number of relations.
Ideal fitting_ideal(const PolyMatrix& m, long k);

/// J_n(f): the ideal of maximal minors of Jac_n(f).
Ideal higher_jacobian_ideal(const Polynomial& f, unsigned n);

/// j(f) = (df/dx_1, ..., df/dx_d).
Ideal jacobian_ideal(const Polynomial& f);

/// (f_x^3, f_x^2 f_y, f_x f_y^2, f_y^3, f_xx f_y^2 - 2 f_xy f_x f_y + f_x^2 f_yy)
/// with classical partials. Plane curves only, characteristic != 2.
Ideal j2_plane_closed_form(const Polynomial& f);

/// Aligned text grid with multi-index labels and a shape header.
std::string render_matrix(const JacobianMatrix& jac);

/// "(a,b,c)" label for a multi-index.
std::string format_multi_index(const MultiIndex& m);

}  // namespace hjac
