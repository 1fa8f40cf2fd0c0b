// Dense exact linear algebra over the complex rationals. Gaussian
// elimination with exact division, so rank / span / nullspace answers carry
// no tolerance parameter.

#pragma once

#include <cstddef>
#include <vector>

#include "opset/scalar.hpp"

namespace opset {

using Vec = std::vector<Scalar>;

class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Mat adjoint() const;
  bool is_hermitian() const;
  bool is_zero() const;

  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b);

  Mat scaled(const Scalar& c) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

Vec operator*(const Mat& m, const Vec& v);

/// ⟨u|v⟩, conjugate-linear in the first argument.
Scalar inner(const Vec& u, const Vec& v);

bool is_zero(const Vec& v);
Vec scaled(const Vec& v, const Scalar& c);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);

/// Kronecker product; index of (i, j) is i * dim(b) + j.
Vec kron(const Vec& a, const Vec& b);

/// True iff u = c v or v = c u for some scalar c (cross-ratio test,
/// no divisions). Zero vectors are proportional to everything.
bool proportional(const Vec& u, const Vec& v);

/// Canonical representative of the ray through v: v scaled so its first
/// nonzero coordinate equals 1. Zero vector maps to itself.
Vec ray_canonical(const Vec& v);

struct Rref {
  Mat m;                          // reduced row-echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

/// Canonical reduced row-echelon form (topmost-nonzero pivoting, pivots
/// normalised to 1). Unique per row span, so usable for span equality.
Rref rref(const Mat& m);

std::size_t rank(const Mat& m);

/// Right nullspace { x : m x = 0 } as the canonical RREF-derived basis:
/// one vector per free column, free coordinate set to 1.
std::vector<Vec> nullspace(const Mat& m);

/// Rows spanning a subspace -> matrix with those rows.
Mat rows_matrix(const std::vector<Vec>& rows);

/// Membership of v in the row span of basis (exact).
bool in_span(const std::vector<Vec>& basis, const Vec& v);

/// Gram-Schmidt without normalisation; zero vectors are dropped. The
/// result is pairwise orthogonal with the same span.
std::vector<Vec> gram_schmidt(const std::vector<Vec>& vs);

/// Orthogonal projector onto span(vs) as an exact matrix.
Mat projector_onto(const std::vector<Vec>& vs, std::size_t dim);

/// Vectors orthogonal to every element of vs (i.e. the orthogonal
/// complement of their span), canonical basis.
std::vector<Vec> orthogonal_complement(const std::vector<Vec>& vs, std::size_t dim);

/// Canonical identifier of span(vs): rank, pivot columns, then the RREF
/// entries. Equal keys iff equal spans; the ordering puts lower-index
/// coordinate subspaces first.
std::string span_key(const std::vector<Vec>& vs);

}  // namespace opset
