#include "opset/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace opset {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Mat Mat::adjoint() const {
  Mat r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

bool Mat::is_hermitian() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (at(i, j) != at(j, i).conj()) return false;
  return true;
}

bool Mat::is_zero() const {
  for (const auto& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

Mat operator+(const Mat& a, const Mat& b) {
  Mat r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
  return r;
}

Mat operator-(const Mat& a, const Mat& b) {
  Mat r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
  return r;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  Mat r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Mat Mat::scaled(const Scalar& c) const {
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

Vec operator*(const Mat& m, const Vec& v) {
  if (m.cols() != v.size()) throw DimensionError("matrix-vector shape mismatch");
  Vec r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Scalar acc;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!v[j].is_zero() && !m.at(i, j).is_zero()) acc += m.at(i, j) * v[j];
    r[i] = acc;
  }
  return r;
}

Scalar inner(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) throw DimensionError("inner product length mismatch");
  Scalar acc;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!u[i].is_zero() && !v[i].is_zero()) acc += u[i].conj() * v[i];
  return acc;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec scaled(const Vec& v, const Scalar& c) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec kron(const Vec& a, const Vec& b) {
  Vec r(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i * b.size() + j] = a[i] * b[j];
  }
  return r;
}

bool proportional(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) throw DimensionError("proportionality length mismatch");
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  return true;
}

Vec ray_canonical(const Vec& v) {
  for (const Scalar& s : v) {
    if (!s.is_zero()) {
      Vec r(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / s;
      return r;
    }
  }
  return v;
}

Rref rref(const Mat& m) {
  Mat w = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < w.cols() && row < w.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < w.rows() && w.at(pivot, col).is_zero()) ++pivot;
    if (pivot == w.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < w.cols(); ++j) std::swap(w.at(pivot, j), w.at(row, j));
    Scalar inv = Scalar(1) / w.at(row, col);
    for (std::size_t j = col; j < w.cols(); ++j) w.at(row, j) = w.at(row, j) * inv;
    for (std::size_t r = 0; r < w.rows(); ++r) {
      if (r == row || w.at(r, col).is_zero()) continue;
      Scalar f = w.at(r, col);
      for (std::size_t j = col; j < w.cols(); ++j)
        w.at(r, j) = w.at(r, j) - f * w.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  Mat out(pivots.size(), w.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < w.cols(); ++j) out.at(r, j) = w.at(r, j);
  return Rref{std::move(out), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

std::vector<Vec> nullspace(const Mat& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec x(m.cols());
    x[free] = Scalar(1);
    for (std::size_t row = 0; row < r.pivots.size(); ++row)
      x[r.pivots[row]] = -r.m.at(row, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

Mat rows_matrix(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat(0, 0);
  Mat m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw DimensionError("ragged rows in rows_matrix");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  Mat with = rows_matrix(basis);
  std::vector<Vec> all = basis;
  all.push_back(v);
  return rank(with) == rank(rows_matrix(all));
}

std::vector<Vec> gram_schmidt(const std::vector<Vec>& vs) {
  std::vector<Vec> out;
  for (const Vec& v : vs) {
    Vec w = v;
    for (const Vec& u : out) {
      Scalar c = inner(u, w) / inner(u, u);
      if (!c.is_zero()) w = sub(w, scaled(u, c));
    }
    if (!is_zero(w)) out.push_back(std::move(w));
  }
  return out;
}

Mat projector_onto(const std::vector<Vec>& vs, std::size_t dim) {
  Mat p(dim, dim);
  for (const Vec& u : gram_schmidt(vs)) {
    Scalar n = Scalar(inner(u, u));
    for (std::size_t i = 0; i < dim; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim; ++j)
        p.at(i, j) += u[i] * u[j].conj() / n;
    }
  }
  return p;
}

std::string span_key(const std::vector<Vec>& vs) {
  Rref r = rref(rows_matrix(vs));
  std::ostringstream os;
  os << "r" << r.pivots.size() << ";p";
  for (std::size_t p : r.pivots) os << p << ",";
  os << ";";
  for (std::size_t i = 0; i < r.m.rows(); ++i)
    for (std::size_t j = 0; j < r.m.cols(); ++j) os << scalar_to_string(r.m.at(i, j)) << ",";
  return os.str();
}

std::vector<Vec> orthogonal_complement(const std::vector<Vec>& vs, std::size_t dim) {
  // x ⊥ v for all v  <=>  (conj v) · x = 0 row-wise.
  std::vector<Vec> rows;
  for (const Vec& v : vs) {
    Vec r(dim);
    for (std::size_t i = 0; i < dim; ++i) r[i] = v[i].conj();
    rows.push_back(std::move(r));
  }
  if (rows.empty()) {
    std::vector<Vec> full;
    for (std::size_t i = 0; i < dim; ++i) {
      Vec e(dim);
      e[i] = Scalar(1);
      full.push_back(std::move(e));
    }
    return full;
  }
  return nullspace(rows_matrix(rows));
}

}  // namespace opset
