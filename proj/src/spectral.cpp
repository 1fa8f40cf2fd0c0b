#include "opset/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace opset {

namespace {

constexpr unsigned kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
                                97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151};

Eigen::MatrixXcd to_numeric(const Mat& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = std::complex<double>(m.at(i, j).re.get_d(), m.at(i, j).im.get_d());
  return out;
}

// Restriction of m to the block in the block's own (orthogonal, possibly
// unnormalised) basis: m v_j = sum_i R_ij v_i. Similar to a Hermitian
// matrix, so its spectrum is real. Returns nullopt when m does not map the
// block into itself.
std::optional<Mat> restriction(const Mat& m, const std::vector<Vec>& basis) {
  Mat r(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Vec img = m * basis[j];
    Vec residue = img;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Scalar c = inner(basis[i], img) / Scalar(inner(basis[i], basis[i]));
      r.at(i, j) = c;
      if (!c.is_zero()) residue = sub(residue, scaled(basis[i], c));
    }
    if (!is_zero(residue)) return std::nullopt;
  }
  return r;
}

bool is_scalar_matrix(const Mat& r) {
  if (r.rows() == 0) return true;
  const Scalar& lambda = r.at(0, 0);
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) {
      if (i == j ? (r.at(i, j) != lambda) : !r.at(i, j).is_zero()) return false;
    }
  return true;
}

}  // namespace

std::optional<Rational> rationalize(double x, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  // Continued fraction convergents h_n / k_n until one lands within tol.
  long long pa = 0, qa = 1;  // h_{-2}, k_{-2}
  long long pb = 1, qb = 0;  // h_{-1}, k_{-1}
  double v = x;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(v);
    if (fl > 9e17 || fl < -9e17) return std::nullopt;
    long long a = static_cast<long long>(fl);
    long long pn = a * pb + pa;
    long long qn = a * qb + qa;
    if (qn == 0) return std::nullopt;
    double approx = static_cast<double>(pn) / static_cast<double>(qn);
    if (std::abs(x - approx) <= tol) {
      Rational r = Rational(mpz_class(static_cast<long>(pn))) /
                   Rational(mpz_class(static_cast<long>(qn)));
      return r;
    }
    pa = pb;
    qa = qb;
    pb = pn;
    qb = qn;
    double rem = v - fl;
    if (rem < 1e-15) return std::nullopt;
    v = 1.0 / rem;
  }
  return std::nullopt;
}

std::optional<std::vector<std::pair<Rational, std::vector<Vec>>>> exact_eigenspaces(
    const Mat& a) {
  std::size_t n = a.rows();
  if (n == 0) return std::vector<std::pair<Rational, std::vector<Vec>>>{};
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(to_numeric(a));
  if (solver.info() != Eigen::Success) return std::nullopt;
  std::vector<double> evs;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
    evs.push_back(solver.eigenvalues()[i].real());
  std::sort(evs.begin(), evs.end());
  // Cluster numeric eigenvalues, then verify each cluster's rationalised
  // centre exactly.
  std::vector<Rational> candidates;
  std::size_t i = 0;
  while (i < evs.size()) {
    std::size_t j = i;
    while (j + 1 < evs.size() && evs[j + 1] - evs[j] < 1e-8) ++j;
    auto r = rationalize(evs[(i + j) / 2], 1e-7);
    if (!r) return std::nullopt;
    candidates.push_back(*r);
    i = j + 1;
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<std::pair<Rational, std::vector<Vec>>> out;
  std::size_t total = 0;
  for (const Rational& lambda : candidates) {
    Mat shifted = a;
    for (std::size_t k = 0; k < n; ++k)
      shifted.at(k, k) = shifted.at(k, k) - Scalar(lambda);
    std::vector<Vec> space = nullspace(shifted);
    if (space.empty()) continue;
    total += space.size();
    out.emplace_back(lambda, std::move(space));
  }
  if (total != n) return std::nullopt;
  return out;
}

bool pairwise_commuting(const std::vector<Mat>& family) {
  // A commuting family of Hermitians on C^d is simultaneously
  // diagonalizable, so it spans at most d dimensions; larger families of
  // independent operators cannot commute.
  if (!family.empty() && family.size() > family[0].rows()) return false;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!(family[i] * family[j] - family[j] * family[i]).is_zero()) return false;
  return true;
}

BlockDecomposition joint_eigenblocks(const std::vector<Mat>& family, std::size_t dim) {
  BlockDecomposition result;
  std::vector<Vec> full;
  for (std::size_t i = 0; i < dim; ++i) {
    Vec e(dim);
    e[i] = Scalar(1);
    full.push_back(std::move(e));
  }
  result.blocks.push_back(std::move(full));
  if (family.empty()) return result;

  std::vector<Mat> ops;
  {
    Mat generic(dim, dim);
    for (std::size_t k = 0; k < family.size(); ++k) {
      unsigned prime = kPrimes[k % (sizeof(kPrimes) / sizeof(kPrimes[0]))];
      generic = generic + family[k].scaled(Scalar(static_cast<long>(prime)));
    }
    ops.push_back(std::move(generic));
  }
  ops.insert(ops.end(), family.begin(), family.end());

  for (const Mat& op : ops) {
    std::vector<std::vector<Vec>> next;
    for (std::vector<Vec>& block : result.blocks) {
      if (block.size() <= 1) {
        next.push_back(std::move(block));
        continue;
      }
      auto r = restriction(op, block);
      if (!r) {
        // A commuting family preserves each accumulated eigenspace; a
        // failure here means the family was not actually commuting.
        throw Error("internal: block not invariant under commuting family");
      }
      if (is_scalar_matrix(*r)) {
        next.push_back(std::move(block));
        continue;
      }
      auto eig = exact_eigenspaces(*r);
      if (!eig) {
        // Irrational spectrum on this block: leave it unsplit.
        result.exact = false;
        next.push_back(std::move(block));
        continue;
      }
      for (auto& [lambda, sub] : *eig) {
        std::vector<Vec> lifted;
        for (const Vec& coeffs : sub) {
          Vec v(dim);
          for (std::size_t t = 0; t < block.size(); ++t)
            if (!coeffs[t].is_zero()) v = add(v, scaled(block[t], coeffs[t]));
          lifted.push_back(std::move(v));
        }
        next.push_back(gram_schmidt(lifted));
      }
    }
    result.blocks = std::move(next);
  }

  std::sort(result.blocks.begin(), result.blocks.end(),
            [](const std::vector<Vec>& a, const std::vector<Vec>& b) {
              return span_key(a) < span_key(b);
            });
  return result;
}

}  // namespace opset
