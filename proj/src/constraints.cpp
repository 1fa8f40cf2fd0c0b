#include "opset/constraints.hpp"

namespace opset {

namespace {

std::size_t num_params(std::size_t d) { return d * d; }

// Parameter layout: x[0..d) diagonal entries, then for each k < l the pair
// (Re H_kl, Im H_kl) in row-major order of (k, l).
std::size_t offdiag_index(std::size_t d, std::size_t k, std::size_t l) {
  // Count pairs (k', l') with k' < l' preceding (k, l) row-major.
  std::size_t idx = 0;
  for (std::size_t r = 0; r < k; ++r) idx += d - r - 1;
  idx += l - k - 1;
  return d + 2 * idx;
}

Scalar bystander_product(const StateSet& s, std::size_t i, std::size_t j,
                         std::size_t party) {
  Scalar acc(1);
  for (std::size_t p = 0; p < s.num_parties(); ++p) {
    if (p == party) continue;
    acc = acc * inner_product(s.states[i].factors[p], s.states[j].factors[p]);
    if (acc.is_zero()) return acc;
  }
  return acc;
}

}  // namespace

Mat hermitian_from_params(const Vec& params, std::size_t d) {
  Mat h(d, d);
  for (std::size_t k = 0; k < d; ++k) h.at(k, k) = params[k];
  std::size_t idx = d;
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = k + 1; l < d; ++l) {
      const Scalar& re = params[idx++];
      const Scalar& im = params[idx++];
      h.at(k, l) = Scalar(re.re, im.re);
      h.at(l, k) = Scalar(re.re, -im.re);
    }
  return h;
}

ConstraintDerivation derive_constraint_space(const StateSet& s, std::size_t party) {
  if (party >= s.num_parties()) throw DimensionError("invalid party index");
  OrthogonalityReport rep = is_orthogonal_set(s);
  if (!rep.orthogonal)
    throw PreconditionError("derive_constraint_space requires an orthogonal set");
  std::size_t d = s.dims[party];
  std::size_t np = num_params(d);

  std::vector<ConstraintRecord> records;
  std::vector<Vec> rows;  // real rows over the parameter vector
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      Scalar beta = bystander_product(s, i, j, party);
      bool active = !beta.is_zero();
      records.push_back(ConstraintRecord{i, j, beta, active});
      if (!active) continue;
      const Vec& ai = s.states[i].factors[party].coords;
      const Vec& aj = s.states[j].factors[party].coords;
      // Active pairs of an orthogonal set have orthogonal measured factors;
      // proportional nonzero factors here would contradict orthogonality.
      if (!inner(ai, aj).is_zero())
        throw Error("internal: active pair with nonorthogonal measured factors");
      // ⟨a_i|H|a_j⟩ = sum over entries; collect complex coefficient per
      // parameter, then split into two real rows.
      Vec coeff(np);  // complex coefficient of each real parameter
      for (std::size_t k = 0; k < d; ++k) {
        Scalar base = ai[k].conj() * aj[k];
        if (!base.is_zero()) coeff[k] += base;
      }
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = k + 1; l < d; ++l) {
          // H_kl = x + iy contributes conj(a_i[k]) a_j[l] (x + iy)
          // and H_lk = x - iy contributes conj(a_i[l]) a_j[k] (x - iy).
          Scalar c_kl = ai[k].conj() * aj[l];
          Scalar c_lk = ai[l].conj() * aj[k];
          std::size_t idx = offdiag_index(d, k, l);
          coeff[idx] += c_kl + c_lk;
          coeff[idx + 1] += (c_kl - c_lk) * Scalar(Rational(0), Rational(1));
        }
      }
      Vec re_row(np), im_row(np);
      bool re_nz = false, im_nz = false;
      for (std::size_t t = 0; t < np; ++t) {
        re_row[t] = Scalar(coeff[t].re);
        im_row[t] = Scalar(coeff[t].im);
        re_nz = re_nz || !re_row[t].is_zero();
        im_nz = im_nz || !im_row[t].is_zero();
      }
      if (re_nz) rows.push_back(std::move(re_row));
      if (im_nz) rows.push_back(std::move(im_row));
    }
  }

  std::vector<Vec> solution;
  if (rows.empty()) {
    for (std::size_t t = 0; t < np; ++t) {
      Vec e(np);
      e[t] = Scalar(1);
      solution.push_back(std::move(e));
    }
  } else {
    solution = nullspace(rows_matrix(rows));
  }
  // Canonicalise the basis by row reduction over the parameter order. For
  // very large solution spaces the re-reduction is quadratic in the basis
  // size; the raw nullspace basis is already deterministic, so keep it.
  if (!solution.empty() && solution.size() <= 64) {
    Rref r = rref(rows_matrix(solution));
    solution.clear();
    for (std::size_t i = 0; i < r.m.rows(); ++i) {
      Vec v(np);
      for (std::size_t t = 0; t < np; ++t) v[t] = r.m.at(i, t);
      solution.push_back(std::move(v));
    }
  }

  HermitianSpace space;
  space.party = party;
  space.dim = d;
  space.dim_space = solution.size();
  for (const Vec& params : solution) space.basis.push_back(hermitian_from_params(params, d));
  if (space.basis.empty()) throw Error("internal: constraint space lost the identity");
  return ConstraintDerivation{std::move(space), std::move(records)};
}

bool only_trivial(const HermitianSpace& space) { return space.dim_space == 1; }

IrreducibilityReport is_locally_irreducible(const StateSet& s) {
  IrreducibilityReport rep;
  rep.party_only_trivial.resize(s.num_parties());
  for (std::size_t p = 0; p < s.num_parties(); ++p)
    rep.party_only_trivial[p] = only_trivial(derive_constraint_space(s, p).space);
  if (s.size() < 2) {
    rep.singleton_convention = true;
    rep.locally_irreducible = false;
    return rep;
  }
  rep.locally_irreducible = true;
  for (bool t : rep.party_only_trivial) rep.locally_irreducible = rep.locally_irreducible && t;
  return rep;
}

}  // namespace opset
