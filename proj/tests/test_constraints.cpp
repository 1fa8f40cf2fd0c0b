#include "doctest.h"
#include "opset/constraints.hpp"
#include "opset/corpora.hpp"
#include "support/random_sets.hpp"

using namespace opset;

namespace {

Mat diag3(long a, long b, long c) {
  Mat m(3, 3);
  m.at(0, 0) = Scalar(Rational(a));
  m.at(1, 1) = Scalar(Rational(b));
  m.at(2, 2) = Scalar(Rational(c));
  return m;
}

// Independent dense elimination over the raw constraint rows, used to
// cross-check the solver's dimension count.
std::size_t oracle_space_dim(const StateSet& s, std::size_t party) {
  std::size_t d = s.dims[party];
  std::size_t np = d * d;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      Scalar beta(1);
      for (std::size_t p = 0; p < s.num_parties(); ++p) {
        if (p == party) continue;
        beta = beta * inner(s.states[i].factors[p].coords, s.states[j].factors[p].coords);
      }
      if (beta.is_zero()) continue;
      const Vec& ai = s.states[i].factors[party].coords;
      const Vec& aj = s.states[j].factors[party].coords;
      std::vector<Scalar> coeff(np);
      for (std::size_t k = 0; k < d; ++k) coeff[k] = ai[k].conj() * aj[k];
      std::size_t idx = d;
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = k + 1; l < d; ++l) {
          Scalar ckl = ai[k].conj() * aj[l];
          Scalar clk = ai[l].conj() * aj[k];
          coeff[idx] = ckl + clk;
          coeff[idx + 1] = (ckl - clk) * Scalar(Rational(0), Rational(1));
          idx += 2;
        }
      std::vector<Rational> re(np), im(np);
      for (std::size_t t = 0; t < np; ++t) {
        re[t] = coeff[t].re;
        im[t] = coeff[t].im;
      }
      rows.push_back(std::move(re));
      rows.push_back(std::move(im));
    }
  // Plain fraction elimination.
  std::size_t r = 0;
  for (std::size_t c = 0; c < np && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = 0; j < np; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return np - r;
}

bool satisfies_all_constraints(const StateSet& s, std::size_t party, const Mat& h) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      Scalar beta(1);
      for (std::size_t p = 0; p < s.num_parties(); ++p) {
        if (p == party) continue;
        beta = beta * inner(s.states[i].factors[p].coords, s.states[j].factors[p].coords);
      }
      if (beta.is_zero()) continue;
      if (!inner(s.states[i].factors[party].coords,
                 h * s.states[j].factors[party].coords)
               .is_zero())
        return false;
    }
  return true;
}

}  // namespace

TEST_CASE("first party of the domino basis: two-dimensional diagonal space") {
  ConstraintDerivation d = derive_constraint_space(corpora::s1(), 0);
  CHECK(d.space.dim_space == 2);
  REQUIRE(d.space.basis.size() == 2);
  CHECK(d.space.basis[0] == diag3(1, 0, 0));
  CHECK(d.space.basis[1] == diag3(0, 1, 1));
  CHECK_FALSE(only_trivial(d.space));
}

TEST_CASE("second party of the domino basis admits only trivial measurements") {
  // Going second-party-first, the pairwise constraints force every
  // off-diagonal entry to zero and all diagonal entries equal.
  ConstraintDerivation d = derive_constraint_space(corpora::s1(), 1);
  CHECK(d.space.dim_space == 1);
  CHECK(only_trivial(d.space));
  CHECK(d.space.basis[0] == diag3(1, 1, 1));
}

TEST_CASE("standard 2x2 product basis constrains to diagonal operators") {
  StateSet s = corpora::standard_basis({2, 2});
  ConstraintDerivation d = derive_constraint_space(s, 0);
  CHECK(d.space.dim_space == 2);
  Mat e00(2, 2), e11(2, 2);
  e00.at(0, 0) = Scalar(1);
  e11.at(1, 1) = Scalar(1);
  CHECK(d.space.basis[0] == e00);
  CHECK(d.space.basis[1] == e11);
  CHECK(oracle_space_dim(s, 0) == 2);
}

TEST_CASE("tiles: both parties fully constrained") {
  StateSet tiles = corpora::tiles();
  for (std::size_t p = 0; p < 2; ++p) {
    ConstraintDerivation d = derive_constraint_space(tiles, p);
    CHECK(d.space.dim_space == 1);
    CHECK(only_trivial(d.space));
  }
  CHECK(is_locally_irreducible(tiles).locally_irreducible);
}

TEST_CASE("active records match nonzero bystander overlaps") {
  ConstraintDerivation d = derive_constraint_space(corpora::s2(), 1);
  std::size_t active = 0;
  for (const ConstraintRecord& r : d.records) {
    CHECK(r.active == !r.bystander_overlap.is_zero());
    active += r.active ? 1 : 0;
  }
  CHECK(active == 5);
  CHECK(d.records.size() == 10);
}

TEST_CASE("every basis element satisfies every constraint exactly") {
  for (const StateSet& s : {corpora::s1(), corpora::s2(), corpora::tiles()}) {
    for (std::size_t p = 0; p < s.num_parties(); ++p) {
      ConstraintDerivation d = derive_constraint_space(s, p);
      for (const Mat& b : d.space.basis) {
        CHECK(b.is_hermitian());
        CHECK(satisfies_all_constraints(s, p, b));
      }
      CHECK(satisfies_all_constraints(s, p, Mat::identity(s.dims[p])));
    }
  }
}

TEST_CASE("identity is always inside the solved space") {
  // dim parameters of the identity solve the same system, so the RREF'd
  // basis must reproduce it by a rational combination; verify via rank.
  StateSet s = corpora::s2();
  for (std::size_t p = 0; p < 2; ++p) {
    ConstraintDerivation d = derive_constraint_space(s, p);
    std::vector<Vec> rows;
    for (const Mat& b : d.space.basis) {
      Vec flat;
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
          flat.push_back(Scalar(b.at(i, j).re));
          flat.push_back(Scalar(b.at(i, j).im));
        }
      rows.push_back(std::move(flat));
    }
    Mat id = Mat::identity(s.dims[p]);
    Vec flat_id;
    for (std::size_t i = 0; i < id.rows(); ++i)
      for (std::size_t j = 0; j < id.cols(); ++j) {
        flat_id.push_back(Scalar(id.at(i, j).re));
        flat_id.push_back(Scalar(id.at(i, j).im));
      }
    CHECK(in_span(rows, flat_id));
  }
}

TEST_CASE("solver dimension matches the independent dense solve on random sets") {
  testsupport::Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    StateSet basis = testsupport::random_complete_basis_2p(3, 3, rng);
    StateSet s = testsupport::random_subset(basis, 1 + trial % 6, rng);
    for (std::size_t p = 0; p < 2; ++p) {
      ConstraintDerivation d = derive_constraint_space(s, p);
      CHECK(d.space.dim_space == oracle_space_dim(s, p));
    }
  }
}

TEST_CASE("adding a state never enlarges the space") {
  testsupport::Rng rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    StateSet basis = testsupport::random_complete_basis_2p(3, 3, rng);
    StateSet small = testsupport::random_subset(basis, 4, rng);
    StateSet bigger = small;
    for (const ProductState& st : basis.states) {
      bool present = false;
      for (const ProductState& have : small.states) present = present || have.label == st.label;
      if (!present) {
        bigger.states.push_back(st);
        break;
      }
    }
    for (std::size_t p = 0; p < 2; ++p)
      CHECK(derive_constraint_space(bigger, p).space.dim_space <=
            derive_constraint_space(small, p).space.dim_space);
  }
}

TEST_CASE("singleton sets report reducible by convention") {
  StateSet s = corpora::s1();
  s.states.resize(1);
  IrreducibilityReport rep = is_locally_irreducible(s);
  CHECK_FALSE(rep.locally_irreducible);
  CHECK(rep.singleton_convention);
}

TEST_CASE("one-dimensional parties are trivially constrained") {
  StateSet s;
  s.dims = {1, 2};
  for (int k = 0; k < 2; ++k) {
    ProductState st;
    st.label = "u" + std::to_string(k);
    Vec a{Scalar(1)};
    Vec b(2);
    b[k] = Scalar(1);
    st.factors = {LocalVector{0, a}, LocalVector{1, b}};
    s.states.push_back(std::move(st));
  }
  HermitianSpace space = derive_constraint_space(s, 0).space;
  CHECK(only_trivial(space));
}

TEST_CASE("the domino basis is reducible through its first party") {
  CHECK_FALSE(is_locally_irreducible(corpora::s1()).locally_irreducible);
  IrreducibilityReport rep = is_locally_irreducible(corpora::s1());
  CHECK_FALSE(rep.party_only_trivial[0]);
  CHECK(rep.party_only_trivial[1]);
}
