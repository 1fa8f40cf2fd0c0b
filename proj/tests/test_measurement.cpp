#include <algorithm>

#include "doctest.h"
#include "opset/corpora.hpp"
#include "opset/measurement.hpp"
#include "support/random_sets.hpp"

using namespace opset;

namespace {

Vec ev(std::size_t dim, std::initializer_list<std::pair<std::size_t, long>> entries) {
  Vec v(dim);
  for (auto [i, x] : entries) v[i] = Scalar(Rational(x));
  return v;
}

std::vector<std::string> labels(const StateSet& s) {
  std::vector<std::string> ls;
  for (const ProductState& st : s.states) ls.push_back(st.label);
  return ls;
}

}  // namespace

TEST_CASE("projecting the domino basis onto |0> keeps exactly the first tile") {
  StateSet s1 = corpora::s1();
  Projector p(0, {ev(3, {{0, 1}})}, 3);
  OutcomeResult res = apply_projector(s1, p);
  CHECK(labels(res.survivors) == std::vector<std::string>{"psi1", "psi2", "psi3"});
  CHECK(res.eliminated_labels.size() == 6);
  CHECK(res.closure == Closure::SUBSET);
  // Survivors are literally members: projections fixed each factor.
  for (std::size_t i = 0; i < res.survivors.size(); ++i)
    for (std::size_t p2 = 0; p2 < 2; ++p2)
      CHECK(res.survivors.states[i].factors[p2].coords ==
            s1.states[i].factors[p2].coords);
}

TEST_CASE("halving measurement on the incomplete corpus creates new directions") {
  StateSet s2 = corpora::s2();
  PVM kb = corpora::kb();
  OutcomeResult res = apply_projector(s2, kb.elements[0]);
  CHECK(res.survivors.size() == 5);
  CHECK(res.closure == Closure::NEW_DIRECTIONS);
  // First survivor's measured factor is |0-1⟩ in ambient coordinates.
  CHECK(res.survivors.states[0].factors[1].coords ==
        ev(6, {{0, 1}, {1, -1}}));
  // The support view lives in 3x3 and equals the tiles geometry.
  CHECK(res.restricted.dims == std::vector<std::size_t>{3, 3});
  StateSet tiles = corpora::tiles();
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t p = 0; p < 2; ++p)
      CHECK(res.restricted.states[i].factors[p].coords ==
            tiles.states[i].factors[p].coords);
}

TEST_CASE("full-space projector is the identity outcome") {
  StateSet s1 = corpora::s1();
  Projector full(0, {ev(3, {{0, 1}}), ev(3, {{1, 1}}), ev(3, {{2, 1}})}, 3);
  OutcomeResult res = apply_projector(s1, full);
  CHECK(res.survivors.size() == s1.size());
  CHECK(res.eliminated_labels.empty());
  CHECK(res.closure == Closure::SUBSET);
}

TEST_CASE("applying the same projector twice is idempotent") {
  StateSet s2 = corpora::s2();
  Projector p = corpora::kb().elements[0];
  OutcomeResult once = apply_projector(s2, p);
  OutcomeResult twice = apply_projector(once.survivors, p);
  CHECK(canonical_key(once.survivors) == canonical_key(twice.survivors));
  CHECK(twice.eliminated_labels.empty());
}

TEST_CASE("orthogonality preservation verdicts") {
  StateSet s1 = corpora::s1();
  PVM good;
  good.party = 0;
  good.elements.emplace_back(0, std::vector<Vec>{ev(3, {{0, 1}})}, 3);
  good.elements.emplace_back(0, std::vector<Vec>{ev(3, {{1, 1}}), ev(3, {{2, 1}})}, 3);
  CHECK(is_orthogonality_preserving(s1, good));

  CHECK(is_orthogonality_preserving(corpora::s2(), corpora::kb()));

  PVM bad;
  bad.party = 0;
  bad.elements.emplace_back(0, std::vector<Vec>{ev(3, {{0, 1}, {1, 1}})}, 3);
  bad.elements.emplace_back(0, std::vector<Vec>{ev(3, {{0, 1}, {1, -1}})}, 3);
  bad.elements.emplace_back(0, std::vector<Vec>{ev(3, {{2, 1}})}, 3);
  CHECK_FALSE(is_orthogonality_preserving(s1, bad));
  // Independent check of the violation: psi1 and psi6 both survive the
  // first element with proportional first factors and overlapping second
  // factors.
  OutcomeResult res = apply_projector(s1, bad.elements[0]);
  const ProductState* a = nullptr;
  const ProductState* b = nullptr;
  for (const ProductState& st : res.survivors.states) {
    if (st.label == "psi1") a = &st;
    if (st.label == "psi6") b = &st;
  }
  REQUIRE(a);
  REQUIRE(b);
  CHECK(proportional(a->factors[0].coords, b->factors[0].coords));
  CHECK_FALSE(state_overlap(*a, *b).is_zero());
}

TEST_CASE("enumeration on the domino basis: one nontrivial measurement per party") {
  PvmEnumeration en = enumerate_op_pvms(corpora::s1(), 0);
  CHECK(en.complete);
  REQUIRE(en.pvms.size() == 1);
  const PVM& m = en.pvms[0];
  REQUIRE(m.elements.size() == 2);
  CHECK(m.elements[0].rank() == 1);
  CHECK(m.elements[1].rank() == 2);
  CHECK(m.elements[0].matrix() == projector_onto({ev(3, {{0, 1}})}, 3));
  CHECK(m.elements[1].matrix() ==
        projector_onto({ev(3, {{1, 1}}), ev(3, {{2, 1}})}, 3));

  PvmEnumeration bob = enumerate_op_pvms(corpora::s1(), 1);
  CHECK(bob.complete);
  CHECK(bob.pvms.empty());
}

TEST_CASE("enumeration on tiles is empty and provably complete") {
  for (std::size_t p = 0; p < 2; ++p) {
    PvmEnumeration en = enumerate_op_pvms(corpora::tiles(), p);
    CHECK(en.complete);
    CHECK(en.pvms.empty());
  }
}

TEST_CASE("enumeration on the standard 2x2 basis finds the coordinate measurement") {
  StateSet s = corpora::standard_basis({2, 2});
  PvmEnumeration en = enumerate_op_pvms(s, 0);
  CHECK(en.complete);
  REQUIRE(en.pvms.size() == 1);
  CHECK(en.pvms[0].elements.size() == 2);
  CHECK(en.pvms[0].elements[0].matrix() == projector_onto({ev(2, {{0, 1}})}, 2));
}

TEST_CASE("enumeration on the incomplete corpus includes the halving measurement") {
  PvmEnumeration en = enumerate_op_pvms(corpora::s2(), 1);
  CHECK_FALSE(en.complete);  // noncommutative constraint space
  PVM kb = corpora::kb();
  std::string want = pvm_key(kb);
  bool found = false;
  for (const PVM& m : en.pvms) found = found || pvm_key(m) == want;
  CHECK(found);
  for (const PVM& m : en.pvms) {
    std::size_t rank_sum = 0;
    for (const Projector& e : m.elements) rank_sum += e.rank();
    CHECK(rank_sum == 6);
    CHECK(is_orthogonality_preserving(corpora::s2(), m));
    CHECK(m.nontrivial());
  }
  // The halving measurement is the first two-element candidate.
  for (const PVM& m : en.pvms) {
    if (m.elements.size() == 2 && m.elements[0].rank() == 3) {
      CHECK(pvm_key(m) == want);
      break;
    }
  }
}

TEST_CASE("subspace-complete sets keep closure under enumerated measurements") {
  // A complete product basis of a coordinate subspace: outcomes never
  // leave the set, though elements containing the whole local support
  // may keep every state.
  testsupport::Rng rng(19);
  for (int trial = 0; trial < 5; ++trial) {
    StateSet small = testsupport::random_complete_basis_2p(2, 2, rng);
    StateSet s;
    s.dims = {3, 3};
    for (const ProductState& st : small.states) {
      ProductState wide = st;
      for (std::size_t p = 0; p < 2; ++p) {
        Vec v(3);
        for (std::size_t k = 0; k < 2; ++k) v[k] = st.factors[p].coords[k];
        wide.factors[p].coords = std::move(v);
      }
      s.states.push_back(std::move(wide));
    }
    REQUIRE(classify_completeness(s).tag == CompletenessTag::SUBSPACE_COMPLETE);
    for (std::size_t p = 0; p < 2; ++p) {
      for (const PVM& m : enumerate_op_pvms(s, p).pvms) {
        CHECK(is_orthogonality_preserving(s, m));
        for (const Projector& e : m.elements) {
          OutcomeResult res = apply_projector(s, e);
          CHECK(res.closure == Closure::SUBSET);
          CHECK(res.survivors.size() + res.eliminated_labels.size() == s.size());
        }
      }
    }
  }
}

TEST_CASE("every enumerated measurement preserves orthogonality on random bases") {
  testsupport::Rng rng(17);
  for (int trial = 0; trial < 8; ++trial) {
    StateSet basis = testsupport::random_complete_basis_2p(3, 3, rng);
    for (std::size_t p = 0; p < 2; ++p) {
      PvmEnumeration en = enumerate_op_pvms(basis, p);
      for (const PVM& m : en.pvms) {
        CHECK(is_orthogonality_preserving(basis, m));
        for (const Projector& e : m.elements) {
          OutcomeResult res = apply_projector(basis, e);
          CHECK(res.closure == Closure::SUBSET);
          CHECK(res.survivors.size() < basis.size());
          CHECK(res.survivors.size() + res.eliminated_labels.size() == basis.size());
        }
      }
    }
  }
}
