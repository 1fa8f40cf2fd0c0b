#include "doctest.h"
#include "opset/corpora.hpp"
#include "opset/state_io.hpp"
#include "opset/state_set.hpp"
#include "support/random_sets.hpp"

using namespace opset;

namespace {

Scalar sc(long re, long im = 0) { return Scalar(Rational(re), Rational(im)); }

Vec rv(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(sc(x));
  return v;
}

// Independent row-reduction rank, kept separate from the library's
// elimination on purpose.
std::size_t oracle_rank(std::vector<Vec> rows) {
  std::size_t r = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar f = rows[i][c] / rows[r][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("inner_product identities") {
  LocalVector u{0, rv({1, 0, 0})};
  CHECK(inner_product(u, u) == sc(1));
  LocalVector a{0, rv({1, 1, 0})};
  LocalVector b{0, rv({1, -1, 0})};
  CHECK(inner_product(a, b).is_zero());
  LocalVector bad{0, rv({1, 0})};
  CHECK_THROWS_AS(inner_product(a, bad), DimensionError);
  LocalVector other_party{1, rv({1, 0, 0})};
  CHECK_THROWS_AS(inner_product(a, other_party), DimensionError);
}

TEST_CASE("the two bundled corpora have orthogonal members") {
  CHECK(is_orthogonal_set(corpora::s1()).orthogonal);
  CHECK(is_orthogonal_set(corpora::s2()).orthogonal);
  CHECK(is_orthogonal_set(corpora::tiles()).orthogonal);
  CHECK(is_orthogonal_set(corpora::s2_embedded()).orthogonal);
}

TEST_CASE("bob factors of the incomplete corpus are orthogonal where required") {
  StateSet s2 = corpora::s2();
  // phi1 vs phi5 on Bob: (1,-1,0,0,1,-1) . (1,1,1,1,1,1) = 0.
  CHECK(inner_product(s2.states[0].factors[1], s2.states[4].factors[1]).is_zero());
}

TEST_CASE("a duplicated state breaks orthogonality with the pair reported") {
  StateSet s = corpora::s1();
  ProductState dup = s.states[0];
  dup.label = "dup";
  s.states.push_back(dup);
  OrthogonalityReport rep = is_orthogonal_set(s);
  CHECK_FALSE(rep.orthogonal);
  REQUIRE(rep.violating_pair.has_value());
  CHECK(rep.violating_pair->first == 0);
  CHECK(rep.violating_pair->second == 9);
}

TEST_CASE("completeness classification of the corpora") {
  CompletenessClass c1 = classify_completeness(corpora::s1());
  CHECK(c1.tag == CompletenessTag::COMPLETE);
  CHECK(c1.local_span_dims == std::vector<std::size_t>{3, 3});

  // The five second-party factors span a 5-dimensional subspace of C6
  // (their joint orthocomplement is the line e1 - e5); frozen from the
  // independent rank oracle below.
  StateSet s2 = corpora::s2();
  {
    std::vector<Vec> rows;
    for (const ProductState& st : s2.states) rows.push_back(st.factors[1].coords);
    CHECK(oracle_rank(rows) == 5);
  }
  CompletenessClass c2 = classify_completeness(s2);
  CHECK(c2.tag == CompletenessTag::INCOMPLETE_NON_SUBSPACE);
  CHECK(c2.local_span_dims == std::vector<std::size_t>{3, 5});

  // Expected span dims for the tiles set, frozen from the independent
  // rank oracle: both parties' stacked factors have rank 3, and 5 < 9.
  StateSet tiles = corpora::tiles();
  for (std::size_t p = 0; p < 2; ++p) {
    std::vector<Vec> rows;
    for (const ProductState& st : tiles.states) rows.push_back(st.factors[p].coords);
    CHECK(oracle_rank(rows) == 3);
  }
  CompletenessClass ct = classify_completeness(tiles);
  CHECK(ct.tag == CompletenessTag::INCOMPLETE_NON_SUBSPACE);
  CHECK(ct.local_span_dims == std::vector<std::size_t>{3, 3});
}

TEST_CASE("complete classification implies a full-rank assembled basis") {
  // Orthogonality plus full cardinality means the assembled product
  // vectors form a basis of the whole space: their stacked Kronecker
  // products have full rank.
  StateSet s1 = corpora::s1();
  REQUIRE(classify_completeness(s1).tag == CompletenessTag::COMPLETE);
  std::vector<Vec> rows;
  for (const ProductState& st : s1.states)
    rows.push_back(kron(st.factors[0].coords, st.factors[1].coords));
  CHECK(rank(rows_matrix(rows)) == 9);
}

TEST_CASE("a product sub-basis is subspace-complete") {
  StateSet s;
  s.dims = {3, 3};
  std::size_t n = 0;
  for (long i = 0; i < 2; ++i)
    for (long j = 0; j < 2; ++j) {
      ProductState st;
      st.label = "q" + std::to_string(n++);
      Vec a(3), b(3);
      a[i] = sc(1);
      b[j] = sc(1);
      st.factors = {LocalVector{0, a}, LocalVector{1, b}};
      s.states.push_back(std::move(st));
    }
  CompletenessClass c = classify_completeness(s);
  CHECK(c.tag == CompletenessTag::SUBSPACE_COMPLETE);
  CHECK(c.local_span_dims == std::vector<std::size_t>{2, 2});
}

TEST_CASE("classification rejects non-orthogonal input") {
  StateSet s = corpora::s1();
  ProductState dup = s.states[0];
  dup.label = "dup";
  s.states.push_back(dup);
  CHECK_THROWS_AS(classify_completeness(s), PreconditionError);
}

TEST_CASE("scale invariance of every predicate") {
  StateSet s = corpora::s2();
  StateSet scaled_set = s;
  Scalar factors[] = {Scalar(Rational(3, 2)), Scalar(Rational(-2)),
                      Scalar(Rational(0), Rational(1)), Scalar(Rational(1, 7))};
  std::size_t k = 0;
  for (ProductState& st : scaled_set.states)
    for (LocalVector& f : st.factors) f.coords = scaled(f.coords, factors[k++ % 4]);
  CHECK(is_orthogonal_set(scaled_set).orthogonal == is_orthogonal_set(s).orthogonal);
  CompletenessClass a = classify_completeness(s);
  CompletenessClass b = classify_completeness(scaled_set);
  CHECK(a.tag == b.tag);
  CHECK(a.local_span_dims == b.local_span_dims);
  CHECK(has_local_redundancy(s, 1, {2, 3}) == has_local_redundancy(scaled_set, 1, {2, 3}));
  CHECK(canonical_key(s) == canonical_key(scaled_set));
}

TEST_CASE("local redundancy: the incomplete corpus is free of it") {
  CHECK_FALSE(has_local_redundancy(corpora::s2(), 1, {2, 3}));
}

TEST_CASE("local redundancy: a constant sub-factor is discardable") {
  // {|i>|j0>} in 2 x (2x2): the second sub-factor of party 2 is constant.
  StateSet s;
  s.dims = {2, 4};
  std::size_t n = 0;
  for (long i = 0; i < 2; ++i)
    for (long j = 0; j < 2; ++j) {
      ProductState st;
      st.label = "r" + std::to_string(n++);
      Vec a(2), b(4);
      a[i] = sc(1);
      b[2 * j + 0] = sc(1);  // |j> ⊗ |0> with split (2,2)
      st.factors = {LocalVector{0, a}, LocalVector{1, b}};
      s.states.push_back(std::move(st));
    }
  CHECK(has_local_redundancy(s, 1, {2, 2}));
}

TEST_CASE("local redundancy rejects impossible splits") {
  CHECK_THROWS_AS(has_local_redundancy(corpora::s2(), 0, {1, 3}), DimensionError);
  CHECK_THROWS_AS(has_local_redundancy(corpora::s2(), 0, {3, 1}), DimensionError);
  CHECK_THROWS_AS(has_local_redundancy(corpora::s2(), 1, {3, 3}), DimensionError);
}

TEST_CASE("flatten of a three-party standard basis") {
  StateSet s = corpora::standard_basis({2, 2, 2});
  Bipartition b{{0}, {1, 2}};
  StateSet flat = flatten(s, b);
  CHECK(flat.dims == std::vector<std::size_t>{2, 4});
  CHECK(flat.size() == 8);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(flat.states[i].label == s.states[i].label);
  CHECK(classify_completeness(flat).tag == CompletenessTag::COMPLETE);
}

TEST_CASE("flatten with the identity bipartition changes nothing") {
  StateSet s = corpora::s2();
  s.splits.clear();  // dims survive, splits are not carried by flatten
  s.notes.clear();
  StateSet flat = flatten(s, Bipartition{{0}, {1}});
  CHECK(serialize_state_set(flat) == serialize_state_set(s));
}

TEST_CASE("flatten preserves pairwise overlaps exactly") {
  testsupport::Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    StateSet s;
    s.dims = {3, 2, 3};
    for (int i = 0; i < 5; ++i)
      s.states.push_back(
          testsupport::random_product_state(s.dims, rng, "p" + std::to_string(i)));
    for (const Bipartition& b : all_bipartitions(3)) {
      StateSet flat = flatten(s, b);
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
          CHECK(state_overlap(flat.states[i], flat.states[j]) ==
                state_overlap(s.states[i], s.states[j]));
    }
  }
}

TEST_CASE("invalid bipartitions are rejected") {
  StateSet s = corpora::standard_basis({2, 2, 2});
  CHECK_THROWS_AS(flatten(s, Bipartition{{0, 1, 2}, {}}), DimensionError);
  CHECK_THROWS_AS(flatten(s, Bipartition{{0, 1}, {1, 2}}), DimensionError);
  CHECK_THROWS_AS(flatten(s, Bipartition{{0}, {1}}), DimensionError);
}

TEST_CASE("restrict_to_spans recovers a coordinate-embedded set") {
  // tiles with Bob's factors embedded into the first three of six dims.
  StateSet tiles = corpora::tiles();
  StateSet embedded;
  embedded.dims = {3, 6};
  for (const ProductState& st : tiles.states) {
    ProductState e = st;
    Vec wide(6);
    for (std::size_t k = 0; k < 3; ++k) wide[k] = st.factors[1].coords[k];
    e.factors[1].coords = std::move(wide);
    embedded.states.push_back(std::move(e));
  }
  StateSet restricted = restrict_to_spans(embedded);
  CHECK(serialize_state_set(restricted) == serialize_state_set(corpora::tiles()));
}

TEST_CASE("all_bipartitions keeps party zero in group A") {
  auto bs = all_bipartitions(3);
  CHECK(bs.size() == 3);
  for (const Bipartition& b : bs) {
    CHECK(b.group_a.front() == 0);
    b.validate(3);
  }
  CHECK(all_bipartitions(2).size() == 1);
  CHECK(all_bipartitions(1).empty());
}
