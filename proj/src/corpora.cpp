#include "opset/corpora.hpp"

namespace opset {
namespace corpora {

namespace {

Vec basis_vec(std::size_t dim, std::initializer_list<std::pair<std::size_t, long>> entries) {
  Vec v(dim);
  for (auto [idx, val] : entries) v[idx] = Scalar(val);
  return v;
}

ProductState make_state(const std::string& label, std::vector<Vec> factors) {
  ProductState st;
  st.label = label;
  for (std::size_t p = 0; p < factors.size(); ++p)
    st.factors.push_back(LocalVector{p, std::move(factors[p])});
  return st;
}

}  // namespace

StateSet s1() {
  StateSet s;
  s.dims = {3, 3};
  auto e = [](std::size_t i) { return basis_vec(3, {{i, 1}}); };
  auto plus = [](std::size_t i, std::size_t j) { return basis_vec(3, {{i, 1}, {j, 1}}); };
  auto minus = [](std::size_t i, std::size_t j) { return basis_vec(3, {{i, 1}, {j, -1}}); };
  s.states.push_back(make_state("psi1", {e(0), plus(0, 1)}));
  s.states.push_back(make_state("psi2", {e(0), minus(0, 1)}));
  s.states.push_back(make_state("psi3", {e(0), e(2)}));
  s.states.push_back(make_state("psi4", {plus(1, 2), e(0)}));
  s.states.push_back(make_state("psi5", {minus(1, 2), e(0)}));
  s.states.push_back(make_state("psi6", {e(1), plus(1, 2)}));
  s.states.push_back(make_state("psi7", {e(1), minus(1, 2)}));
  s.states.push_back(make_state("psi8", {e(2), e(1)}));
  s.states.push_back(make_state("psi9", {e(2), e(2)}));
  s.validate();
  return s;
}

StateSet s2() {
  StateSet s;
  s.dims = {3, 6};
  s.splits[1] = Split{2, 3};
  s.notes =
      "Some presentations index this family i=1..10; exactly the five states "
      "below exist and are stored here.";
  auto a = [](std::initializer_list<std::pair<std::size_t, long>> entries) {
    return basis_vec(3, entries);
  };
  auto b = [](std::initializer_list<std::pair<std::size_t, long>> entries) {
    return basis_vec(6, entries);
  };
  s.states.push_back(make_state("phi1", {a({{0, 1}}), b({{0, 1}, {1, -1}, {4, 1}, {5, -1}})}));
  s.states.push_back(make_state("phi2", {a({{2, 1}}), b({{1, 1}, {2, -1}, {5, 1}, {3, -1}})}));
  s.states.push_back(make_state("phi3", {a({{1, 1}, {2, -1}}), b({{0, 1}, {4, -1}})}));
  s.states.push_back(make_state("phi4", {a({{0, 1}, {1, -1}}), b({{2, 1}, {3, -1}})}));
  s.states.push_back(make_state(
      "phi5", {a({{0, 1}, {1, 1}, {2, 1}}),
               b({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}})}));
  s.validate();
  return s;
}

StateSet tiles() {
  StateSet s;
  s.dims = {3, 3};
  auto v = [](std::initializer_list<std::pair<std::size_t, long>> entries) {
    return basis_vec(3, entries);
  };
  s.states.push_back(make_state("t1", {v({{0, 1}}), v({{0, 1}, {1, -1}})}));
  s.states.push_back(make_state("t2", {v({{2, 1}}), v({{1, 1}, {2, -1}})}));
  s.states.push_back(make_state("t3", {v({{1, 1}, {2, -1}}), v({{0, 1}})}));
  s.states.push_back(make_state("t4", {v({{0, 1}, {1, -1}}), v({{2, 1}})}));
  s.states.push_back(make_state("t5", {v({{0, 1}, {1, 1}, {2, 1}}), v({{0, 1}, {1, 1}, {2, 1}})}));
  s.validate();
  return s;
}

StateSet s2_embedded() {
  StateSet base = s2();
  StateSet s;
  s.dims = {3, 6, 2};
  s.splits = base.splits;
  for (const ProductState& st : base.states) {
    ProductState e = st;
    e.factors.push_back(LocalVector{2, basis_vec(2, {{0, 1}})});
    s.states.push_back(std::move(e));
  }
  s.validate();
  return s;
}

StateSet standard_basis(const std::vector<std::size_t>& dims) {
  StateSet s;
  s.dims = dims;
  std::vector<std::size_t> idx(dims.size(), 0);
  bool done = dims.empty();
  while (!done) {
    std::string label = "b";
    ProductState st;
    for (std::size_t p = 0; p < dims.size(); ++p) {
      label += std::to_string(idx[p]);
      st.factors.push_back(LocalVector{p, basis_vec(dims[p], {{idx[p], 1}})});
    }
    st.label = label;
    s.states.push_back(std::move(st));
    std::size_t p = dims.size();
    while (p > 0) {
      --p;
      if (++idx[p] < dims[p]) break;
      idx[p] = 0;
      if (p == 0) done = true;
    }
  }
  s.validate();
  return s;
}

PVM kb() {
  PVM m;
  m.party = 1;
  std::vector<Vec> low, high;
  for (std::size_t k = 0; k < 3; ++k) low.push_back(basis_vec(6, {{k, 1}}));
  for (std::size_t k = 3; k < 6; ++k) high.push_back(basis_vec(6, {{k, 1}}));
  m.elements.emplace_back(1, std::move(low), 6);
  m.elements.emplace_back(1, std::move(high), 6);
  return m;
}

}  // namespace corpora
}  // namespace opset
