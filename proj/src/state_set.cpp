#include "opset/state_set.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace opset {

const char* to_string(CompletenessTag tag) {
  switch (tag) {
    case CompletenessTag::COMPLETE: return "COMPLETE";
    case CompletenessTag::SUBSPACE_COMPLETE: return "SUBSPACE_COMPLETE";
    case CompletenessTag::INCOMPLETE_NON_SUBSPACE: return "INCOMPLETE_NON_SUBSPACE";
  }
  return "?";
}

void StateSet::validate() const {
  for (std::size_t d : dims)
    if (d == 0) throw DimensionError("party dimension must be positive");
  std::set<std::string> labels;
  for (const ProductState& st : states) {
    if (st.label.empty()) throw ParseError("state with empty label");
    if (!labels.insert(st.label).second)
      throw ParseError("duplicate state label '" + st.label + "'");
    if (st.factors.size() != dims.size())
      throw DimensionError("state '" + st.label + "' has " +
                           std::to_string(st.factors.size()) + " factors, expected " +
                           std::to_string(dims.size()));
    for (std::size_t p = 0; p < dims.size(); ++p) {
      const LocalVector& f = st.factors[p];
      if (f.party != p)
        throw DimensionError("state '" + st.label + "' factor out of party order");
      if (f.coords.size() != dims[p])
        throw DimensionError("state '" + st.label + "' party " + std::to_string(p + 1) +
                             " has length " + std::to_string(f.coords.size()) +
                             ", expected " + std::to_string(dims[p]));
      if (is_zero(f.coords))
        throw DimensionError("state '" + st.label + "' has a zero factor on party " +
                             std::to_string(p + 1));
    }
  }
  for (const auto& [party, split] : splits) {
    if (party >= dims.size()) throw DimensionError("split declared for unknown party");
    if (split.first < 2 || split.second < 2 || split.first * split.second != dims[party])
      throw DimensionError("split " + std::to_string(split.first) + "x" +
                           std::to_string(split.second) + " does not factor dimension " +
                           std::to_string(dims[party]) + " nontrivially");
  }
}

void Bipartition::validate(std::size_t num_parties) const {
  if (group_a.empty() || group_b.empty())
    throw DimensionError("bipartition groups must be nonempty");
  std::set<std::size_t> seen;
  for (std::size_t p : group_a)
    if (p >= num_parties || !seen.insert(p).second)
      throw DimensionError("invalid bipartition group A");
  for (std::size_t p : group_b)
    if (p >= num_parties || !seen.insert(p).second)
      throw DimensionError("bipartition groups overlap or repeat a party");
  if (seen.size() != num_parties)
    throw DimensionError("bipartition does not cover all parties");
}

Scalar inner_product(const LocalVector& u, const LocalVector& v) {
  if (u.party != v.party) throw DimensionError("inner product across different parties");
  if (u.coords.size() != v.coords.size())
    throw DimensionError("inner product length mismatch");
  return inner(u.coords, v.coords);
}

Scalar state_overlap(const ProductState& a, const ProductState& b) {
  Scalar acc(1);
  for (std::size_t p = 0; p < a.factors.size(); ++p) {
    acc = acc * inner_product(a.factors[p], b.factors[p]);
    if (acc.is_zero()) return acc;
  }
  return acc;
}

OrthogonalityReport is_orthogonal_set(const StateSet& s) {
  for (std::size_t i = 0; i < s.states.size(); ++i)
    for (std::size_t j = i + 1; j < s.states.size(); ++j)
      if (!state_overlap(s.states[i], s.states[j]).is_zero())
        return OrthogonalityReport{false, std::make_pair(i, j)};
  return OrthogonalityReport{true, std::nullopt};
}

CompletenessClass classify_completeness(const StateSet& s) {
  OrthogonalityReport rep = is_orthogonal_set(s);
  if (!rep.orthogonal) {
    const auto& [i, j] = *rep.violating_pair;
    throw PreconditionError("classify_completeness requires an orthogonal set; states '" +
                            s.states[i].label + "' and '" + s.states[j].label +
                            "' are not orthogonal");
  }
  std::vector<std::size_t> span_dims;
  for (std::size_t p = 0; p < s.num_parties(); ++p) {
    std::vector<Vec> rows;
    for (const ProductState& st : s.states) rows.push_back(st.factors[p].coords);
    span_dims.push_back(rows.empty() ? 0 : rank(rows_matrix(rows)));
  }
  std::size_t full = 1, span_product = 1;
  for (std::size_t d : s.dims) full *= d;
  for (std::size_t d : span_dims) span_product *= d;
  CompletenessTag tag;
  if (s.size() == full) {
    tag = CompletenessTag::COMPLETE;
  } else if (s.size() == span_product) {
    tag = CompletenessTag::SUBSPACE_COMPLETE;
  } else {
    tag = CompletenessTag::INCOMPLETE_NON_SUBSPACE;
  }
  return CompletenessClass{tag, std::move(span_dims)};
}

namespace {

// Slices of a party vector under a split: kept-subsystem vectors indexed by
// the discarded subsystem's basis. discard_first selects which sub-factor
// is dropped.
std::vector<Vec> split_slices(const Vec& v, const Split& split, bool discard_first) {
  auto [d1, d2] = split;
  std::vector<Vec> slices;
  if (discard_first) {
    for (std::size_t s1 = 0; s1 < d1; ++s1) {
      Vec slice(d2);
      for (std::size_t s2 = 0; s2 < d2; ++s2) slice[s2] = v[s1 * d2 + s2];
      slices.push_back(std::move(slice));
    }
  } else {
    for (std::size_t s2 = 0; s2 < d2; ++s2) {
      Vec slice(d1);
      for (std::size_t s1 = 0; s1 < d1; ++s1) slice[s1] = v[s1 * d2 + s2];
      slices.push_back(std::move(slice));
    }
  }
  return slices;
}

Scalar bystander_product(const ProductState& a, const ProductState& b, std::size_t party) {
  Scalar acc(1);
  for (std::size_t p = 0; p < a.factors.size(); ++p) {
    if (p == party) continue;
    acc = acc * inner_product(a.factors[p], b.factors[p]);
    if (acc.is_zero()) return acc;
  }
  return acc;
}

}  // namespace

bool has_local_redundancy(const StateSet& s, std::size_t party, const Split& split) {
  if (party >= s.num_parties()) throw DimensionError("invalid party index");
  auto [d1, d2] = split;
  if (d1 < 2 || d2 < 2 || d1 * d2 != s.dims[party])
    throw DimensionError("split " + std::to_string(d1) + "x" + std::to_string(d2) +
                         " does not factor dimension " + std::to_string(s.dims[party]) +
                         " nontrivially");
  for (bool discard_first : {true, false}) {
    bool discardable = true;
    for (std::size_t i = 0; i < s.size() && discardable; ++i) {
      for (std::size_t j = i + 1; j < s.size() && discardable; ++j) {
        if (bystander_product(s.states[i], s.states[j], party).is_zero()) continue;
        // Remaining orthogonality lives entirely on this party: the kept
        // parts must have orthogonal reduced supports, i.e. all slice
        // cross-overlaps vanish.
        auto si = split_slices(s.states[i].factors[party].coords, split, discard_first);
        auto sj = split_slices(s.states[j].factors[party].coords, split, discard_first);
        for (const Vec& u : si) {
          for (const Vec& v : sj) {
            if (!inner(u, v).is_zero()) {
              discardable = false;
              break;
            }
          }
          if (!discardable) break;
        }
      }
    }
    if (discardable) return true;
  }
  return false;
}

StateSet flatten(const StateSet& s, const Bipartition& b) {
  b.validate(s.num_parties());
  auto group_dim = [&](const std::vector<std::size_t>& g) {
    std::size_t d = 1;
    for (std::size_t p : g) d *= s.dims[p];
    return d;
  };
  auto group_factor = [&](const ProductState& st, const std::vector<std::size_t>& g,
                          std::size_t party_out) {
    Vec v{Scalar(1)};
    for (std::size_t p : g) v = kron(v, st.factors[p].coords);
    return LocalVector{party_out, std::move(v)};
  };
  StateSet out;
  out.dims = {group_dim(b.group_a), group_dim(b.group_b)};
  for (const ProductState& st : s.states)
    out.states.push_back(ProductState{
        st.label, {group_factor(st, b.group_a, 0), group_factor(st, b.group_b, 1)}});
  return out;
}

std::vector<Bipartition> all_bipartitions(std::size_t num_parties) {
  std::vector<Bipartition> out;
  if (num_parties < 2) return out;
  // Party 0 stays in group A; enumerate subsets of the remaining parties.
  std::size_t rest = num_parties - 1;
  for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << rest); ++mask) {
    Bipartition b;
    b.group_a.push_back(0);
    for (std::size_t k = 0; k < rest; ++k) {
      if (mask & (std::size_t{1} << k))
        b.group_a.push_back(k + 1);
      else
        b.group_b.push_back(k + 1);
    }
    out.push_back(std::move(b));
  }
  return out;
}

namespace {

// Standard-basis subset spanning the same space, if one exists.
std::optional<std::vector<Vec>> coordinate_aligned_basis(const std::vector<Vec>& span,
                                                         std::size_t dim) {
  Mat p = projector_onto(span, dim);
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      if (i == j) continue;
      if (!p.at(i, j).is_zero()) return std::nullopt;
    }
  for (std::size_t i = 0; i < dim; ++i) {
    if (p.at(i, i).is_zero()) continue;
    Vec e(dim);
    e[i] = Scalar(1);
    basis.push_back(std::move(e));
  }
  return basis;
}

}  // namespace

StateSet restrict_to_spans(const StateSet& s) {
  StateSet out;
  out.states.resize(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out.states[i].label = s.states[i].label;
  for (std::size_t p = 0; p < s.num_parties(); ++p) {
    std::vector<Vec> factors;
    for (const ProductState& st : s.states) factors.push_back(st.factors[p].coords);
    std::vector<Vec> basis = gram_schmidt(factors);
    if (auto aligned = coordinate_aligned_basis(basis, s.dims[p])) basis = *aligned;
    out.dims.push_back(basis.empty() ? 1 : basis.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      Vec coords(out.dims[p]);
      if (!basis.empty()) {
        for (std::size_t k = 0; k < basis.size(); ++k)
          coords[k] = inner(basis[k], factors[i]) / Scalar(inner(basis[k], basis[k]));
      }
      out.states[i].factors.push_back(LocalVector{p, std::move(coords)});
    }
  }
  return out;
}

std::string canonical_key(const StateSet& s) {
  std::ostringstream os;
  os << "dims:";
  for (std::size_t d : s.dims) os << d << ",";
  std::vector<std::string> entries;
  for (const ProductState& st : s.states) {
    std::ostringstream e;
    e << st.label << "|";
    for (const LocalVector& f : st.factors) {
      for (const Scalar& c : ray_canonical(f.coords)) e << scalar_to_string(c) << ",";
      e << ";";
    }
    entries.push_back(e.str());
  }
  std::sort(entries.begin(), entries.end());
  for (const std::string& e : entries) os << e << "\n";
  return os.str();
}

}  // namespace opset
