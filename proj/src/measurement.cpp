#include "opset/measurement.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "opset/spectral.hpp"

namespace opset {

namespace {

std::optional<std::vector<Vec>> coordinate_aligned_basis(const Mat& projector) {
  std::vector<Vec> basis;
  std::size_t dim = projector.rows();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (i != j && !projector.at(i, j).is_zero()) return std::nullopt;
  for (std::size_t i = 0; i < dim; ++i) {
    if (projector.at(i, i).is_zero()) continue;
    Vec e(dim);
    e[i] = Scalar(1);
    basis.push_back(std::move(e));
  }
  return basis;
}

}  // namespace

Projector::Projector(std::size_t party, std::vector<Vec> support, std::size_t dim)
    : party_(party), dim_(dim), support_(std::move(support)) {
  for (const Vec& v : support_)
    if (v.size() != dim) throw DimensionError("projector support vector of wrong length");
  ortho_basis_ = gram_schmidt(support_);
  matrix_ = projector_onto(ortho_basis_, dim);
  if (auto aligned = coordinate_aligned_basis(matrix_)) ortho_basis_ = *aligned;
}

void PVM::validate(std::size_t party_dim) const {
  std::size_t rank_sum = 0;
  for (const Projector& e : elements) {
    if (e.party() != party) throw DimensionError("PVM element on wrong party");
    if (e.dim() != party_dim) throw DimensionError("PVM element of wrong dimension");
    if (e.rank() == 0) throw DimensionError("PVM element with empty support");
    rank_sum += e.rank();
  }
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      for (const Vec& u : elements[i].ortho_basis())
        for (const Vec& v : elements[j].ortho_basis())
          if (!inner(u, v).is_zero())
            throw DimensionError("PVM elements are not mutually orthogonal");
  if (rank_sum != party_dim)
    throw DimensionError("PVM element ranks sum to " + std::to_string(rank_sum) +
                         ", expected " + std::to_string(party_dim));
}

OutcomeResult apply_projector(const StateSet& s, const Projector& p) {
  if (p.party() >= s.num_parties() || p.dim() != s.dims[p.party()])
    throw DimensionError("projector does not match the set's party dimension");
  OutcomeResult out;
  out.survivors.dims = s.dims;
  out.survivors.splits = s.splits;
  out.restricted.dims = s.dims;
  out.restricted.dims[p.party()] = std::max<std::size_t>(p.rank(), 1);

  const auto& basis = p.ortho_basis();
  for (const ProductState& st : s.states) {
    Vec projected = p.matrix() * st.factors[p.party()].coords;
    if (is_zero(projected)) {
      out.eliminated_labels.push_back(st.label);
      continue;
    }
    ProductState surv = st;
    surv.factors[p.party()].coords = projected;
    ProductState rest = st;
    Vec coords(out.restricted.dims[p.party()]);
    for (std::size_t k = 0; k < basis.size(); ++k)
      coords[k] = inner(basis[k], projected) / Scalar(inner(basis[k], basis[k]));
    rest.factors[p.party()].coords = std::move(coords);
    out.survivors.states.push_back(std::move(surv));
    out.restricted.states.push_back(std::move(rest));
  }

  out.closure = Closure::SUBSET;
  for (const ProductState& surv : out.survivors.states) {
    bool member = false;
    for (const ProductState& orig : s.states) {
      bool all_prop = true;
      for (std::size_t q = 0; q < s.num_parties() && all_prop; ++q)
        all_prop = proportional(surv.factors[q].coords, orig.factors[q].coords);
      if (all_prop) {
        member = true;
        break;
      }
    }
    if (!member) {
      out.closure = Closure::NEW_DIRECTIONS;
      break;
    }
  }
  return out;
}

bool is_orthogonality_preserving(const StateSet& s, const PVM& m) {
  for (const Projector& e : m.elements) {
    OutcomeResult outcome = apply_projector(s, e);
    if (!is_orthogonal_set(outcome.survivors).orthogonal) return false;
  }
  return true;
}

std::string pvm_key(const PVM& m) {
  std::vector<std::string> keys;
  for (const Projector& e : m.elements) keys.push_back(span_key(e.ortho_basis()));
  std::sort(keys.begin(), keys.end());
  std::ostringstream os;
  os << m.party << "#";
  for (const std::string& k : keys) os << k << "|";
  return os.str();
}

namespace {

using Block = std::vector<Vec>;  // orthogonal basis of a subspace

struct ActivePair {
  Vec left;   // measured factor of state i
  Vec right;  // measured factor of state j
};

bool element_satisfies(const Mat& projector, const std::vector<ActivePair>& pairs) {
  for (const ActivePair& pr : pairs)
    if (!inner(pr.left, projector * pr.right).is_zero()) return false;
  return true;
}

// All set partitions of {0..n-1} as restricted growth strings, in RGS
// lexicographic order.
void enumerate_partitions(std::size_t n, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> rgs(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t max_used) -> void {
    if (i == n) {
      out.push_back(rgs);
      return;
    }
    for (std::size_t part = 0; part <= max_used + 1; ++part) {
      rgs[i] = part;
      self(self, i + 1, std::max(max_used, part));
    }
  };
  if (n == 0) return;
  rgs[0] = 0;
  rec(rec, 1, 0);
}

// Build a PVM from grouped blocks. Returns nullopt when some element fails
// the constraint check.
std::optional<PVM> pvm_from_parts(std::size_t party, std::size_t dim,
                                  const std::vector<std::vector<const Block*>>& parts,
                                  const std::vector<ActivePair>& pairs) {
  PVM m;
  m.party = party;
  for (const auto& part : parts) {
    std::vector<Vec> support;
    for (const Block* b : part)
      for (const Vec& v : *b) support.push_back(v);
    if (support.empty()) continue;
    Projector e(party, support, dim);
    if (!element_satisfies(e.matrix(), pairs)) return std::nullopt;
    m.elements.push_back(std::move(e));
  }
  if (m.elements.size() < 2) return std::nullopt;  // trivial
  return m;
}

// Emit the PVMs for all ≤6-block partitions of a block system; extra
// trailing blocks (e.g. a dead block) can be forced into their own part.
void emit_partitions(std::size_t party, std::size_t dim, const std::vector<Block>& blocks,
                     const std::vector<ActivePair>& pairs,
                     const std::optional<Block>& tail, bool* capped,
                     std::vector<PVM>& out) {
  if (blocks.empty()) return;
  if (blocks.size() > 6) {
    // Partition lattice too large; keep only the finest decomposition.
    *capped = true;
    std::vector<std::vector<const Block*>> parts;
    for (const Block& b : blocks) parts.push_back({&b});
    if (tail) parts.push_back({&*tail});
    if (auto m = pvm_from_parts(party, dim, parts, pairs)) out.push_back(std::move(*m));
    return;
  }
  std::vector<std::vector<std::size_t>> rgs_list;
  enumerate_partitions(blocks.size(), rgs_list);
  for (const auto& rgs : rgs_list) {
    std::size_t num_parts = *std::max_element(rgs.begin(), rgs.end()) + 1;
    if (num_parts == 1 && !tail) continue;  // single element: trivial
    std::vector<std::vector<const Block*>> parts(num_parts);
    for (std::size_t i = 0; i < blocks.size(); ++i) parts[rgs[i]].push_back(&blocks[i]);
    if (tail) parts.push_back({&*tail});
    if (auto m = pvm_from_parts(party, dim, parts, pairs)) out.push_back(std::move(*m));
  }
}

std::vector<Mat> center_of(const std::vector<Mat>& basis, std::size_t d) {
  // H = sum y_m B_m with [H, B_k] = 0 for all k; real-linear in y.
  std::size_t n = basis.size();
  std::vector<Mat> comm(n * n, Mat(d, d));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = 0; k < n; ++k)
      comm[m * n + k] = basis[m] * basis[k] - basis[k] * basis[m];
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Vec re(n), im(n);
        bool re_nz = false, im_nz = false;
        for (std::size_t m = 0; m < n; ++m) {
          const Scalar& c = comm[m * n + k].at(i, j);
          re[m] = Scalar(c.re);
          im[m] = Scalar(c.im);
          re_nz = re_nz || !re[m].is_zero();
          im_nz = im_nz || !im[m].is_zero();
        }
        if (re_nz) rows.push_back(std::move(re));
        if (im_nz) rows.push_back(std::move(im));
      }
  }
  std::vector<Vec> sol;
  if (rows.empty()) {
    for (std::size_t m = 0; m < n; ++m) {
      Vec e(n);
      e[m] = Scalar(1);
      sol.push_back(std::move(e));
    }
  } else {
    sol = nullspace(rows_matrix(rows));
  }
  std::vector<Mat> center;
  for (const Vec& y : sol) {
    Mat h(d, d);
    for (std::size_t m = 0; m < n; ++m)
      if (!y[m].is_zero()) h = h + basis[m].scaled(Scalar(y[m].re));
    center.push_back(std::move(h));
  }
  return center;
}

}  // namespace

PvmEnumeration enumerate_op_pvms(const StateSet& s, std::size_t party) {
  ConstraintDerivation derivation = derive_constraint_space(s, party);
  const HermitianSpace& space = derivation.space;
  std::size_t d = space.dim;

  PvmEnumeration result;
  if (only_trivial(space)) return result;  // complete: nothing nontrivial exists

  std::vector<ActivePair> pairs;
  for (const ConstraintRecord& r : derivation.records)
    if (r.active)
      pairs.push_back(ActivePair{s.states[r.i].factors[party].coords,
                                 s.states[r.j].factors[party].coords});

  std::vector<PVM> candidates;
  bool capped = false;

  bool commutative = pairwise_commuting(space.basis);
  if (commutative) {
    BlockDecomposition dec = joint_eigenblocks(space.basis, d);
    emit_partitions(party, d, dec.blocks, pairs, std::nullopt, &capped, candidates);
    result.complete = dec.exact && !capped;
  } else {
    result.complete = false;

    // Centre of the constraint space. Extraction is quadratic in the
    // space dimension; weakly constrained spaces (large dim) have trivial
    // centres in practice and are covered by the other families.
    if (space.dim_space <= 32) {
      std::vector<Mat> center = center_of(space.basis, d);
      if (center.size() > 1) {
        BlockDecomposition dec = joint_eigenblocks(center, d);
        emit_partitions(party, d, dec.blocks, pairs, std::nullopt, &capped, candidates);
      }
    }

    // Connected components of the factors' nonorthogonality graph.
    {
      std::vector<Vec> dirs;
      for (const ProductState& st : s.states) {
        Vec c = ray_canonical(st.factors[party].coords);
        if (std::find(dirs.begin(), dirs.end(), c) == dirs.end()) dirs.push_back(c);
      }
      std::vector<std::size_t> comp(dirs.size());
      for (std::size_t i = 0; i < dirs.size(); ++i) comp[i] = i;
      auto root = [&](std::size_t x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
      };
      for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = i + 1; j < dirs.size(); ++j)
          if (!inner(dirs[i], dirs[j]).is_zero()) comp[root(i)] = root(j);
      std::map<std::size_t, std::vector<Vec>> groups;
      for (std::size_t i = 0; i < dirs.size(); ++i) groups[root(i)].push_back(dirs[i]);
      std::vector<Block> blocks;
      std::vector<Vec> all_dirs;
      for (auto& [r, members] : groups) {
        blocks.push_back(gram_schmidt(members));
        for (const Vec& v : members) all_dirs.push_back(v);
      }
      std::vector<Vec> rest = orthogonal_complement(all_dirs, d);
      std::optional<Block> tail;
      if (!rest.empty()) tail = gram_schmidt(rest);
      emit_partitions(party, d, blocks, pairs, tail, &capped, candidates);
    }

    // Coordinate partitions: a part U is admissible iff the profile sums
    // sum_{k in U} conj(a_i[k]) a_j[k] vanish for every active pair.
    {
      std::vector<std::size_t> live, dead;
      for (std::size_t k = 0; k < d; ++k) {
        bool touched = false;
        for (const ProductState& st : s.states)
          touched = touched || !st.factors[party].coords[k].is_zero();
        (touched ? live : dead).push_back(k);
      }
      if (live.size() <= 12 && !live.empty()) {
        std::vector<Vec> profiles(live.size());
        for (std::size_t t = 0; t < live.size(); ++t) {
          Vec prof(pairs.size());
          for (std::size_t pi = 0; pi < pairs.size(); ++pi)
            prof[pi] = pairs[pi].left[live[t]].conj() * pairs[pi].right[live[t]];
          profiles[t] = std::move(prof);
        }
        // Closed subsets of live coordinates (profile sums all zero).
        std::vector<std::vector<std::size_t>> closed;
        for (std::size_t mask = 1; mask < (std::size_t{1} << live.size()); ++mask) {
          Vec sum(pairs.size());
          std::vector<std::size_t> subset;
          for (std::size_t t = 0; t < live.size(); ++t)
            if (mask & (std::size_t{1} << t)) {
              sum = add(sum, profiles[t]);
              subset.push_back(t);
            }
          if (is_zero(sum)) closed.push_back(std::move(subset));
        }
        std::optional<Block> tail;
        if (!dead.empty()) {
          Block b;
          for (std::size_t k : dead) {
            Vec e(d);
            e[k] = Scalar(1);
            b.push_back(std::move(e));
          }
          tail = std::move(b);
        }
        // Exact cover of live coordinates by closed subsets.
        std::vector<std::vector<std::size_t>> parts;
        std::vector<bool> used(live.size(), false);
        std::size_t emitted = 0;
        auto rec = [&](auto&& self, std::size_t covered) -> void {
          if (emitted >= 512) {
            capped = true;
            return;
          }
          if (covered == live.size()) {
            if (parts.size() + (tail ? 1 : 0) < 2) return;
            std::vector<Block> blocks;
            for (const auto& part : parts) {
              Block b;
              for (std::size_t t : part) {
                Vec e(d);
                e[live[t]] = Scalar(1);
                b.push_back(std::move(e));
              }
              blocks.push_back(std::move(b));
            }
            std::vector<std::vector<const Block*>> grouped;
            for (const Block& b : blocks) grouped.push_back({&b});
            if (tail) grouped.push_back({&*tail});
            if (auto m = pvm_from_parts(party, d, grouped, pairs)) {
              candidates.push_back(std::move(*m));
              ++emitted;
            }
            return;
          }
          std::size_t first = 0;
          while (used[first]) ++first;
          for (const auto& subset : closed) {
            if (std::find(subset.begin(), subset.end(), first) == subset.end()) continue;
            bool free = true;
            for (std::size_t t : subset) free = free && !used[t];
            if (!free) continue;
            for (std::size_t t : subset) used[t] = true;
            parts.push_back(subset);
            self(self, covered + subset.size());
            parts.pop_back();
            for (std::size_t t : subset) used[t] = false;
          }
        };
        rec(rec, 0);
      } else if (!live.empty()) {
        capped = true;
      }
    }
  }

  // Deduplicate and order finest-first, then by canonical key.
  std::map<std::string, PVM> unique;
  for (PVM& m : candidates) {
    std::string key = pvm_key(m);
    unique.emplace(std::move(key), std::move(m));
  }
  result.pvms.clear();
  for (auto& [key, m] : unique) result.pvms.push_back(std::move(m));
  std::stable_sort(result.pvms.begin(), result.pvms.end(), [](const PVM& a, const PVM& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() > b.elements.size();
    return pvm_key(a) < pvm_key(b);
  });
  if (capped) result.complete = false;
  return result;
}

}  // namespace opset
