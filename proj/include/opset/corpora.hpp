// Bundled state sets used throughout the tests and shipped as corpus files.

#pragma once

#include "opset/measurement.hpp"
#include "opset/state_set.hpp"

namespace opset {
namespace corpora {

/// Nine-state complete orthogonal product basis of C3 x C3 built from a
/// domino tiling: |0>(0±1), |0>2, (1±2)|0>, |1>(1±2), |2>1, |2>2.
StateSet s1();

/// Five orthogonal product states in C3 x C6 (incomplete, not a basis of
/// any tensor subspace). Bob's space carries a declared 2x3 split.
StateSet s2();

/// The five-state tiles unextendible product basis of C3 x C3.
StateSet tiles();

/// s2 with a third party pinned to |0> in C2.
StateSet s2_embedded();

/// Standard product basis {|i1...in>} of the given dimensions.
StateSet standard_basis(const std::vector<std::size_t>& dims);

/// Bob's halving measurement on s2: projectors onto span{e0,e1,e2} and
/// span{e3,e4,e5}.
PVM kb();

}  // namespace corpora
}  // namespace opset
