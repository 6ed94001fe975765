#pragma once

#include <vector>

#include "bgpoly/bigint.hpp"

namespace bgpoly::detail {

using IntVec = std::vector<Int>;

// Output of the exact dual description of cone{(1, p) : p generator}.
// `lineality` spans the directions orthogonal (in the pairing sense) to every
// homogenized generator; `rays` are the extreme rays of the polar cone, each a
// valid inequality on the polytope. Both use primitive integer vectors and a
// deterministic order.
struct DualDescription {
  int rank = 0;  // dimension of the span of the homogenized generators
  std::vector<IntVec> lineality;
  std::vector<IntVec> rays;
};

// Double description run over the rows: computes the extreme rays of
// {y : row . y >= 0 for all rows}. Exact rational arithmetic throughout.
DualDescription dual_cone_rays(const std::vector<IntVec>& rows);

// Divides by the (positive) gcd of the entries.
IntVec make_primitive(IntVec v);

}  // namespace bgpoly::detail
