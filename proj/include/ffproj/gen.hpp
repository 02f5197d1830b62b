#pragma once

#include <cstdint>
#include <vector>

#include "ffproj/families.hpp"
#include "ffproj/project.hpp"
#include "ffproj/rng.hpp"

namespace ffproj {

// Uniform sample of `size` distinct points, by rejection.
PointSet random_pointset(Ambient amb, std::size_t size, Rng& rng);

// Cartesian product of per-coordinate value sets.
PointSet product_set(Prime p, const std::vector<std::vector<std::uint32_t>>& factors);

// K = all points of the coordinate subspace spanned by the first d+1 axes,
// E = all lines through the origin inside that subspace.  Every projection
// of K along a member of E has size exactly p^d.
struct ExtremalPair {
  PointSet k;
  SubspaceFamily e;
};
ExtremalPair extremal_pair(Ambient amb, std::size_t d,
                           std::uint64_t budget = kDefaultBudget);

// `count` distinct uniform m-dimensional subspaces.
SubspaceFamily random_family(Ambient amb, std::size_t m, std::size_t count,
                             Rng& rng, std::uint64_t budget = kDefaultBudget);

}  // namespace ffproj
