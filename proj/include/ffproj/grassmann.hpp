#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ffproj/bigint.hpp"
#include "ffproj/rng.hpp"
#include "ffproj/subspace.hpp"

namespace ffproj {

inline constexpr std::uint64_t kDefaultBudget = 1000000;

// Number of m-dimensional subspaces of F_p^n (Gaussian binomial).
// Throws RangeError when m is outside [0, n] or the count overflows 64 bits.
std::uint64_t gr_count(std::size_t n, std::size_t m, Prime p);

// The same count without the 64-bit ceiling; q-Pascal recurrence.
BigUint gr_count_big(std::size_t n, std::size_t m, Prime p);

// Streams every element of Gr(n, m) exactly once.  Order: echelon pivot
// patterns sorted by their column indicator strings (so for lines the
// all-but-last pattern comes first), free entries in odometer order with the
// last free position moving fastest.
class GrassmannCursor {
 public:
  GrassmannCursor(Ambient amb, std::size_t m);
  std::optional<Subspace> next();

 private:
  Ambient amb_;
  std::size_t m_;
  std::vector<std::vector<std::size_t>> patterns_;
  std::size_t pattern_idx_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> free_pos_;
  std::vector<std::uint32_t> odo_;
  bool cell_open_ = false;
};

// Materializes the full enumeration; throws BudgetExceeded when the
// Grassmannian is larger than the budget.
std::vector<Subspace> gr_enumerate(Ambient amb, std::size_t m,
                                   std::uint64_t budget = kDefaultBudget);

// Visits every element without materializing; same order and budget rule.
void gr_for_each(Ambient amb, std::size_t m,
                 const std::function<void(const Subspace&)>& fn,
                 std::uint64_t budget = kDefaultBudget);

// Uniform over Gr(n, m) by rejection on random m x n matrices of full rank.
Subspace gr_sample_uniform(Ambient amb, std::size_t m, Rng& rng);

struct IntersectingCount {
  std::uint64_t exact;
  std::uint64_t bound;  // p^(m'-1+(m-1)(n-m))
};

// |{W in Gr(n, m) : W meets V nontrivially}| for dim V = m', m + m' <= n.
// Exact value by enumeration when the Grassmannian fits the budget, and by
// the complement identity |transverse| = p^(m m') * count(n - m', m) when it
// does not; the two routes agree and are cross-checked in the tests.
IntersectingCount gr_count_intersecting(const Subspace& v, std::size_t m,
                                        std::uint64_t budget = kDefaultBudget);

}  // namespace ffproj
