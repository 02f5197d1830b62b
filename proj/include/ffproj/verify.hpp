#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ffproj/bigint.hpp"
#include "ffproj/families.hpp"
#include "ffproj/project.hpp"
#include "ffproj/rational.hpp"
#include "ffproj/report.hpp"

namespace ffproj {

enum class BoundName { ChenInduced, Line, Bourgain, Improvement, Planar, Lpv };

BoundName bound_name_from_string(const std::string& s);
std::string to_string(BoundName name);

// Parameters of a named projection lower bound.  Which fields are required
// depends on the name; bound_report validates on use (the Bourgain exponent
// must satisfy eps < 1/(4n(n-1)(2n)^(n-2)), exactly in rationals).
struct BoundSpec {
  BoundName name;
  std::optional<Rational> eps;
  std::optional<Rational> delta;
  std::optional<std::uint64_t> d;
};

// Exceptional-set bounds with explicit constants, checked exactly.  The
// three statements cover |K| <= p^m, |K| > p^m, |K| > p^(2m); when the size
// hypothesis is unmet the counts are still reported but nothing is asserted
// (pass stays empty).
Report chen_verify(const PointSet& k, std::size_t m, int statement,
                   std::uint64_t budget = kDefaultBudget);

// max_W |pi^W(K)| over the family against the named lower bound; ratios
// only, never asserted (the bounds carry implicit constants).  Hypothesis
// flags are computed exactly in integers.
Report bound_report(const PointSet& k, const SubspaceFamily& e,
                    const BoundSpec& spec, std::uint64_t budget = kDefaultBudget);

// For each divisor d != 1 of n, reports whether the Bourgain-type ratio
// reached 1 for every tested codimension m not divisible by d.
Report divisor_scan(const PointSet& k,
                    const std::map<std::size_t, SubspaceFamily>& e_by_m,
                    const Rational& eps, std::uint64_t budget = kDefaultBudget);

struct SequenceStep {
  std::uint64_t value;
  std::string rule;  // "member", "sum", "sum_minus_n"
  std::vector<std::uint64_t> from;
};

struct SequenceResult {
  bool reachable;
  std::vector<SequenceStep> path;       // ends at 1 when reachable
  std::optional<std::uint64_t> divisor;  // d != 1 dividing n otherwise
};

// Closure of S inside [1, n-1] under a+b and a+b-n; reachable iff 1 is in
// the closure, which happens iff gcd(S u {n}) = 1.
SequenceResult sequence_reduce(std::uint64_t n,
                               const std::vector<std::uint64_t>& s);

Report sequence_report(std::uint64_t n, const std::vector<std::uint64_t>& s);

// |pi^(W1 cap W2)(K)| <= |pi^(W1)(K)| |pi^(W2)(K)|, asserted exactly.
Report intersection_bound_check(const PointSet& k, const Subspace& w1,
                                const Subspace& w2);

// |K|^3 <= |pi^(W1)(K)| |pi^(W2)(K)| sum over fibers of pi^(W1+W2) of
// |fiber|^2, asserted exactly; needs W1 transverse to W2.
Report fiber_square_check(const PointSet& k, const Subspace& w1,
                     const Subspace& w2);

// Dyadic refinement K' of K along W1 + W2:  |K'| >= |K|/(floor(log2|K|)+1)
// and |pi^(W1+W2)(K')| <= 4 M1 M2 / |K'| with M_i = |pi^(W_i)(K)|.
Report sum_bound_check(const PointSet& k, const Subspace& w1,
                       const Subspace& w2);

// The two hypotheses of the improvement machinery: (a) every line in
// Gr(n, 1) is transverse to some member (equivalent to the small-line-set
// form for any positive line budget), (b) every subspace of dimension at
// most d is transverse to some member.  Levels are decided by enumeration
// when the Grassmannian fits the budget and by exact subspace counting
// otherwise; undecidable levels raise Budget.
Report improvement_hypotheses(const std::vector<SubspaceFamily>& e_by_dim,
                              std::uint64_t k, std::size_t d,
                              std::uint64_t budget = kDefaultBudget);

}  // namespace ffproj
