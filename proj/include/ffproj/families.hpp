#pragma once

#include <optional>
#include <vector>

#include "ffproj/grassmann.hpp"
#include "ffproj/rational.hpp"
#include "ffproj/subspace.hpp"

namespace ffproj {

// Finite collection of distinct subspaces of one common dimension.  May be
// empty; the member dimension is carried even then.
class SubspaceFamily {
 public:
  SubspaceFamily(Ambient amb, std::size_t member_dim,
                 std::vector<Subspace> members = {});

  const Ambient& ambient() const { return amb_; }
  std::size_t member_dim() const { return mdim_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Subspace>& members() const { return members_; }
  const Subspace& operator[](std::size_t i) const { return members_[i]; }
  bool contains(const Subspace& w) const;

 private:
  Ambient amb_;
  std::size_t mdim_;
  std::vector<Subspace> members_;  // sorted, deduplicated
};

struct NondegeneracyResult {
  bool nondegenerate;
  // On failure, a V in Gr(n, n - m) meeting every member nontrivially.
  std::optional<Subspace> witness;
};

// E is non-degenerate when every V in Gr(n, n - m) is transverse to some
// member.  Exhaustive over V, with the last successful member tried first.
NondegeneracyResult is_nondegenerate(const SubspaceFamily& e,
                                     std::uint64_t budget = kDefaultBudget);

struct NonconcentrationResult {
  bool holds;
  Subspace worst_v;
  std::uint64_t worst_count;
};

// Checks max_V |{W in E : W meets V}| <= p^(-kappa) |E| with kappa rational,
// compared exactly.  Always reports the maximizing V.
NonconcentrationResult nonconcentration_check(
    const SubspaceFamily& e, const Rational& kappa,
    std::uint64_t budget = kDefaultBudget);

// Intersection of all members; EmptyFamily when there are none.
Subspace common_intersection(const SubspaceFamily& e);

// {W1 + W2 : W1 in E1, W2 in E2, W1 transverse to W2}.  Member dimensions
// must satisfy m1 + m2 < n.
SubspaceFamily sum_family(const SubspaceFamily& e1, const SubspaceFamily& e2);

// {W1 cap W2 : dim(W1 cap W2) = m1 + m2 - n}.  Requires m1 + m2 > n.
SubspaceFamily cap_family(const SubspaceFamily& e1, const SubspaceFamily& e2);

SubspaceFamily perp_family(const SubspaceFamily& e);

// All coordinate subspaces span{e_i : i in S}, |S| = m.
SubspaceFamily coordinate_family(Ambient amb, std::size_t m);

}  // namespace ffproj
