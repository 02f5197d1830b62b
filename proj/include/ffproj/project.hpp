#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ffproj/families.hpp"
#include "ffproj/subspace.hpp"

namespace ffproj {

// Finite set of points in F_p^n, kept sorted and deduplicated.
class PointSet {
 public:
  explicit PointSet(Ambient amb) : amb_(amb) {}
  PointSet(Ambient amb, std::vector<Vector> points);

  const Ambient& ambient() const { return amb_; }
  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  const std::vector<Vector>& points() const { return pts_; }
  const Vector& operator[](std::size_t i) const { return pts_[i]; }
  bool contains(const Vector& v) const;

  bool operator==(const PointSet& o) const {
    return amb_ == o.amb_ && pts_ == o.pts_;
  }

 private:
  Ambient amb_;
  std::vector<Vector> pts_;
};

// The whole space F_p^n as a point set; desk scale only.
PointSet full_grid(Ambient amb);

// The set of points of a subspace.
PointSet subspace_points(const Subspace& w);

// The unique coset representative of x + W with zeros in W's pivot columns.
Vector coset_rep(const Vector& x, const Subspace& w);

// Image of K under the quotient projection along W, with its fibers.
// |image| is the number of cosets of W meeting K; fibers partition K.
struct ProjectionImage {
  Subspace w;
  std::vector<Vector> representatives;          // sorted
  std::map<Vector, PointSet> fibers;            // representative -> fiber
  std::size_t size() const { return representatives.size(); }
};

ProjectionImage project(const PointSet& k, const Subspace& w);

// Convenience: |project(k, w)|.
std::size_t projection_size(const PointSet& k, const Subspace& w);

enum class ExceptionalMode { AtMost, NotFull };

// All W in Gr(n, n - m) whose projection image of K is small: size <=
// threshold (AtMost) or size != p^m (NotFull).  K must be nonempty and
// 1 <= m <= n - 1.
SubspaceFamily exceptional_set(const PointSet& k, std::size_t m,
                               std::uint64_t threshold, ExceptionalMode mode,
                               std::uint64_t budget = kDefaultBudget);

// Raised by nice_basis when the hyperplanes share a line; carries a witness
// line contained in every input.
class CommonLine : public Error {
 public:
  CommonLine(const std::string& what, Subspace witness)
      : Error(what), witness_(std::move(witness)) {}
  const Subspace& witness() const { return witness_; }

 private:
  Subspace witness_;
};

// Given hyperplanes W_1..W_n with trivial common intersection, returns
// v_1..v_n where v_i spans the line cap_{j != i} W_j.  Then v_i lies in W_j
// exactly when i != j, and the v_i form a basis.
std::vector<Vector> nice_basis(const std::vector<Subspace>& ws);

struct DyadicSlice {
  PointSet refined;
  std::uint64_t level;  // fibers of the refined set have size in [2^l, 2^(l+1))
};

// Keeps the fibers of project(k, w) whose size class [2^l, 2^(l+1)) carries
// the most points; ties resolved toward the smaller class.  The result holds
// at least |K| / (floor(log2 |K|) + 1) points.
DyadicSlice dyadic_refine(const PointSet& k, const Subspace& w);

// Fibers of the projection along U, i.e. the partition of K into slices
// K cap (x + U), keyed by coset representative.
std::map<Vector, PointSet> slice_decompose(const PointSet& k,
                                           const Subspace& u);

// Coordinates of K in a frame f_1..f_n (must be a basis): component i of the
// output collects the i-th coefficients.  |A_i| equals the projection size
// of K along span(frame minus f_i).
std::vector<std::vector<Scalar>> bounding_product(
    const PointSet& k, const std::vector<Vector>& frame);

// Coefficients of (x - origin) for every x in K in the given independent
// frame vectors; K must lie in origin + span(frame).
PointSet express_in_frame(const PointSet& k, const Vector& origin,
                          const std::vector<Vector>& frame);

}  // namespace ffproj
