#pragma once

#include <string>
#include <vector>

#include "ffproj/fflinalg.hpp"

namespace ffproj {

// Linear subspace of F_p^n, stored as the unique reduced-row-echelon basis.
// Two subspaces are equal exactly when their representations are equal.
class Subspace {
 public:
  static Subspace zero(Ambient amb);
  static Subspace full(Ambient amb);
  static Subspace from_vectors(Ambient amb, const std::vector<Vector>& vecs);
  static Subspace from_rows(Ambient amb,
                            const std::vector<std::vector<std::uint32_t>>& rows);

  const Ambient& ambient() const { return amb_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  Subspace perp() const;

  // All p^dim elements, in lexicographic coefficient order.  Desk scale only.
  std::vector<Vector> elements() const;

  // "a b c; d e f" with one basis vector per ';'-separated group.  The zero
  // subspace prints as a single zero vector.
  std::string to_literal() const;
  static Subspace parse_literal(Ambient amb, const std::string& text);

  bool operator==(const Subspace& o) const {
    return amb_ == o.amb_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  bool operator<(const Subspace& o) const;

 private:
  Subspace(Ambient amb, Matrix basis, std::vector<std::size_t> pivots)
      : amb_(amb), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  friend class GrassmannCursor;
  // Caller promises the matrix is already a reduced echelon basis.
  static Subspace from_rref_unchecked(Ambient amb, Matrix basis,
                                      std::vector<std::size_t> pivots);

  Ambient amb_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);

// Computed through duality: (a cap b) = (a^perp + b^perp)^perp.
Subspace intersect(const Subspace& a, const Subspace& b);

bool is_transverse(const Subspace& a, const Subspace& b);

}  // namespace ffproj
