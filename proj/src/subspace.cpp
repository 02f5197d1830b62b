#include "ffproj/subspace.hpp"

#include <sstream>

namespace ffproj {

Subspace Subspace::from_rref_unchecked(Ambient amb, Matrix basis,
                                       std::vector<std::size_t> pivots) {
  return Subspace(amb, std::move(basis), std::move(pivots));
}

Subspace Subspace::zero(Ambient amb) {
  return Subspace(amb, Matrix(amb.p, 0, amb.n), {});
}

Subspace Subspace::full(Ambient amb) {
  std::vector<std::size_t> piv(amb.n);
  for (std::size_t i = 0; i < amb.n; ++i) piv[i] = i;
  return Subspace(amb, Matrix::identity(amb.p, amb.n), std::move(piv));
}

Subspace Subspace::from_rows(
    Ambient amb, const std::vector<std::vector<std::uint32_t>>& rows) {
  RrefResult rr = rref(Matrix::from_rows(amb.p, rows, amb.n));
  Matrix basis(amb.p, rr.rank, amb.n);
  for (std::size_t r = 0; r < rr.rank; ++r)
    for (std::size_t c = 0; c < amb.n; ++c) basis.set(r, c, rr.r.at(r, c));
  return Subspace(amb, std::move(basis), std::move(rr.pivots));
}

Subspace Subspace::from_vectors(Ambient amb, const std::vector<Vector>& vecs) {
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(vecs.size());
  for (const auto& v : vecs) {
    if (v.ambient() != amb) throw AmbientMismatch("vector ambient mismatch");
    rows.push_back(v.coords());
  }
  return from_rows(amb, rows);
}

bool Subspace::contains(const Vector& v) const {
  if (v.ambient() != amb_) throw AmbientMismatch("vector ambient mismatch");
  std::uint32_t p = amb_.p.value();
  std::vector<std::uint32_t> x = v.coords();
  for (std::size_t i = 0; i < dim(); ++i) {
    std::uint32_t f = x[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t c = 0; c < amb_.n; ++c)
      x[c] = detail::subm(x[c], detail::mulm(f, basis_.at(i, c), p), p);
  }
  for (auto c : x)
    if (c) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.amb_ != amb_) throw AmbientMismatch("subspace ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Subspace Subspace::perp() const {
  RrefResult rr = rref(kernel(basis_));
  Matrix basis(amb_.p, rr.rank, amb_.n);
  for (std::size_t r = 0; r < rr.rank; ++r)
    for (std::size_t c = 0; c < amb_.n; ++c) basis.set(r, c, rr.r.at(r, c));
  return Subspace(amb_, std::move(basis), std::move(rr.pivots));
}

std::vector<Vector> Subspace::elements() const {
  std::uint32_t p = amb_.p.value();
  std::vector<Vector> out;
  std::vector<std::uint32_t> coef(dim(), 0);
  for (;;) {
    std::vector<std::uint32_t> x(amb_.n, 0);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (coef[i] == 0) continue;
      for (std::size_t c = 0; c < amb_.n; ++c)
        x[c] = detail::addm(x[c], detail::mulm(coef[i], basis_.at(i, c), p), p);
    }
    out.emplace_back(amb_, std::move(x));
    std::size_t i = dim();
    while (i > 0) {
      --i;
      if (++coef[i] < p) break;
      coef[i] = 0;
      if (i == 0) return out;
    }
    if (dim() == 0) return out;
  }
}

std::string Subspace::to_literal() const {
  if (dim() == 0) return Vector::zero(amb_).str();
  std::ostringstream out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) out << "; ";
    out << basis_.row_vector(i).str();
  }
  return out.str();
}

Subspace Subspace::parse_literal(Ambient amb, const std::string& text) {
  std::vector<std::vector<std::uint32_t>> rows;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::istringstream in(group);
    std::vector<std::uint32_t> row;
    long long x;
    while (in >> x) {
      if (x < 0 || std::uint64_t(x) >= amb.p.value())
        throw ParseError("coordinate " + std::to_string(x) +
                         " out of range mod " + std::to_string(amb.p.value()));
      row.push_back(std::uint32_t(x));
    }
    if (!in.eof()) throw ParseError("bad subspace literal '" + text + "'");
    if (row.empty()) continue;
    if (row.size() != amb.n)
      throw ParseError("basis vector has " + std::to_string(row.size()) +
                       " coordinates, expected " + std::to_string(amb.n));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty subspace literal");
  return from_rows(amb, rows);
}

bool Subspace::operator<(const Subspace& o) const {
  if (amb_ != o.amb_) throw AmbientMismatch("subspace ambient mismatch");
  if (dim() != o.dim()) return dim() < o.dim();
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < amb_.n; ++c)
      if (basis_.at(r, c) != o.basis_.at(r, c))
        return basis_.at(r, c) < o.basis_.at(r, c);
  return false;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw AmbientMismatch("subspace ambient mismatch");
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.basis().row(i));
  for (std::size_t i = 0; i < b.dim(); ++i) rows.push_back(b.basis().row(i));
  return Subspace::from_rows(a.ambient(), rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  return sum(a.perp(), b.perp()).perp();
}

bool is_transverse(const Subspace& a, const Subspace& b) {
  return intersect(a, b).dim() == 0;
}

}  // namespace ffproj
